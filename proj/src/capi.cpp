#include "kzi/kzi.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "kzi/checks.hpp"
#include "kzi/closure.hpp"
#include "kzi/error.hpp"
#include "kzi/serialize.hpp"
#include "kzi/transport.hpp"

struct kzi_series {
  kzi::HorizontalSeries series;
  double error_estimate;
};

struct kzi_link {
  struct Term {
    std::string label;
    int degree;
    kzi::Coefficient value;
  };
  kzi::ClosureResult closure;
  std::vector<Term> terms;
};

namespace {

thread_local std::string last_error;

template <class F>
kzi_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return KZI_OK;
  } catch (const kzi::ValidationError& e) {
    last_error = e.what();
    return KZI_ERR_VALIDATION;
  } catch (const kzi::NumericalError& e) {
    last_error = e.what();
    return KZI_ERR_NUMERICAL;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KZI_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KZI_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw kzi::ValidationError(what);
}

char* copy_string(const std::string& s) {
  auto* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string diagram_label(const kzi::CircleDiagram& d) {
  std::ostringstream os;
  for (std::size_t c = 0; c < d.slots().size(); ++c) {
    os << (c == 0 ? "(" : " (");
    for (std::size_t k = 0; k < d.slots()[c].size(); ++k) os << (k == 0 ? "" : " ") << d.slots()[c][k];
    os << ')';
  }
  return os.str();
}

}  // namespace

extern "C" {

const char* kzi_last_error(void) { return last_error.c_str(); }

const char* kzi_version(void) { return "0.1.0"; }

int kzi_default_steps(void) { return kzi::kDefaultStepsPerLetter; }

double kzi_default_zero_threshold(void) { return kzi::kDefaultZeroThreshold; }

kzi_status kzi_braid_validate(const char* word, int n_strands, size_t* n_letters) {
  return guarded([&] {
    require(word != nullptr, "braid word is null");
    const auto braid = kzi::parse_braid_word(word, n_strands);
    if (n_letters != nullptr) *n_letters = braid.letters().size();
  });
}

kzi_status kzi_braid_series(const char* word, int n_strands, int max_degree, int steps, double zero_threshold,
                            kzi_series** out) {
  return guarded([&] {
    require(word != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const auto braid = kzi::parse_braid_word(word, n_strands);
    auto result = kzi::transport(kzi::realize(braid), max_degree, steps, zero_threshold);
    *out = new kzi_series{std::move(result.series), result.richardson_error_estimate};
  });
}

kzi_status kzi_series_from_json(const char* json, kzi_series** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw kzi::ValidationError(std::string("invalid JSON: ") + e.what());
    }
    *out = new kzi_series{kzi::parse_horizontal_series(parsed), std::numeric_limits<double>::quiet_NaN()};
  });
}

void kzi_series_free(kzi_series* series) { delete series; }

int kzi_series_n_strands(const kzi_series* series) { return series ? series->series.n_strands() : 0; }

int kzi_series_max_degree(const kzi_series* series) { return series ? series->series.max_degree() : -1; }

size_t kzi_series_term_count(const kzi_series* series) { return series ? series->series.terms().size() : 0; }

kzi_status kzi_series_term(const kzi_series* series, size_t index, int* chords, size_t capacity, size_t* degree,
                           double* re, double* im) {
  return guarded([&] {
    require(series != nullptr, "series is null");
    require(index < series->series.terms().size(), "term index out of range");
    auto it = series->series.terms().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(index));
    const auto& [word, value] = *it;
    const auto needed = 2 * static_cast<std::size_t>(word.degree());
    if (degree != nullptr) *degree = static_cast<size_t>(word.degree());
    if (re != nullptr) *re = value.real();
    if (im != nullptr) *im = value.imag();
    if (chords != nullptr) {
      require(capacity >= needed, "chord buffer too small");
      for (std::size_t k = 0; k < word.chords.size(); ++k) {
        chords[2 * k] = word.chords[k].i;
        chords[2 * k + 1] = word.chords[k].j;
      }
    }
  });
}

double kzi_series_error_estimate(const kzi_series* series) {
  return series ? series->error_estimate : std::numeric_limits<double>::quiet_NaN();
}

kzi_status kzi_series_distance(const kzi_series* a, const kzi_series* b, double* distance) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && distance != nullptr, "null argument");
    *distance = kzi::series_distance(a->series, b->series);
  });
}

kzi_status kzi_series_max_difference(const kzi_series* a, const kzi_series* b, double* difference) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && difference != nullptr, "null argument");
    *difference = kzi::max_abs_difference(a->series, b->series);
  });
}

kzi_status kzi_series_json(const kzi_series* series, char** json) {
  return guarded([&] {
    require(series != nullptr && json != nullptr, "null argument");
    *json = copy_string(kzi::serialize(series->series).dump(2));
  });
}

kzi_status kzi_link_compute(const char* word, int n_strands, int max_degree, int steps, double zero_threshold,
                            kzi_link** out) {
  return guarded([&] {
    require(word != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const auto braid = kzi::parse_braid_word(word, n_strands);
    auto link = std::make_unique<kzi_link>(kzi_link{kzi::kontsevich_link(braid, max_degree, steps, zero_threshold), {}});
    for (const auto& block : link->closure.reduced.blocks) {
      for (std::size_t k = 0; k < block.basis.size(); ++k) {
        if (std::abs(block.coefficients[k]) < link->closure.reduced.zero_threshold) continue;
        link->terms.push_back({diagram_label(block.basis[k]), block.degree, block.coefficients[k]});
      }
    }
    *out = link.release();
  });
}

void kzi_link_free(kzi_link* link) { delete link; }

int kzi_link_components(const kzi_link* link) { return link ? link->closure.skeleton.n_components() : 0; }

size_t kzi_link_term_count(const kzi_link* link) { return link ? link->terms.size() : 0; }

kzi_status kzi_link_term(const kzi_link* link, size_t index, char* label, size_t capacity, int* degree, double* re,
                         double* im) {
  return guarded([&] {
    require(link != nullptr, "link is null");
    require(index < link->terms.size(), "term index out of range");
    const auto& t = link->terms[index];
    if (label != nullptr) {
      require(capacity > t.label.size(), "label buffer too small");
      std::memcpy(label, t.label.c_str(), t.label.size() + 1);
    }
    if (degree != nullptr) *degree = t.degree;
    if (re != nullptr) *re = t.value.real();
    if (im != nullptr) *im = t.value.imag();
  });
}

kzi_status kzi_link_json(const kzi_link* link, char** json) {
  return guarded([&] {
    require(link != nullptr && json != nullptr, "null argument");
    *json = copy_string(kzi::serialize(link->closure).dump(2));
  });
}

kzi_status kzi_verify(const char* check, int max_degree, int steps, double* max_residual, int* passed,
                      char** report) {
  return guarded([&] {
    require(check != nullptr, "check name is null");
    const auto result = kzi::run_check(check, max_degree, steps);
    if (max_residual != nullptr) *max_residual = result.max_residual();
    if (passed != nullptr) *passed = result.passed() ? 1 : 0;
    if (report != nullptr) {
      std::ostringstream os;
      os.precision(3);
      for (const auto& line : result.lines) {
        os << (line.passed() ? "PASS " : "FAIL ") << line.label << ": residual " << std::scientific
           << line.residual << " < " << line.tolerance << '\n';
      }
      *report = copy_string(os.str());
    }
  });
}

kzi_status kzi_quotient_dimension_circles(int n_circles, int degree, size_t* dimension) {
  return guarded([&] {
    require(dimension != nullptr, "null argument");
    require(n_circles >= 1, "need at least one circle");
    require(degree >= 0, "degree must be non-negative");
    *dimension = kzi::quotient_dimension(kzi::CircleSkeleton{n_circles}, degree);
  });
}

kzi_status kzi_quotient_dimension_strands(int n_strands, int degree, size_t* dimension) {
  return guarded([&] {
    require(dimension != nullptr, "null argument");
    require(n_strands >= 2, "need at least two strands");
    require(degree >= 0, "degree must be non-negative");
    *dimension = kzi::horizontal_quotient_dimension(n_strands, degree);
  });
}

kzi_status kzi_word_count(int n_strands, int degree, size_t* count) {
  return guarded([&] {
    require(count != nullptr, "null argument");
    require(n_strands >= 2, "need at least two strands");
    require(degree >= 0 && degree <= 16, "degree must lie in [0, 16]");
    std::size_t total = 1;
    const auto pairs = static_cast<std::size_t>(kzi::pair_count(n_strands));
    for (int d = 0; d < degree; ++d) total *= pairs;
    *count = total;
  });
}

void kzi_string_free(char* text) { delete[] text; }

}  // extern "C"
