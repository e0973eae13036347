// kzi: command-line front end over the C API.
//
//   kzi compute -n 2 -w "1 1" -m 3 --close -o hopf.json
//   kzi verify braid-relation -m 3
//   kzi dims --circles 1 -m 3

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kzi/kzi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct RunConfig {
  int n_strands = 2;
  std::string word;
  int max_degree = 3;
  int steps = 0;
  std::string output;
  bool close = false;
  double zero_threshold = 0.0;
  std::string check;
  int circles = 0;
  bool reduced = false;
};

int exit_code(kzi_status status) {
  switch (status) {
    case KZI_OK:
      return kExitOk;
    case KZI_ERR_VALIDATION:
      return kExitValidation;
    default:
      return kExitNumerical;
  }
}

int fail(kzi_status status) {
  std::cerr << "kzi: " << kzi_last_error() << '\n';
  return exit_code(status);
}

struct StringDeleter {
  void operator()(char* s) const { kzi_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::optional<int> steps_from_environment() {
  const char* value = std::getenv("KZI_STEPS");
  if (value == nullptr || *value == '\0') return std::nullopt;
  char* end = nullptr;
  const long steps = std::strtol(value, &end, 10);
  if (*end != '\0' || steps < 1 || steps > 1'000'000) {
    throw std::invalid_argument(std::string("KZI_STEPS must be a positive integer, got '") + value + "'");
  }
  return static_cast<int>(steps);
}

std::string format_word(const std::vector<int>& chords) {
  if (chords.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < chords.size(); k += 2) {
    os << (k == 0 ? "" : " ") << '(' << chords[k] << ',' << chords[k + 1] << ')';
  }
  return os.str();
}

void print_row(const std::string& key, double re, double im) {
  std::cout << std::left << std::setw(36) << key << std::right << std::setw(24) << std::setprecision(15)
            << std::hypot(re, im) << "  " << std::setw(13) << std::setprecision(6) << std::atan2(im, re) << '\n';
}

int cmd_compute(const RunConfig& cfg) {
  kzi_series* raw = nullptr;
  if (auto s = kzi_braid_series(cfg.word.c_str(), cfg.n_strands, cfg.max_degree, cfg.steps, cfg.zero_threshold, &raw);
      s != KZI_OK) {
    return fail(s);
  }
  std::unique_ptr<kzi_series, decltype(&kzi_series_free)> series(raw, kzi_series_free);

  std::cout << "Z(braid) on " << cfg.n_strands << " strands, word \"" << cfg.word << "\", degree <= " << cfg.max_degree
            << ", steps/letter " << cfg.steps << '\n';
  std::cout << std::left << std::setw(36) << "word (bottom to top)" << std::right << std::setw(24) << "|coefficient|"
            << std::setw(15) << "arg" << '\n';
  std::vector<int> chords(2 * static_cast<std::size_t>(cfg.max_degree));
  for (std::size_t k = 0; k < kzi_series_term_count(series.get()); ++k) {
    size_t degree = 0;
    double re = 0.0, im = 0.0;
    if (auto s = kzi_series_term(series.get(), k, chords.data(), chords.size(), &degree, &re, &im); s != KZI_OK) {
      return fail(s);
    }
    print_row(format_word({chords.begin(), chords.begin() + static_cast<std::ptrdiff_t>(2 * degree)}), re, im);
  }
  std::cout << "richardson error estimate: " << std::scientific << std::setprecision(3)
            << kzi_series_error_estimate(series.get()) << std::defaultfloat << '\n';

  char* text = nullptr;
  if (auto s = kzi_series_json(series.get(), &text); s != KZI_OK) return fail(s);
  nlohmann::json document{{"braid", nlohmann::json::parse(OwnedString(text).get())}};

  if (cfg.close) {
    kzi_link* link_raw = nullptr;
    if (auto s = kzi_link_compute(cfg.word.c_str(), cfg.n_strands, cfg.max_degree, cfg.steps, cfg.zero_threshold,
                                  &link_raw);
        s != KZI_OK) {
      return fail(s);
    }
    std::unique_ptr<kzi_link, decltype(&kzi_link_free)> link(link_raw, kzi_link_free);
    std::cout << "\nZ(closure), " << kzi_link_components(link.get())
              << " component(s), reduced by 4T and framing\n";
    std::cout << std::left << std::setw(36) << "diagram (slots per circle)" << std::right << std::setw(24)
              << "|coefficient|" << std::setw(15) << "arg" << '\n';
    char label[512];
    for (std::size_t k = 0; k < kzi_link_term_count(link.get()); ++k) {
      int degree = 0;
      double re = 0.0, im = 0.0;
      if (auto s = kzi_link_term(link.get(), k, label, sizeof label, &degree, &re, &im); s != KZI_OK) return fail(s);
      print_row(label, re, im);
    }
    char* link_text = nullptr;
    if (auto s = kzi_link_json(link.get(), &link_text); s != KZI_OK) return fail(s);
    document["link"] = nlohmann::json::parse(OwnedString(link_text).get());
  }

  const std::string dumped = document.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << '\n' << dumped;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out || !(out << dumped)) {
      std::cerr << "kzi: cannot write " << cfg.output << '\n';
      return kExitValidation;
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  double residual = 0.0;
  int passed = 0;
  char* report = nullptr;
  if (auto s = kzi_verify(cfg.check.c_str(), cfg.max_degree, cfg.steps, &residual, &passed, &report); s != KZI_OK) {
    return fail(s);
  }
  std::cout << OwnedString(report).get();
  std::cout << cfg.check << ": max residual " << std::scientific << std::setprecision(3) << residual
            << (passed ? " (pass)" : " (FAIL)") << '\n';
  return passed ? kExitOk : kExitNumerical;  // a residual over tolerance is a numerical failure
}

int cmd_dims(const RunConfig& cfg) {
  std::ostringstream line;
  for (int m = 0; m <= cfg.max_degree; ++m) {
    size_t dim = 0;
    const kzi_status s = cfg.circles > 0 ? kzi_quotient_dimension_circles(cfg.circles, m, &dim)
                     : cfg.reduced       ? kzi_quotient_dimension_strands(cfg.n_strands, m, &dim)
                                         : kzi_word_count(cfg.n_strands, m, &dim);
    if (s != KZI_OK) return fail(s);
    line << (m == 0 ? "" : " ") << m << ':' << dim;
  }
  std::cout << line.str() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kontsevich integrals of braids and closed braids by KZ transport"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.zero_threshold = kzi_default_zero_threshold();

  auto* compute = app.add_subcommand("compute", "Kontsevich integral of a braid (and, with --close, its closure)");
  compute->add_option("-n,--strands", cfg.n_strands, "number of strands")->required()->check(CLI::Range(2, 64));
  compute->add_option("-w,--word", cfg.word, "braid word, e.g. \"1 -2 1\" (first letter on top)");
  compute->add_option("-m,--max-degree", cfg.max_degree, "truncation degree")->check(CLI::Range(0, 12));
  compute->add_option("-s,--steps", cfg.steps, "RK4 steps per letter (default 512 or $KZI_STEPS)")
      ->check(CLI::PositiveNumber);
  compute->add_option("-o,--output", cfg.output, "write JSON here instead of standard output");
  compute->add_flag("--close", cfg.close, "also compute the reduced integral of the closure");
  compute->add_option("--threshold", cfg.zero_threshold, "drop coefficients below this modulus")
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "run a numerical self-check");
  verify->add_option("check", cfg.check, "braid-relation | far-commutation | oracle | multiplicativity | abelian | reparam")
      ->required();
  verify->add_option("-m,--max-degree", cfg.max_degree, "truncation degree")->check(CLI::Range(0, 6));
  verify->add_option("-s,--steps", cfg.steps, "RK4 steps per letter")->check(CLI::PositiveNumber);

  auto* dims = app.add_subcommand("dims", "dimensions of the chord-diagram quotient by degree");
  auto* circles = dims->add_option("--circles", cfg.circles, "number of circles")->check(CLI::Range(1, 8));
  auto* strands = dims->add_option("--strands", cfg.n_strands, "number of braid strands")->check(CLI::Range(2, 8));
  circles->excludes(strands);
  dims->add_flag("--reduced", cfg.reduced, "with --strands: quotient by 4T and far commutation instead of raw words")
      ->needs(strands);
  dims->add_option("-m,--max-degree", cfg.max_degree, "largest degree")->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (cfg.steps == 0) cfg.steps = steps_from_environment().value_or(kzi_default_steps());
  } catch (const std::exception& e) {
    std::cerr << "kzi: " << e.what() << '\n';
    return kExitValidation;
  }

  if (app.got_subcommand(compute)) return cmd_compute(cfg);
  if (app.got_subcommand(verify)) return cmd_verify(cfg);
  if (dims->count("--circles") == 0 && dims->count("--strands") == 0) {
    std::cerr << "kzi: dims needs --circles or --strands\n";
    return kExitValidation;
  }
  return cmd_dims(cfg);
}
