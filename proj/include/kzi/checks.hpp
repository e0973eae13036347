#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kzi/transport.hpp"

namespace kzi {

struct CheckLine {
  std::string label;
  double residual = 0.0;
  double tolerance = 0.0;

  bool passed() const noexcept { return residual < tolerance; }
};

struct CheckReport {
  std::string name;
  std::vector<CheckLine> lines;

  bool passed() const noexcept;
  double max_residual() const noexcept;
};

/// braid-relation, far-commutation, oracle, multiplicativity, abelian, reparam.
const std::vector<std::string>& check_names();

/// Runs one named self-consistency check; ValidationError for unknown names.
CheckReport run_check(std::string_view name, int max_degree, int steps = kDefaultStepsPerLetter);

}  // namespace kzi
