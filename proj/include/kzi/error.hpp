#pragma once

#include <stdexcept>
#include <string>

namespace kzi {

/// Malformed input: bad braid tokens, mismatched skeletons, out-of-range degrees.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integration produced a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double t)
      : std::runtime_error(what + " (t = " + std::to_string(t) + ")"), t_(t) {}

  double time() const noexcept { return t_; }

 private:
  double t_;
};

/// Broken internal invariant, e.g. a relation row indexing outside its basis.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kzi
