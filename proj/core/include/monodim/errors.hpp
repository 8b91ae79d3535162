#pragma once

#include <stdexcept>
#include <string>

namespace monodim {

/// Malformed user input: config files, mesh files, out-of-range parameters.
/// CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A weight parameter placed exactly on an indicial root. The defect index is
/// undefined there, so this is never silently nudged. CLI exit code 3.
class alpha_at_root_error : public std::runtime_error {
 public:
  alpha_at_root_error(double alpha, double root)
      : std::runtime_error("weight alpha = " + std::to_string(alpha) +
                           " coincides with the indicial root " + std::to_string(root)),
        alpha(alpha),
        root(root) {}
  double alpha;
  double root;
};

/// A violated internal invariant (a bug, not bad input). CLI exit code 1.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace monodim
