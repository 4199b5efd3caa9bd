#ifndef RLNC_ERRORS_HPP
#define RLNC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rlnc {

// Invalid or out-of-domain parameter values. Messages name the offending
// field so callers (notably the CLI) can surface it verbatim.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A transmission policy that cannot reach completion (some N_i < i keeps
// state i absorbing, so the expected cost diverges).
class PolicyError : public std::invalid_argument {
 public:
  explicit PolicyError(const std::string& what) : std::invalid_argument(what) {}
};

// A stored policy table does not match the scenario it is applied to.
class PolicyMismatchError : public std::runtime_error {
 public:
  explicit PolicyMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (search bound exhausted, non-finite intermediate, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rlnc

#endif  // RLNC_ERRORS_HPP
