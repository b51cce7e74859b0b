#ifndef XITAIL_ERRORS_HPP
#define XITAIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xitail {

/// Argument outside an operation's documented domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Gram-point abscissa outside the frozen-coefficient window, or a sum
/// window longer than the formula supports.
class WindowViolation : public std::domain_error {
 public:
  explicit WindowViolation(const std::string& what) : std::domain_error(what) {}
};

/// Quadrature could not reach the requested tolerance; carries the best
/// value obtained and the error actually achieved.
class ToleranceNotMet : public std::runtime_error {
 public:
  ToleranceNotMet(const std::string& what, double best, double achieved)
      : std::runtime_error(what), best_value(best), achieved_err(achieved) {}
  double best_value;
  double achieved_err;
};

/// Root search ran out of iterations (bad initial guess).
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Sign-change scan hit its range limit before finding enough zeros.
class ScanExhausted : public std::runtime_error {
 public:
  explicit ScanExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xitail

#endif  // XITAIL_ERRORS_HPP
