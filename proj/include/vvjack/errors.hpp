#ifndef VVJACK_ERRORS_HPP
#define VVJACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vvjack {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& m) : Error(m) {}
};

// Signals that kappa0 is a pole of a coefficient; relevant to singular-value scanning.
struct PoleAtKappa : Error {
  explicit PoleAtKappa(const std::string& m = "denominator vanishes at kappa0") : Error(m) {}
};

struct IncomparableInput : Error {
  explicit IncomparableInput(const std::string& m) : Error(m) {}
};

struct ConditionViolated : Error {
  explicit ConditionViolated(const std::string& m) : Error(m) {}
};

struct NotColumnDistinct : Error {
  explicit NotColumnDistinct(const std::string& m) : Error(m) {}
};

struct NotRowDistinct : Error {
  explicit NotRowDistinct(const std::string& m) : Error(m) {}
};

struct NotColumnStrict : Error {
  explicit NotColumnStrict(const std::string& m) : Error(m) {}
};

struct NotRowStrict : Error {
  explicit NotRowStrict(const std::string& m) : Error(m) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& m) : Error(m) {}
};

struct MemoOverflow : Error {
  explicit MemoOverflow(const std::string& m) : Error(m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(m) {}
};

}  // namespace vvjack

#endif
