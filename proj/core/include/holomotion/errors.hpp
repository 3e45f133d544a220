#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace holomotion {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (a <= 1, n < 2, t outside X, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Factored evaluation produced an indeterminate or non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A map hit one of its poles at a curve sample.
class PoleOnCurveError : public Error {
 public:
  PoleOnCurveError(double theta, const std::string& what)
      : Error(what), theta_(theta) {}
  double theta() const { return theta_; }

 private:
  double theta_;
};

/// A curve passes (numerically) through the point a winding number is taken about.
class PointOnCurveError : public Error {
 public:
  PointOnCurveError(double theta, const std::string& what)
      : Error(what), theta_(theta) {}
  double theta() const { return theta_; }

 private:
  double theta_;
};

/// Two points of the motion coincide on a difference curve.
class InjectivityError : public Error {
 public:
  InjectivityError(double theta, const std::string& what)
      : Error(what), theta_(theta) {}
  double theta() const { return theta_; }

 private:
  double theta_;
};

/// A ray crossing could not be resolved by parameter nudging.
class DegenerateCrossingError : public Error {
 public:
  using Error::Error;
};

/// A winding number failed to certify where a certified integer is required.
class UncertifiedError : public Error {
 public:
  using Error::Error;
};

/// A construction constraint failed; `predicate()` names the first one that did.
class ConstraintViolation : public Error {
 public:
  ConstraintViolation(std::string predicate, const std::string& what)
      : Error(what), predicate_(std::move(predicate)) {}
  const std::string& predicate() const { return predicate_; }

 private:
  std::string predicate_;
};

/// A certification sub-check raised; `subcheck()` names it.
class SubcheckError : public Error {
 public:
  SubcheckError(std::string subcheck, const std::string& what)
      : Error(subcheck + ": " + what), subcheck_(std::move(subcheck)) {}
  const std::string& subcheck() const { return subcheck_; }

 private:
  std::string subcheck_;
};

}  // namespace holomotion
