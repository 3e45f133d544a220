#include "holomotion/complex.hpp"

#include <cmath>
#include <cstdio>

#include "holomotion/errors.hpp"

namespace holomotion {

ExtendedComplex::ExtendedComplex(Complex z) : value_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw EvaluationError("non-finite complex value; use ExtendedComplex::infinity()");
  }
}

const Complex& ExtendedComplex::value() const {
  if (infinite_) throw EvaluationError("value() called on infinity");
  return value_;
}

std::string ExtendedComplex::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", value_.real(), value_.imag());
  return buf;
}

}  // namespace holomotion
