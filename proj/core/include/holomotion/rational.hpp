#pragma once

#include <cstdint>
#include <vector>

#include "holomotion/complex.hpp"

namespace holomotion {

struct Factor {
  Complex location;
  int multiplicity = 1;

  bool operator==(const Factor&) const = default;
};

/// Rational map stored as scale * prod (z - zero)^m / prod (z - pole)^m.
///
/// Zeros and poles are exact data, so pole hits and multiplicity sums never
/// depend on root finding. A zero or pole at infinity is implicit: it is the
/// deficit between the finite zero and pole orders.
class FactoredRational {
 public:
  /// Merges repeated locations. Throws DomainError on a non-positive
  /// multiplicity, a zero scale, or a location listed as both zero and pole.
  FactoredRational(std::vector<Factor> zeros, std::vector<Factor> poles,
                   Complex scale);

  static FactoredRational identity();

  const std::vector<Factor>& zeros() const { return zeros_; }
  const std::vector<Factor>& poles() const { return poles_; }
  Complex scale() const { return scale_; }

  int finite_zero_order() const;
  int finite_pole_order() const;
  int degree() const;

  /// Order of the map at infinity: positive for a pole there, negative for a
  /// zero, zero when the map tends to the (finite, nonzero) scale.
  int pole_order_at_infinity() const;

  /// Evaluation on the sphere. Exact infinity at listed poles and exact zero
  /// at listed zeros; at infinity the limit is decided by degree comparison.
  ExtendedComplex operator()(const ExtendedComplex& z) const;

  bool operator==(const FactoredRational&) const = default;

 private:
  std::vector<Factor> zeros_;
  std::vector<Factor> poles_;
  Complex scale_;
};

/// h(z) = g(z) - shift. Zeros are unknown and deliberately not stored.
class ShiftedRational {
 public:
  ShiftedRational(FactoredRational base, Complex shift);

  const FactoredRational& base() const { return base_; }
  Complex shift() const { return shift_; }
  const std::vector<Factor>& poles() const { return base_.poles(); }

  ExtendedComplex operator()(const ExtendedComplex& z) const;

 private:
  FactoredRational base_;
  Complex shift_;
};

struct CriticalData {
  Complex c1;
  Complex c2;
  Complex v1;
  Complex v2;
  /// Turns with v2 = e^{2 pi i theta}, in (0, 1/2).
  double theta = 0.0;
};

/// f_a(z) = z (z - a) / (1 - a z) for real a > 1.
FactoredRational blaschke_map(double a);

/// q_n o f: every multiplicity times n, scale to the n-th power.
FactoredRational power_compose(const FactoredRational& f, int n);

/// Critical points and values of f_a from their closed forms.
CriticalData critical_data(double a);

/// eval_extended as a free function.
inline ExtendedComplex eval_extended(const FactoredRational& f,
                                     const ExtendedComplex& z) {
  return f(z);
}

inline ShiftedRational shifted_map(const FactoredRational& g, Complex z0) {
  return ShiftedRational(g, z0);
}

/// max |g(w) g(1/w) - 1| over `samples` pseudo-random points of 1/2 < |w| < 2.
/// Points within 1e-9 of a zero or pole of g (or their reciprocals) are skipped.
double reciprocal_symmetry_check(const FactoredRational& g, int samples,
                                 std::uint64_t seed = 20161104);

}  // namespace holomotion
