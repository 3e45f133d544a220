#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "holomotion/complex.hpp"
#include "holomotion/rational.hpp"

namespace holomotion {

struct CurveSample {
  double theta;
  ExtendedComplex z;
};

/// Closed path theta in [0,1] -> sphere, together with an ordered sample set.
///
/// Samples start uniform and are refined by parameter-midpoint insertion;
/// existing samples never move. The last sample is a copy of the first, so
/// closure is exact.
class ClosedCurve {
 public:
  using Parametrization = std::function<ExtendedComplex(double)>;

  /// Uniform samples theta_k = k / initial_samples. Throws DomainError when
  /// initial_samples < 1.
  static ClosedCurve sampled(Parametrization param, int initial_samples);

  /// Samples at the given parameters, which must rise strictly from 0 to 1.
  /// The value at 1 is copied from the value at 0.
  static ClosedCurve on_grid(Parametrization param,
                             std::span<const double> thetas, int depth = 0);

  /// Constant loop. Allowed to sit at infinity.
  static ClosedCurve constant(ExtendedComplex value, int initial_samples = 16);

  const std::vector<CurveSample>& samples() const { return samples_; }
  std::size_t interval_count() const { return samples_.size() - 1; }
  int refinement_depth() const { return depth_; }
  bool is_constant() const { return constant_; }

  ExtendedComplex at(double theta) const { return param_(theta); }
  const Parametrization& parametrization() const { return param_; }
  std::vector<double> thetas() const;

  /// Inserts a midpoint into every interval.
  ClosedCurve refined() const;

  /// Inserts a midpoint into each listed interval k = [theta_k, theta_{k+1}].
  ClosedCurve refined(std::span<const std::size_t> intervals) const;

 private:
  ClosedCurve(Parametrization param, std::vector<CurveSample> samples,
              int depth, bool constant);

  Parametrization param_;
  std::vector<CurveSample> samples_;
  int depth_ = 0;
  bool constant_ = false;
};

/// center + radius e^{2 pi i (turns theta + phase)}. Throws DomainError for
/// radius <= 0 or initial_samples < 16.
ClosedCurve circle_curve(Complex center, double radius,
                         int initial_samples = 1024, int turns = 1,
                         double phase = 0.0);

/// Pushforward f o c. Evaluation sites that hit a pole of f throw
/// PoleOnCurveError carrying the offending theta, at construction and on
/// every later refinement.
ClosedCurve map_curve(const ComplexMap& f, const ClosedCurve& c);

template <EvaluableMap F>
ClosedCurve map_curve(const F& f, const ClosedCurve& c) {
  return map_curve(ComplexMap(f), c);
}

/// theta -> c(1 - theta).
ClosedCurve reversed(const ClosedCurve& c);

/// Traverses `first` on [0, 1/2] then `second` on [1/2, 1]. Both loops must
/// share their base point (value at theta = 0) to within 1e-12.
ClosedCurve concatenate(const ClosedCurve& first, const ClosedCurve& second);

struct WindingOptions {
  int max_depth = 16;
  /// Allowed distance of the lifted turn count from the nearest integer.
  double integer_tolerance = 1e-6;
  /// A sample this close to the point means the point is on the curve.
  double point_tolerance = 1e-9;
};

struct WindingReport {
  int winding = 0;
  bool certified = false;
  std::size_t samples_used = 0;
  double min_distance_to_point = 0.0;
  /// Lifted argument change in turns before rounding.
  double raw_turns = 0.0;
};

/// Winding number of c about p by continuous-argument lifting.
///
/// Certified once every chord |z_{k+1} - z_k| is shorter than both endpoint
/// distances to p (each argument step is then below pi/2) and the lifted sum
/// is within integer_tolerance of an integer. Failing intervals are bisected
/// up to max_depth passes. Throws PointOnCurveError when a sample comes
/// within point_tolerance of p.
WindingReport winding_number(const ClosedCurve& c, Complex p,
                             const WindingOptions& options = {});

/// Argument principle without quadrature: the winding of f(c) about 0.
WindingReport argument_count(const ComplexMap& f, const ClosedCurve& c,
                             const WindingOptions& options = {});

/// Zeros minus poles of f inside c. Throws UncertifiedError if the image
/// winding does not certify.
int zero_pole_count(const ComplexMap& f, const ClosedCurve& c,
                    const WindingOptions& options = {});

template <EvaluableMap F>
int zero_pole_count(const F& f, const ClosedCurve& c,
                    const WindingOptions& options = {}) {
  return zero_pole_count(ComplexMap(f), c, options);
}

struct RoucheCertificate {
  bool holds = false;
  /// min over samples of |g| - |h - g|.
  double margin = 0.0;
  std::size_t samples_used = 0;
};

RoucheCertificate rouche_certificate(const ComplexMap& g, const ComplexMap& h,
                                     const ClosedCurve& c, double rtol = 1e-8,
                                     int max_depth = 8);

/// Sampled extrema of |f| on a curve. Heuristic, not an interval enclosure.
struct ModulusExtrema {
  double min = 0.0;
  double max = 0.0;
  std::size_t samples_used = 0;
  bool converged = false;

  static constexpr double kSafetyFactor = 0.9;
  double certified_lower() const { return kSafetyFactor * min; }
};

/// Doubles the sample density until successive min and max both change by
/// relative less than rtol, or max_depth passes have run.
ModulusExtrema modulus_extrema(const ComplexMap& f, const ClosedCurve& c,
                               double rtol = 1e-8, int max_depth = 8);

template <EvaluableMap F>
ModulusExtrema modulus_extrema(const F& f, const ClosedCurve& c,
                               double rtol = 1e-8, int max_depth = 8) {
  return modulus_extrema(ComplexMap(f), c, rtol, max_depth);
}

}  // namespace holomotion
