#include "holomotion/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "holomotion/errors.hpp"

namespace holomotion {

namespace {

std::vector<CurveSample> uniform_samples(const ClosedCurve::Parametrization& param,
                                         int count) {
  std::vector<CurveSample> samples;
  samples.reserve(static_cast<std::size_t>(count) + 1);
  for (int k = 0; k < count; ++k) {
    const double theta = static_cast<double>(k) / count;
    samples.push_back({theta, param(theta)});
  }
  samples.push_back({1.0, samples.front().z});
  return samples;
}

std::string theta_text(double theta) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", theta);
  return buf;
}

// Real-valued functional sampled on a curve, refined by doubling until both
// extrema settle to relative rtol.
struct Extrema {
  double min;
  double max;
  std::size_t samples;
  bool converged;
};

template <typename Functional>
Extrema sampled_extrema(ClosedCurve curve, Functional&& value, double rtol,
                        int max_depth) {
  auto scan = [&](const ClosedCurve& c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    const auto& s = c.samples();
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      const double v = value(s[k]);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return std::pair{lo, hi};
  };
  auto rel_change = [](double before, double after) {
    const double scale = std::max(std::abs(before), std::abs(after));
    return scale == 0.0 ? 0.0 : std::abs(after - before) / scale;
  };
  auto [lo, hi] = scan(curve);
  for (int depth = 0; depth < max_depth; ++depth) {
    curve = curve.refined();
    auto [next_lo, next_hi] = scan(curve);
    const bool settled =
        rel_change(lo, next_lo) < rtol && rel_change(hi, next_hi) < rtol;
    lo = next_lo;
    hi = next_hi;
    if (settled) return {lo, hi, curve.interval_count(), true};
  }
  return {lo, hi, curve.interval_count(), false};
}

}  // namespace

ClosedCurve::ClosedCurve(Parametrization param, std::vector<CurveSample> samples,
                         int depth, bool constant)
    : param_(std::move(param)),
      samples_(std::move(samples)),
      depth_(depth),
      constant_(constant) {}

ClosedCurve ClosedCurve::sampled(Parametrization param, int initial_samples) {
  if (initial_samples < 1) throw DomainError("a curve needs at least one interval");
  auto samples = uniform_samples(param, initial_samples);
  return ClosedCurve(std::move(param), std::move(samples), 0, false);
}

ClosedCurve ClosedCurve::on_grid(Parametrization param,
                                 std::span<const double> thetas, int depth) {
  if (thetas.size() < 2 || thetas.front() != 0.0 || thetas.back() != 1.0) {
    throw DomainError("curve grid must run from 0 to 1");
  }
  std::vector<CurveSample> samples;
  samples.reserve(thetas.size());
  for (std::size_t k = 0; k + 1 < thetas.size(); ++k) {
    if (!(thetas[k] < thetas[k + 1])) throw DomainError("curve grid must be increasing");
    samples.push_back({thetas[k], param(thetas[k])});
  }
  samples.push_back({1.0, samples.front().z});
  return ClosedCurve(std::move(param), std::move(samples), depth, false);
}

std::vector<double> ClosedCurve::thetas() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const CurveSample& s : samples_) out.push_back(s.theta);
  return out;
}

ClosedCurve ClosedCurve::constant(ExtendedComplex value, int initial_samples) {
  if (initial_samples < 1) throw DomainError("a curve needs at least one interval");
  Parametrization param = [value](double) { return value; };
  auto samples = uniform_samples(param, initial_samples);
  return ClosedCurve(std::move(param), std::move(samples), 0, true);
}

ClosedCurve ClosedCurve::refined() const {
  std::vector<CurveSample> next;
  next.reserve(2 * samples_.size() - 1);
  for (std::size_t k = 0; k + 1 < samples_.size(); ++k) {
    next.push_back(samples_[k]);
    const double mid = 0.5 * (samples_[k].theta + samples_[k + 1].theta);
    next.push_back({mid, param_(mid)});
  }
  next.push_back(samples_.back());
  return ClosedCurve(param_, std::move(next), depth_ + 1, constant_);
}

ClosedCurve ClosedCurve::refined(std::span<const std::size_t> intervals) const {
  std::vector<bool> split(interval_count(), false);
  for (std::size_t k : intervals) {
    if (k >= split.size()) throw DomainError("refinement interval out of range");
    split[k] = true;
  }
  std::vector<CurveSample> next;
  next.reserve(samples_.size() + intervals.size());
  for (std::size_t k = 0; k + 1 < samples_.size(); ++k) {
    next.push_back(samples_[k]);
    if (split[k]) {
      const double mid = 0.5 * (samples_[k].theta + samples_[k + 1].theta);
      next.push_back({mid, param_(mid)});
    }
  }
  next.push_back(samples_.back());
  return ClosedCurve(param_, std::move(next), depth_ + 1, constant_);
}

ClosedCurve circle_curve(Complex center, double radius, int initial_samples,
                         int turns, double phase) {
  if (!(radius > 0.0)) throw DomainError("circle radius must be positive");
  if (initial_samples < 16) throw DomainError("circle needs at least 16 samples");
  return ClosedCurve::sampled(
      [=](double theta) -> ExtendedComplex {
        return center + radius * unit_phase(turns * theta + phase);
      },
      initial_samples);
}

ClosedCurve map_curve(const ComplexMap& f, const ClosedCurve& c) {
  ClosedCurve::Parametrization source = c.parametrization();
  ClosedCurve::Parametrization image = [f, source](double theta) {
    const ExtendedComplex z = source(theta);
    const ExtendedComplex w = f(z);
    if (w.is_infinite() && z.is_finite()) {
      throw PoleOnCurveError(theta, "map hits a pole on the curve at theta = " +
                                        theta_text(theta));
    }
    return w;
  };
  if (c.is_constant()) {
    return ClosedCurve::constant(image(0.0),
                                 static_cast<int>(c.interval_count()));
  }
  const std::vector<double> grid = c.thetas();
  return ClosedCurve::on_grid(std::move(image), grid, c.refinement_depth());
}

ClosedCurve reversed(const ClosedCurve& c) {
  ClosedCurve::Parametrization source = c.parametrization();
  if (c.is_constant()) {
    return ClosedCurve::constant(c.samples().front().z,
                                 static_cast<int>(c.interval_count()));
  }
  std::vector<double> grid = c.thetas();
  std::reverse(grid.begin(), grid.end());
  for (double& t : grid) t = 1.0 - t;
  return ClosedCurve::on_grid([source](double t) { return source(1.0 - t); }, grid,
                              c.refinement_depth());
}

ClosedCurve concatenate(const ClosedCurve& first, const ClosedCurve& second) {
  const ExtendedComplex a = first.samples().front().z;
  const ExtendedComplex b = second.samples().front().z;
  const bool same_base =
      (a.is_infinite() && b.is_infinite()) ||
      (a.is_finite() && b.is_finite() && std::abs(a.value() - b.value()) <= 1e-12);
  if (!same_base) throw DomainError("concatenated loops must share a base point");
  ClosedCurve::Parametrization p1 = first.parametrization();
  ClosedCurve::Parametrization p2 = second.parametrization();
  std::vector<double> grid;
  for (double t : first.thetas()) grid.push_back(0.5 * t);
  const std::vector<double> tail = second.thetas();
  for (std::size_t k = 1; k < tail.size(); ++k) grid.push_back(0.5 * (1.0 + tail[k]));
  return ClosedCurve::on_grid(
      [p1, p2](double t) { return t < 0.5 ? p1(2.0 * t) : p2(2.0 * t - 1.0); }, grid,
      std::max(first.refinement_depth(), second.refinement_depth()) + 1);
}

WindingReport winding_number(const ClosedCurve& c, Complex p,
                             const WindingOptions& options) {
  if (c.is_constant()) {
    const ExtendedComplex z = c.samples().front().z;
    const double dist = z.is_infinite() ? std::numeric_limits<double>::infinity()
                                        : std::abs(z.value() - p);
    if (dist <= options.point_tolerance) {
      throw PointOnCurveError(0.0, "constant curve sits on the point");
    }
    return {0, true, c.interval_count(), dist, 0.0};
  }

  ClosedCurve current = c;
  for (int depth = 0;; ++depth) {
    const auto& s = current.samples();
    std::vector<Complex> rel(s.size());
    std::vector<double> dist(s.size());
    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k].z.is_infinite()) {
        throw PoleOnCurveError(s[k].theta, "curve passes through infinity at theta = " +
                                               theta_text(s[k].theta));
      }
      rel[k] = s[k].z.value() - p;
      dist[k] = std::abs(rel[k]);
      if (dist[k] <= options.point_tolerance) {
        throw PointOnCurveError(s[k].theta, "curve passes through the point at theta = " +
                                                theta_text(s[k].theta));
      }
      min_dist = std::min(min_dist, dist[k]);
    }

    std::vector<std::size_t> unsafe;
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      const double chord = std::abs(rel[k + 1] - rel[k]);
      if (!(chord < std::min(dist[k], dist[k + 1]))) unsafe.push_back(k);
      total += std::arg(rel[k + 1] * std::conj(rel[k]));
    }
    const double turns = total / kTwoPi;
    const double nearest = std::round(turns);
    const bool integral = std::abs(turns - nearest) <= options.integer_tolerance;

    WindingReport report{static_cast<int>(nearest), false, current.interval_count(),
                         min_dist, turns};
    if (unsafe.empty() && integral) {
      report.certified = true;
      return report;
    }
    if (depth >= options.max_depth) return report;
    current = unsafe.empty() ? current.refined() : current.refined(unsafe);
  }
}

WindingReport argument_count(const ComplexMap& f, const ClosedCurve& c,
                             const WindingOptions& options) {
  return winding_number(map_curve(f, c), Complex{0.0, 0.0}, options);
}

int zero_pole_count(const ComplexMap& f, const ClosedCurve& c,
                    const WindingOptions& options) {
  const WindingReport report = argument_count(f, c, options);
  if (!report.certified) {
    throw UncertifiedError("argument-principle winding did not certify (turns = " +
                           theta_text(report.raw_turns) + ")");
  }
  return report.winding;
}

RoucheCertificate rouche_certificate(const ComplexMap& g, const ComplexMap& h,
                                     const ClosedCurve& c, double rtol,
                                     int max_depth) {
  auto margin = [&](const CurveSample& s) {
    const ExtendedComplex gz = g(s.z);
    const ExtendedComplex hz = h(s.z);
    if (gz.is_infinite() || hz.is_infinite()) {
      throw PoleOnCurveError(s.theta, "Rouché pair has a pole on the curve at theta = " +
                                          theta_text(s.theta));
    }
    return std::abs(gz.value()) - std::abs(hz.value() - gz.value());
  };
  const Extrema e = sampled_extrema(c, margin, rtol, max_depth);
  return {e.min > 0.0, e.min, e.samples};
}

ModulusExtrema modulus_extrema(const ComplexMap& f, const ClosedCurve& c,
                               double rtol, int max_depth) {
  const ClosedCurve image = map_curve(f, c);
  const Extrema e = sampled_extrema(
      image, [](const CurveSample& s) { return std::abs(s.z.value()); }, rtol,
      max_depth);
  return {e.min, e.max, e.samples, e.converged};
}

}  // namespace holomotion
