#include "holomotion/motion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "holomotion/errors.hpp"

namespace holomotion {

namespace {

bool in_closed_annulus(Complex z, double inner, double outer) {
  const double m = std::abs(z);
  return m >= inner && m <= outer;
}

std::string number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string_view label_name(PointLabel label) {
  switch (label) {
    case PointLabel::Zero:
      return "0";
    case PointLabel::One:
      return "1";
    case PointLabel::Xi:
      return "xi";
    case PointLabel::Infinity:
      return "inf";
  }
  return "?";
}

std::string pair_key(LabelPair pair) {
  return std::string(label_name(pair.first)) + "_" + std::string(label_name(pair.second));
}

std::optional<LabelPair> parse_pair_key(std::string_view key) {
  for (LabelPair pair : kAllPairs) {
    if (pair_key(pair) == key) return pair;
    if (pair_key({pair.second, pair.first}) == key) return LabelPair{pair.second, pair.first};
  }
  return std::nullopt;
}

bool MotionSpec::in_parameter_space(Complex t) const {
  const double m = std::abs(t);
  return m > inner_radius && m < outer_radius;
}

MotionSpec make_motion(const ConstructionParams& params) {
  if (!(params.z0 > 0.0) || !(params.R > 1.0)) {
    throw DomainError("motion needs z0 > 0 and R > 1");
  }
  MotionSpec spec;
  spec.params = params;
  spec.xi = 1.0 / params.z0;
  spec.t0 = spec.xi;
  spec.inner_radius = 1.0 / (params.z0 * params.R);
  spec.outer_radius = params.R / params.z0;
  spec.rule = params.g;
  spec.reciprocal_symmetric = reciprocal_symmetry_check(params.g, 64) <= 1e-9;
  return spec;
}

MotionSpec with_rule(const MotionSpec& spec, FactoredRational rule) {
  MotionSpec out = spec;
  out.reciprocal_symmetric = reciprocal_symmetry_check(rule, 64) <= 1e-9;
  out.rule = std::move(rule);
  return out;
}

ExtendedComplex phi(const MotionSpec& spec, Complex t, PointLabel label) {
  if (!spec.in_parameter_space(t)) {
    throw DomainError("t = " + ExtendedComplex(t).to_string() +
                      " lies outside the parameter annulus X");
  }
  switch (label) {
    case PointLabel::Zero:
      return Complex{0.0, 0.0};
    case PointLabel::One:
      return Complex{1.0, 0.0};
    case PointLabel::Infinity:
      return ExtendedComplex::infinity();
    case PointLabel::Xi: {
      const ExtendedComplex v = spec.rule(spec.params.z0 * t);
      if (v.is_infinite()) return v;
      return spec.xi * v.value();
    }
  }
  throw DomainError("unknown label");
}

AxiomReport axiom_check(const MotionSpec& spec, const AxiomOptions& options) {
  if (options.grid < 64) throw DomainError("axiom_check grid must be at least 64");
  AxiomReport report;
  const double z0 = spec.params.z0;
  const double R = spec.params.R;

  // i) phi(t0, .) is the identity on E.
  const ExtendedComplex at_base = phi(spec, spec.t0, PointLabel::Xi);
  report.basepoint_residual =
      at_base.is_infinite()
          ? std::numeric_limits<double>::infinity()
          : std::abs(at_base.value() - spec.xi) / spec.xi;
  report.basepoint_pass = report.basepoint_residual <= options.basepoint_tolerance;

  // ii) 0, z0 and inf stay out of rule(A), so 0, 1, inf stay out of xi rule(A).
  const ShiftedRational shifted(spec.rule, z0);
  double min_g = std::numeric_limits<double>::infinity();
  double max_g = 0.0;
  double min_shifted = std::numeric_limits<double>::infinity();
  for (double radius : {R, 1.0 / R}) {
    const ClosedCurve circle = circle_curve(0.0, radius, options.boundary_samples);
    const ModulusExtrema eg = modulus_extrema(spec.rule, circle, options.rtol);
    const ModulusExtrema eh = modulus_extrema(shifted, circle, options.rtol);
    min_g = std::min(min_g, eg.min);
    max_g = std::max(max_g, eg.max);
    min_shifted = std::min(min_shifted, eh.min);
  }
  report.min_abs_g_on_boundary = min_g;
  report.max_abs_g_on_boundary = max_g;
  report.min_abs_g_minus_z0_on_boundary = min_shifted;

  bool free_on_annulus = true;
  for (const auto* list : {&spec.rule.zeros(), &spec.rule.poles()}) {
    for (const Factor& f : *list) {
      if (in_closed_annulus(f.location, 1.0 / R, R)) free_on_annulus = false;
    }
  }
  report.rule_zero_pole_free_on_A = free_on_annulus;

  report.grid_all_finite = true;
  report.grid_min_abs_phi = std::numeric_limits<double>::infinity();
  report.grid_min_abs_phi_minus_one = std::numeric_limits<double>::infinity();
  const double log_span = std::log(spec.outer_radius / spec.inner_radius);
  for (int i = 0; i < options.grid; ++i) {
    const double radius =
        spec.inner_radius * std::exp(log_span * (i + 0.5) / options.grid);
    for (int j = 0; j < options.grid; ++j) {
      const Complex t = radius * unit_phase(static_cast<double>(j) / options.grid);
      const ExtendedComplex v = phi(spec, t, PointLabel::Xi);
      if (v.is_infinite()) {
        report.grid_all_finite = false;
        continue;
      }
      report.grid_min_abs_phi = std::min(report.grid_min_abs_phi, std::abs(v.value()));
      report.grid_min_abs_phi_minus_one =
          std::min(report.grid_min_abs_phi_minus_one, std::abs(v.value() - 1.0));
    }
  }

  // Zero-free on the closed annulus, so the boundary minimum bounds |rule|
  // from below everywhere in it; exceeding z0 then keeps rule - z0 zero-free.
  report.injectivity_pass = min_g > 0.0 && min_shifted > 0.0 && std::isfinite(max_g) &&
                            free_on_annulus && min_g > z0 && report.grid_all_finite &&
                            report.grid_min_abs_phi > 0.0 &&
                            report.grid_min_abs_phi_minus_one > 0.0;

  // iii) phi(., xi) = xi rule(z0 t) is rational in t. Spot-check the mean
  // value property on small circles.
  report.holomorphy_structural = true;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < options.cauchy_points; ++k) {
    const double radius =
        spec.inner_radius * std::exp(log_span * (0.05 + 0.9 * unit(rng)));
    const Complex t = radius * unit_phase(unit(rng));
    const double rho =
        0.5 * std::min(radius - spec.inner_radius, spec.outer_radius - radius);
    Complex mean{0.0, 0.0};
    for (int j = 0; j < options.cauchy_nodes; ++j) {
      const Complex s =
          t + rho * unit_phase(static_cast<double>(j) / options.cauchy_nodes);
      mean += phi(spec, s, PointLabel::Xi).value();
    }
    mean /= static_cast<double>(options.cauchy_nodes);
    const Complex centre = phi(spec, t, PointLabel::Xi).value();
    worst = std::max(worst, std::abs(mean - centre) / std::max(1.0, std::abs(centre)));
  }
  report.holomorphy_residual = worst;
  report.holomorphy_pass =
      report.holomorphy_structural && worst <= options.cauchy_tolerance;
  return report;
}

ClosedCurve generator_curve(const MotionSpec& spec, double radius_factor, int samples) {
  const double radius = radius_factor * spec.xi;
  if (!(radius > spec.inner_radius && radius < spec.outer_radius)) {
    throw DomainError("generator radius " + number(radius) +
                      " leaves the parameter annulus X");
  }
  return circle_curve(0.0, radius, samples);
}

ClosedCurve delta_curve(const MotionSpec& spec, LabelPair pair, int samples,
                        double radius_factor) {
  if (pair.first == pair.second) throw DomainError("delta_curve needs distinct labels");
  const ClosedCurve alpha = generator_curve(spec, radius_factor, samples);
  const std::string key = pair_key(pair);

  auto nonvanishing = [key](ClosedCurve::Parametrization param) {
    return [key, param = std::move(param)](double theta) {
      const ExtendedComplex v = param(theta);
      if (v.is_finite() && v.value() == Complex{0.0, 0.0}) {
        throw InjectivityError(theta, "difference curve " + key + " vanishes at theta = " +
                                          number(theta));
      }
      return v;
    };
  };

  const bool has_infinity =
      pair.first == PointLabel::Infinity || pair.second == PointLabel::Infinity;
  if (has_infinity) {
    const PointLabel other =
        pair.first == PointLabel::Infinity ? pair.second : pair.first;
    if (other != PointLabel::Xi) {
      // 1 / phi(t, 0) = inf, 1 / phi(t, 1) = 1 for every t.
      const ExtendedComplex w = other == PointLabel::Zero
                                    ? ExtendedComplex::infinity()
                                    : ExtendedComplex(Complex{1.0, 0.0});
      return ClosedCurve::constant(w, samples);
    }
    ClosedCurve::Parametrization chart;
    const ClosedCurve::Parametrization a = alpha.parametrization();
    if (spec.reciprocal_symmetric) {
      // 1 / (xi g(z0 t)) = z0 g(1 / (z0 t))
      chart = [spec, a](double theta) -> ExtendedComplex {
        const Complex u = spec.params.z0 * a(theta).value();
        const ExtendedComplex v = spec.rule(1.0 / u);
        if (v.is_infinite()) return v;
        return spec.params.z0 * v.value();
      };
    } else {
      chart = [spec, a](double theta) -> ExtendedComplex {
        const ExtendedComplex v = phi(spec, a(theta).value(), PointLabel::Xi);
        if (v.is_infinite()) return Complex{0.0, 0.0};
        return 1.0 / v.value();
      };
    }
    return ClosedCurve::on_grid(nonvanishing(std::move(chart)), alpha.thetas());
  }

  if (pair.first != PointLabel::Xi && pair.second != PointLabel::Xi) {
    const Complex d = phi(spec, spec.t0, pair.first).value() -
                      phi(spec, spec.t0, pair.second).value();
    return ClosedCurve::constant(d, samples);
  }
  const ClosedCurve::Parametrization a = alpha.parametrization();
  ClosedCurve::Parametrization diff = [spec, a, pair](double theta) -> ExtendedComplex {
    const Complex t = a(theta).value();
    const ExtendedComplex u = phi(spec, t, pair.first);
    const ExtendedComplex v = phi(spec, t, pair.second);
    if (u.is_infinite() || v.is_infinite()) {
      throw PoleOnCurveError(theta, "motion hits infinity on the generator");
    }
    return u.value() - v.value();
  };
  return ClosedCurve::on_grid(nonvanishing(std::move(diff)), alpha.thetas());
}

const WindingReport& PairWindingTable::at(LabelPair pair) const {
  for (const PairWinding& e : entries) {
    if (e.pair == pair || (e.pair.first == pair.second && e.pair.second == pair.first)) {
      return e.report;
    }
  }
  throw DomainError("pair " + pair_key(pair) + " not in table");
}

PairWindingTable zero_winding_verdict(const MotionSpec& spec,
                                      const VerdictOptions& options) {
  PairWindingTable table;
  bool all_zero = true;
  bool all_certified = true;
  for (LabelPair pair : kAllPairs) {
    const ClosedCurve delta = delta_curve(spec, pair, options.samples, options.radius_factor);
    const WindingReport report = winding_number(delta, 0.0, options.winding);
    if (!report.certified && all_certified) {
      all_certified = false;
      table.failing_pair = pair_key(pair);
    }
    all_zero = all_zero && report.winding == 0;
    table.entries.push_back({pair, report});
  }
  if (all_certified) table.verdict = all_zero;
  return table;
}

}  // namespace holomotion
