#include "holomotion/construction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "holomotion/errors.hpp"

namespace holomotion {

namespace {

std::string number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct AnnulusBound {
  double min;
  double max;
};

// |g| extrema over both boundary circles of A. g has no zeros or poles in
// the closed annulus when 1 < R < a_n, so these bound |g| on all of it.
AnnulusBound annulus_boundary_modulus(const FactoredRational& g, double R,
                                      const SelectionOptions& options) {
  const ModulusExtrema outer =
      modulus_extrema(g, circle_curve(0.0, R, options.initial_samples), options.rtol);
  const ModulusExtrema inner = modulus_extrema(
      g, circle_curve(0.0, 1.0 / R, options.initial_samples), options.rtol);
  return {std::min(outer.min, inner.min), std::max(outer.max, inner.max)};
}

// Sampled minimum on the two circles at the initial density. Refinement can
// only lower a sampled minimum, so failing here is already decisive.
double coarse_annulus_min(const FactoredRational& g, double R, int samples) {
  double lo = std::numeric_limits<double>::infinity();
  for (double radius : {R, 1.0 / R}) {
    for (int k = 0; k < samples; ++k) {
      const ExtendedComplex v = g(radius * unit_phase(static_cast<double>(k) / samples));
      lo = std::min(lo, std::abs(v.value()));
    }
  }
  return lo;
}

const char* const kThetaPredicate = "theta(a_n) = 1/(2n)";
const char* const kRLowerPredicate = "R > 1";
const char* const kRUpperPredicate = "R < a_n";
const char* const kSmallRPredicate = "0 < r < 1/a_n";
const char* const kZ0PositivePredicate = "z0 > 0";
const char* const kZ0BelowMPredicate = "z0 < m";
const char* const kZ0BelowRPredicate = "z0 < r";
const char* const kDisjointPredicate = "min|g| on boundary of A > r";

}  // namespace

double solve_a(int n) {
  if (n < 2) throw DomainError("solve_a requires n >= 2");
  return 1.0 / std::sin(std::numbers::pi / (2.0 * n));
}

ConstructionParams select_parameters(int n, const ParameterOverrides& overrides,
                                     const SelectionOptions& options) {
  if (n < 2) throw DomainError("select_parameters requires n >= 2");
  ConstructionParams p;
  p.n = n;
  p.a_n = solve_a(n);
  p.g = power_compose(blaschke_map(p.a_n), n);
  const double pole = 1.0 / p.a_n;

  if (overrides.r) {
    const double r = *overrides.r;
    if (!(r > 0.0 && r < pole)) {
      throw ConstraintViolation(kSmallRPredicate,
                                "r = " + number(r) + " is not in (0, 1/a_n = " +
                                    number(pole) + ")");
    }
    p.r = r;
  } else {
    p.r = 0.3 < pole ? 0.3 : 0.8 * pole;
  }

  if (overrides.R) {
    const double R = *overrides.R;
    if (!(R > 1.0)) {
      throw ConstraintViolation(kRLowerPredicate, "R = " + number(R) + " must exceed 1");
    }
    if (!(R < p.a_n)) {
      throw ConstraintViolation(kRUpperPredicate,
                                "R = " + number(R) + " >= a_n = " + number(p.a_n) +
                                    " puts the zero a_n of g inside the closed annulus A");
    }
    const AnnulusBound bound = annulus_boundary_modulus(p.g, R, options);
    if (!(bound.min > p.r)) {
      throw ConstraintViolation(kDisjointPredicate,
                                "min|g| on the boundary of A is " + number(bound.min) +
                                    ", not above r = " + number(p.r));
    }
    p.R = R;
  } else {
    const double upper = std::min(p.a_n, 2.0);
    const double threshold = options.disjointness_margin * p.r;
    const int top = static_cast<int>(std::floor((upper - 1.0) / options.grid_step)) + 1;
    for (int k = top; k >= 1; --k) {
      const double R = 1.0 + k * options.grid_step;
      if (!(R < upper)) continue;
      if (!(coarse_annulus_min(p.g, R, options.initial_samples) > threshold)) continue;
      if (annulus_boundary_modulus(p.g, R, options).min > threshold) {
        p.R = R;
        break;
      }
    }
    if (p.R == 0.0) {
      throw ConstraintViolation(
          "min|g| on boundary of A > 1.1 r",
          "no grid value of R in (1, " + number(upper) +
              ") keeps g(A) clear of the closed disk D");
    }
  }

  const ModulusExtrema on_disk_boundary =
      modulus_extrema(p.g, circle_curve(0.0, p.r, options.initial_samples), options.rtol);
  p.m_est = std::min(1.0, on_disk_boundary.min);
  const double m_safe = ModulusExtrema::kSafetyFactor * p.m_est;

  if (overrides.z0) {
    p.z0 = *overrides.z0;
    if (!(p.z0 > 0.0)) {
      throw ConstraintViolation(kZ0PositivePredicate, "z0 = " + number(p.z0) + " must be positive");
    }
  } else {
    p.z0 = 0.5 * m_safe;
  }
  if (!(p.z0 < m_safe)) {
    throw ConstraintViolation(kZ0BelowMPredicate,
                              "z0 = " + number(p.z0) + " is not below 0.9 m = " +
                                  number(m_safe));
  }
  if (!(p.z0 < p.r)) {
    throw ConstraintViolation(kZ0BelowRPredicate,
                              "z0 = " + number(p.z0) + " is not below r = " + number(p.r));
  }
  return p;
}

std::vector<CheckItem> check_invariants(const ConstructionParams& p,
                                        const SelectionOptions& options) {
  std::vector<CheckItem> items;
  const double theta_err = std::abs(critical_data(p.a_n).theta - 1.0 / (2.0 * p.n));
  items.push_back({kThetaPredicate, theta_err <= 1e-12, theta_err, ""});
  items.push_back({kRLowerPredicate, p.R > 1.0, p.R - 1.0, ""});
  items.push_back({kRUpperPredicate, p.R < p.a_n, p.a_n - p.R, ""});
  items.push_back({kSmallRPredicate, p.r > 0.0 && p.r < 1.0 / p.a_n,
                   std::min(p.r, 1.0 / p.a_n - p.r), ""});
  items.push_back({kZ0PositivePredicate, p.z0 > 0.0, p.z0, ""});
  const double m_safe = ModulusExtrema::kSafetyFactor * p.m_est;
  items.push_back({kZ0BelowMPredicate, p.z0 < m_safe, m_safe - p.z0, ""});
  items.push_back({kZ0BelowRPredicate, p.z0 < p.r, p.r - p.z0, ""});
  if (p.R > 1.0) {
    const AnnulusBound bound = annulus_boundary_modulus(p.g, p.R, options);
    items.push_back({kDisjointPredicate, bound.min > p.r, bound.min - p.r,
                     "sampled, not an enclosure"});
  } else {
    items.push_back({kDisjointPredicate, false, 0.0, "R <= 1"});
  }
  return items;
}

bool CertificateReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

const CheckItem* CertificateReport::find(const std::string& name) const {
  for (const CheckItem& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

CertificateReport certify_construction(const ConstructionParams& p,
                                       const CertificateOptions& options) {
  CertificateReport report;
  const ShiftedRational h = p.h();
  const ClosedCurve disk_boundary = circle_curve(0.0, p.r, options.samples);
  const ClosedCurve inside_unit =
      circle_curve(0.0, options.inner_unit_radius, options.samples);

  auto guarded = [](const std::string& name, auto&& fn) {
    try {
      return fn();
    } catch (const SubcheckError&) {
      throw;
    } catch (const Error& e) {
      throw SubcheckError(name, e.what());
    }
  };

  const RoucheCertificate rouche = guarded("rouche on boundary of D", [&] {
    return rouche_certificate(p.g, h, disk_boundary, options.rtol);
  });
  report.rouche_margin = rouche.margin;
  report.rouche_fragile = rouche.margin < options.fragile_margin;
  report.items.push_back({"rouche on boundary of D", rouche.holds, rouche.margin,
                          report.rouche_fragile ? "fragile" : ""});

  report.zeros_of_h_in_D = guarded("zeros of h in D", [&] {
    return zero_pole_count(h, disk_boundary, options.winding);
  });
  report.items.push_back({"zeros of h in D", report.zeros_of_h_in_D == p.n,
                          static_cast<double>(report.zeros_of_h_in_D), ""});

  report.h_count_inside_unit = guarded("zeros minus poles of h inside T", [&] {
    return zero_pole_count(h, inside_unit, options.winding);
  });
  report.items.push_back({"zeros minus poles of h inside T",
                          report.h_count_inside_unit == 0,
                          static_cast<double>(report.h_count_inside_unit), ""});

  report.g_count_in_D = guarded("zeros of g in D", [&] {
    return zero_pole_count(p.g, disk_boundary, options.winding);
  });
  report.items.push_back({"zeros of g in D", report.g_count_in_D == p.n,
                          static_cast<double>(report.g_count_in_D), ""});

  report.g_count_inside_unit = guarded("zeros minus poles of g inside T", [&] {
    return zero_pole_count(p.g, inside_unit, options.winding);
  });
  report.items.push_back({"zeros minus poles of g inside T",
                          report.g_count_inside_unit == 0,
                          static_cast<double>(report.g_count_inside_unit), ""});

  double dev = 0.0;
  for (int k = 0; k < options.unit_circle_samples; ++k) {
    const ExtendedComplex v =
        p.g(unit_phase(static_cast<double>(k) / options.unit_circle_samples));
    dev = std::max(dev, std::abs(std::abs(v.value()) - 1.0));
  }
  report.g_unit_circle_dev = dev;
  report.items.push_back({"g maps T into T", dev <= options.unit_circle_tolerance, dev, ""});

  SelectionOptions selection;
  selection.rtol = options.rtol;
  selection.initial_samples = options.samples;
  for (CheckItem& item : check_invariants(p, selection)) {
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace holomotion
