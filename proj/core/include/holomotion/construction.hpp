#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holomotion/contour.hpp"
#include "holomotion/rational.hpp"

namespace holomotion {

/// The constants (n, a_n, R, r, m, z0) and the maps g = q_n o f_{a_n}, h = g - z0.
///
/// A = {1/R < |z| < R}, D = {|z| < r}; m_est stands for min |g| over the
/// closed unit disk minus D.
struct ConstructionParams {
  int n = 2;
  double a_n = 0.0;
  double R = 0.0;
  double r = 0.0;
  double m_est = 0.0;
  double z0 = 0.0;
  FactoredRational g = FactoredRational::identity();

  ShiftedRational h() const { return ShiftedRational(g, z0); }
};

/// a_n = 1 / sin(pi / (2n)), the parameter with theta(a_n) = 1/(2n).
double solve_a(int n);

struct ParameterOverrides {
  std::optional<double> R;
  std::optional<double> r;
  std::optional<double> z0;
};

struct SelectionOptions {
  double rtol = 1e-8;
  int initial_samples = 1024;
  double grid_step = 0.01;
  /// min|g| on the boundary of A must exceed this factor times r for grid R.
  double disjointness_margin = 1.1;
};

/// Picks R, r, m_est and z0 for the given n.
///
/// Defaults: r = 0.3 when 0.3 < 1/a_n else 0.8/a_n; R is the largest value
/// on {1 + k * grid_step} below min(a_n, 2) whose |g| minimum on the
/// boundary of A exceeds disjointness_margin * r; m_est = min(1, min |g| on
/// the boundary of D); z0 = 0.5 * 0.9 * m_est. Throws DomainError for n < 2
/// and ConstraintViolation naming the first failed predicate otherwise.
ConstructionParams select_parameters(int n,
                                     const ParameterOverrides& overrides = {},
                                     const SelectionOptions& options = {});

struct CheckItem {
  std::string name;
  bool pass = false;
  double value = 0.0;
  std::string detail;
};

/// Invariants of ConstructionParams, evaluated in a fixed order.
std::vector<CheckItem> check_invariants(const ConstructionParams& p,
                                        const SelectionOptions& options = {});

struct CertificateOptions {
  int samples = 1024;
  WindingOptions winding;
  double rtol = 1e-8;
  /// Rouché margins below this are reported as fragile.
  double fragile_margin = 1e-3;
  /// Radius of the counting circle just inside the unit circle.
  double inner_unit_radius = 0.999;
  int unit_circle_samples = 4096;
  double unit_circle_tolerance = 1e-9;
};

struct CertificateReport {
  double rouche_margin = 0.0;
  bool rouche_fragile = false;
  int zeros_of_h_in_D = 0;
  int h_count_inside_unit = 0;
  int g_count_in_D = 0;
  int g_count_inside_unit = 0;
  double g_unit_circle_dev = 0.0;
  std::vector<CheckItem> items;

  bool all_pass() const;
  const CheckItem* find(const std::string& name) const;
};

/// Rouché on the boundary of D, the zero counts of h and g inside D and just
/// inside T, the unit-circle image check, and all parameter invariants.
CertificateReport certify_construction(const ConstructionParams& p,
                                       const CertificateOptions& options = {});

}  // namespace holomotion
