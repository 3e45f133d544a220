#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holomotion/construction.hpp"
#include "holomotion/contour.hpp"

namespace holomotion {

/// Points of E = {0, 1, xi, inf}. The motion dispatches on these labels,
/// never on coordinates.
enum class PointLabel { Zero, One, Xi, Infinity };

std::string_view label_name(PointLabel label);

struct LabelPair {
  PointLabel first;
  PointLabel second;

  bool operator==(const LabelPair&) const = default;
};

/// The six unordered pairs in report order.
inline constexpr std::array<LabelPair, 6> kAllPairs{{
    {PointLabel::Xi, PointLabel::Zero},
    {PointLabel::Xi, PointLabel::One},
    {PointLabel::Xi, PointLabel::Infinity},
    {PointLabel::Zero, PointLabel::One},
    {PointLabel::Zero, PointLabel::Infinity},
    {PointLabel::One, PointLabel::Infinity},
}};

/// "xi_0", "xi_1", "xi_inf", "0_1", "0_inf", "1_inf".
std::string pair_key(LabelPair pair);
std::optional<LabelPair> parse_pair_key(std::string_view key);

/// Motion of E over the annulus X = {1/(z0 R) < |t| < R/z0} with basepoint
/// t0 = xi = 1/z0: phi(t, xi) = xi * rule(z0 t), identity on 0, 1, inf.
struct MotionSpec {
  ConstructionParams params;
  double xi = 0.0;
  double t0 = 0.0;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  /// The map applied to z0 t; g for the default motion.
  FactoredRational rule = FactoredRational::identity();
  /// rule(1/u) = 1/rule(u); lets the chart at infinity evaluate
  /// 1/phi(t, xi) as z0 rule(1/(z0 t)) instead of dividing by large values.
  bool reciprocal_symmetric = false;

  bool in_parameter_space(Complex t) const;
};

MotionSpec make_motion(const ConstructionParams& params);

/// Same parameter space, different rule. Used for deliberately broken motions.
MotionSpec with_rule(const MotionSpec& spec, FactoredRational rule);

/// Throws DomainError when t is not in X.
ExtendedComplex phi(const MotionSpec& spec, Complex t, PointLabel label);

struct AxiomOptions {
  int grid = 64;
  int boundary_samples = 1024;
  double rtol = 1e-8;
  /// Relative residual allowed at the basepoint (floating rounding only).
  double basepoint_tolerance = 16 * 2.220446049250313e-16;
  int cauchy_points = 10;
  int cauchy_nodes = 64;
  double cauchy_tolerance = 1e-8;
  std::uint64_t seed = 1729;
};

struct AxiomReport {
  // i) basepoint
  double basepoint_residual = 0.0;
  bool basepoint_pass = false;
  // ii) injectivity
  double min_abs_g_on_boundary = 0.0;
  double min_abs_g_minus_z0_on_boundary = 0.0;
  double max_abs_g_on_boundary = 0.0;
  double grid_min_abs_phi = 0.0;
  double grid_min_abs_phi_minus_one = 0.0;
  bool grid_all_finite = false;
  /// No zero or pole of the rule in the closed annulus A (factored data).
  bool rule_zero_pole_free_on_A = false;
  bool injectivity_pass = false;
  // iii) holomorphy
  bool holomorphy_structural = false;
  double holomorphy_residual = 0.0;
  bool holomorphy_pass = false;

  bool all_pass() const {
    return basepoint_pass && injectivity_pass && holomorphy_pass;
  }
};

/// Throws DomainError when options.grid < 64.
AxiomReport axiom_check(const MotionSpec& spec, const AxiomOptions& options = {});

/// alpha(theta) = radius_factor * xi * e^{2 pi i theta}, the generator of X.
ClosedCurve generator_curve(const MotionSpec& spec, double radius_factor = 1.0,
                            int samples = 1024);

/// phi(alpha, first) - phi(alpha, second) for finite pairs; for pairs with
/// infinity, 1 / phi(alpha, other) in the chart w = 1/z. Sampling a zero
/// throws InjectivityError.
ClosedCurve delta_curve(const MotionSpec& spec, LabelPair pair,
                        int samples = 1024, double radius_factor = 1.0);

struct VerdictOptions {
  int samples = 1024;
  double radius_factor = 1.0;
  WindingOptions winding;
};

struct PairWinding {
  LabelPair pair;
  WindingReport report;
};

struct PairWindingTable {
  std::vector<PairWinding> entries;
  /// Empty when some winding failed to certify; failing_pair names it.
  std::optional<bool> verdict;
  std::string failing_pair;

  const WindingReport& at(LabelPair pair) const;
};

PairWindingTable zero_winding_verdict(const MotionSpec& spec,
                                      const VerdictOptions& options = {});

}  // namespace holomotion
