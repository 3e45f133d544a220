#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "holomotion/errors.hpp"
#include "holomotion/motion.hpp"

using namespace holomotion;

namespace {

MotionSpec default_motion(int n) { return make_motion(select_parameters(n)); }

}  // namespace

TEST(PairKeys, RoundTripAndOrder) {
  const std::vector<std::string> want{"xi_0", "xi_1", "xi_inf", "0_1", "0_inf", "1_inf"};
  for (std::size_t k = 0; k < kAllPairs.size(); ++k) {
    EXPECT_EQ(pair_key(kAllPairs[k]), want[k]);
    EXPECT_EQ(parse_pair_key(want[k]), kAllPairs[k]);
  }
  const auto reversed = parse_pair_key("0_xi");
  ASSERT_TRUE(reversed);
  EXPECT_EQ(reversed->first, PointLabel::Zero);
  EXPECT_FALSE(parse_pair_key("xi_xi"));
  EXPECT_FALSE(parse_pair_key("2_1"));
}

TEST(MotionSpecTest, ParameterSpaceContainsBasepoint) {
  for (int n : {2, 3, 4}) {
    const MotionSpec spec = default_motion(n);
    EXPECT_EQ(spec.xi, spec.t0);
    EXPECT_TRUE(spec.in_parameter_space(spec.t0));
    EXPECT_TRUE(spec.reciprocal_symmetric);
    EXPECT_FALSE(spec.in_parameter_space(spec.inner_radius));
    EXPECT_FALSE(spec.in_parameter_space(spec.outer_radius * 1.0001));
    // z0 t lies in A for t in X.
    EXPECT_NEAR(spec.params.z0 * spec.inner_radius, 1.0 / spec.params.R, 1e-15);
    EXPECT_NEAR(spec.params.z0 * spec.outer_radius, spec.params.R, 1e-14);
  }
}

TEST(Phi, Examples) {
  const MotionSpec spec = default_motion(2);
  const ExtendedComplex at_base = phi(spec, spec.t0, PointLabel::Xi);
  EXPECT_LE(std::abs(at_base.value() - spec.xi), 4 * std::numeric_limits<double>::epsilon() * spec.xi);
  const Complex t(0.0, spec.t0 * 1.01);
  EXPECT_EQ(phi(spec, t, PointLabel::Zero), ExtendedComplex(0.0));
  EXPECT_EQ(phi(spec, t, PointLabel::One), ExtendedComplex(1.0));
  EXPECT_TRUE(phi(spec, t, PointLabel::Infinity).is_infinite());

  // z0 t = i gives xi g(i) = xi (-7 - 4 sqrt2 i) / 9.
  const Complex ti = Complex(0.0, 1.0) * spec.t0;
  const Complex want = spec.xi * Complex(-7.0, -4.0 * std::numbers::sqrt2) / 9.0;
  EXPECT_LE(std::abs(phi(spec, ti, PointLabel::Xi).value() - want), 1e-13 * spec.xi);
  EXPECT_THROW(phi(spec, spec.outer_radius * 2.0, PointLabel::Xi), DomainError);
  EXPECT_THROW(phi(spec, 0.0, PointLabel::Zero), DomainError);
}

TEST(Phi, StaysInsideScaledImageOfA) {
  const MotionSpec spec = default_motion(2);
  const AxiomReport ax = axiom_check(spec);
  const double lo = spec.xi * ax.min_abs_g_on_boundary * (1.0 - 1e-6);
  const double hi = spec.xi * ax.max_abs_g_on_boundary * (1.0 + 1e-6);
  for (double frac : {0.1, 0.5, 0.9}) {
    const double rho = std::exp(std::log(spec.inner_radius) +
                                frac * (std::log(spec.outer_radius) - std::log(spec.inner_radius)));
    for (int k = 0; k < 1024; ++k) {
      const double m = std::abs(phi(spec, rho * unit_phase(k / 1024.0), PointLabel::Xi).value());
      ASSERT_GE(m, lo);
      ASSERT_LE(m, hi);
    }
  }
}

TEST(AxiomCheck, DefaultsPass) {
  for (int n : {2, 3}) {
    const AxiomReport r = axiom_check(default_motion(n));
    EXPECT_TRUE(r.basepoint_pass);
    EXPECT_TRUE(r.injectivity_pass);
    EXPECT_TRUE(r.holomorphy_pass);
    EXPECT_TRUE(r.all_pass());
    EXPECT_TRUE(r.rule_zero_pole_free_on_A);
    EXPECT_GT(r.min_abs_g_on_boundary, 0.0);
    EXPECT_GT(r.min_abs_g_minus_z0_on_boundary, 0.0);
    EXPECT_LE(r.holomorphy_residual, 1e-8);
    EXPECT_LE(r.basepoint_residual, 16 * std::numeric_limits<double>::epsilon());
  }
}

TEST(AxiomCheck, ShiftAboveMinimumBreaksInjectivity) {
  ConstructionParams p = select_parameters(2);
  p.z0 = 0.5;
  const AxiomReport r = axiom_check(make_motion(p));
  EXPECT_FALSE(r.injectivity_pass);
  EXPECT_TRUE(r.basepoint_pass);
}

TEST(AxiomCheck, RuleWithPoleInAnnulusFailsInjectivity) {
  const MotionSpec spec = default_motion(2);
  const FactoredRational bad({{1.0, 1}}, {{Complex(0.0, 1.0), 1}}, 1.0);
  const AxiomReport r = axiom_check(with_rule(spec, bad));
  EXPECT_FALSE(r.rule_zero_pole_free_on_A);
  EXPECT_FALSE(r.injectivity_pass);
}

TEST(AxiomCheck, GridTooCoarse) {
  AxiomOptions o;
  o.grid = 32;
  EXPECT_THROW(axiom_check(default_motion(2), o), DomainError);
}

TEST(DeltaCurve, Examples) {
  const MotionSpec spec = default_motion(2);
  const ClosedCurve xi0 = delta_curve(spec, {PointLabel::Xi, PointLabel::Zero});
  EXPECT_EQ(winding_number(xi0, 0.0).winding, 0);
  const ClosedCurve one0 = delta_curve(spec, {PointLabel::One, PointLabel::Zero});
  EXPECT_TRUE(one0.is_constant());
  EXPECT_EQ(one0.samples().front().z, ExtendedComplex(1.0));
  EXPECT_EQ(winding_number(one0, 0.0).winding, 0);
  const ClosedCurve xi_inf = delta_curve(spec, {PointLabel::Xi, PointLabel::Infinity});
  EXPECT_EQ(winding_number(xi_inf, 0.0).winding, -winding_number(xi0, 0.0).winding);
  EXPECT_THROW(delta_curve(spec, {PointLabel::Xi, PointLabel::Xi}), DomainError);
}

TEST(DeltaCurve, XiOneMatchesArgumentPrinciple) {
  for (int n : {2, 3}) {
    const MotionSpec spec = default_motion(n);
    const int w = winding_number(delta_curve(spec, {PointLabel::Xi, PointLabel::One}), 0.0).winding;
    EXPECT_EQ(w, zero_pole_count(spec.params.h(), circle_curve(0.0, 1.0)));
    EXPECT_EQ(w, 0);
  }
}

TEST(GeneratorCurve, RadiusAndDomain) {
  const MotionSpec spec = default_motion(2);
  const ClosedCurve alpha = generator_curve(spec);
  EXPECT_NEAR(std::abs(alpha.samples().front().z.value() - spec.xi), 0.0, 1e-12);
  EXPECT_EQ(winding_number(alpha, 0.0).winding, 1);
  EXPECT_THROW(generator_curve(spec, spec.params.R * 1.5), DomainError);
}

TEST(ZeroWindingVerdict, DefaultMotions) {
  for (int n : {2, 3, 4}) {
    const PairWindingTable table = zero_winding_verdict(default_motion(n));
    ASSERT_EQ(table.entries.size(), 6u);
    ASSERT_TRUE(table.verdict.has_value());
    EXPECT_TRUE(*table.verdict);
    for (const PairWinding& e : table.entries) {
      EXPECT_TRUE(e.report.certified) << pair_key(e.pair);
      EXPECT_EQ(e.report.winding, 0) << pair_key(e.pair);
    }
  }
}

TEST(ZeroWindingVerdict, PerturbedGeneratorGivesSameIntegers) {
  const MotionSpec spec = default_motion(3);
  const PairWindingTable base = zero_winding_verdict(spec);
  VerdictOptions o;
  o.radius_factor = 1.01;
  const PairWindingTable moved = zero_winding_verdict(spec, o);
  for (std::size_t k = 0; k < base.entries.size(); ++k) {
    EXPECT_EQ(moved.entries[k].report.winding, base.entries[k].report.winding);
  }
}

TEST(ZeroWindingVerdict, IdentityRuleWindsOnce) {
  const MotionSpec spec = with_rule(default_motion(2), FactoredRational::identity());
  const PairWindingTable table = zero_winding_verdict(spec);
  ASSERT_TRUE(table.verdict.has_value());
  EXPECT_FALSE(*table.verdict);
  EXPECT_EQ(table.at({PointLabel::Xi, PointLabel::Zero}).winding, 1);
  EXPECT_EQ(table.at({PointLabel::Xi, PointLabel::Infinity}).winding, -1);
  EXPECT_EQ(table.at({PointLabel::Zero, PointLabel::One}).winding, 0);
}

TEST(ZeroWindingVerdict, WithheldWhenUncertified) {
  VerdictOptions o;
  o.samples = 16;
  o.winding.max_depth = 0;
  const PairWindingTable table = zero_winding_verdict(default_motion(2), o);
  EXPECT_FALSE(table.verdict.has_value());
  EXPECT_FALSE(table.failing_pair.empty());
}
