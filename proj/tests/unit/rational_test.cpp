#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "holomotion/errors.hpp"
#include "holomotion/rational.hpp"
#include "oracles.hpp"

using namespace holomotion;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

Complex finite(const ExtendedComplex& z) { return z.value(); }

}  // namespace

TEST(FactoredRational, RejectsInvalidFactors) {
  EXPECT_THROW(FactoredRational({{1.0, 0}}, {}, 1.0), DomainError);
  EXPECT_THROW(FactoredRational({{1.0, 1}}, {}, 0.0), DomainError);
  EXPECT_THROW(FactoredRational({{2.0, 1}}, {{2.0, 1}}, 1.0), DomainError);
}

TEST(FactoredRational, MergesRepeatedLocations) {
  const FactoredRational f({{1.0, 1}, {1.0, 2}}, {{3.0, 1}}, 2.0);
  ASSERT_EQ(f.zeros().size(), 1u);
  EXPECT_EQ(f.zeros()[0].multiplicity, 3);
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.pole_order_at_infinity(), 2);
}

TEST(FactoredRational, ExactValuesAtListedZerosAndPoles) {
  const FactoredRational f = blaschke_map(2.0);
  EXPECT_EQ(f(0.0), ExtendedComplex(0.0));
  EXPECT_EQ(f(2.0), ExtendedComplex(0.0));
  EXPECT_TRUE(f(0.5).is_infinite());
  EXPECT_TRUE(f(ExtendedComplex::infinity()).is_infinite());
}

TEST(FactoredRational, IdentityIsIdentity) {
  const FactoredRational id = FactoredRational::identity();
  EXPECT_EQ(finite(id(Complex(0.3, -0.7))), Complex(0.3, -0.7));
  EXPECT_TRUE(id(ExtendedComplex::infinity()).is_infinite());
}

TEST(FactoredRational, ValueAtInfinityFollowsDegreeBalance) {
  const FactoredRational balanced({{1.0, 1}}, {{2.0, 1}}, 3.0);
  EXPECT_NEAR(std::abs(finite(balanced(ExtendedComplex::infinity())) - 3.0), 0.0, 1e-15);
  const FactoredRational decaying({}, {{2.0, 1}}, 3.0);
  EXPECT_EQ(decaying(ExtendedComplex::infinity()), ExtendedComplex(0.0));
}

TEST(BlaschkeMap, DomainError) {
  EXPECT_THROW(blaschke_map(1.0), DomainError);
  EXPECT_THROW(blaschke_map(0.5), DomainError);
}

TEST(BlaschkeMap, FixesOne) { EXPECT_NEAR(std::abs(finite(blaschke_map(kSqrt2)(1.0)) - 1.0), 0.0, 1e-15); }

TEST(BlaschkeMap, HandValueAtI) {
  const Complex got = finite(blaschke_map(kSqrt2)(Complex(0, 1)));
  const Complex want = Complex(1.0, -2.0 * kSqrt2) / 3.0;
  EXPECT_NEAR(std::abs(got - want), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(got), 1.0, 1e-14);
}

TEST(BlaschkeMap, PreservesUnitCircle) {
  for (double a : {1.01, 1.5, kSqrt2, 2.0, 3.7, 10.0}) {
    const FactoredRational f = blaschke_map(a);
    for (int k = 0; k < 720; ++k) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / 720.0);
      if (std::abs(z - 1.0 / a) < 1e-12) continue;
      ASSERT_NEAR(std::abs(finite(f(z))), 1.0, 1e-10) << "a=" << a << " k=" << k;
    }
  }
}

TEST(BlaschkeMap, AgreesWithExpandedFormAtRandomPoints) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> ua(1.05, 6.0);
  for (int k = 0; k < 100; ++k) {
    const double a = ua(rng);
    const int n = 1 + k % 5;
    const Complex z(u(rng), u(rng));
    if (std::abs(1.0 - a * z) < 1e-3) continue;
    const Complex got = finite(power_compose(blaschke_map(a), n)(z));
    const Complex want = oracle::blaschke_power(a, n, z);
    ASSERT_LE(std::abs(got - want), 1e-10 * std::abs(want)) << "k=" << k;
  }
}

TEST(PowerCompose, ExamplesAndDegree) {
  const FactoredRational g = power_compose(blaschke_map(kSqrt2), 2);
  EXPECT_NEAR(std::abs(finite(g(1.0)) - 1.0), 0.0, 1e-15);
  const Complex gi = finite(g(Complex(0, 1)));
  EXPECT_NEAR(std::abs(gi - Complex(-7.0, -4.0 * kSqrt2) / 9.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(gi), 1.0, 1e-14);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(power_compose(blaschke_map(2.0), n).degree(), 2 * n);
  }
  const FactoredRational f = blaschke_map(3.0);
  EXPECT_EQ(power_compose(f, 1), f);
  EXPECT_THROW(power_compose(f, 0), DomainError);
}

TEST(CriticalData, SqrtTwo) {
  const CriticalData cd = critical_data(kSqrt2);
  EXPECT_NEAR(std::abs(cd.c1 - Complex(1.0, 1.0) / kSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cd.v1 - Complex(0.0, -1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cd.v2 - Complex(0.0, 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(cd.theta, 0.25, 1e-15);
}

TEST(CriticalData, ThetaAtTwoIsOneSixth) { EXPECT_NEAR(critical_data(2.0).theta, 1.0 / 6.0, 1e-15); }

TEST(CriticalData, ValuesOnUnitCircle) {
  const CriticalData cd = critical_data(3.0);
  EXPECT_NEAR(std::norm(cd.v2), 1.0, 1e-15);
  EXPECT_NEAR(std::norm(cd.v1), 1.0, 1e-15);
}

TEST(CriticalData, DerivativeVanishesAndMatchesOracle) {
  for (int k = 1; k <= 50; ++k) {
    const double a = 1.0 + 9.0 * k / 50.0;
    const CriticalData cd = critical_data(a);
    EXPECT_LE(std::abs(oracle::blaschke_derivative(a, cd.c1)), 1e-8) << a;
    EXPECT_LE(std::abs(finite(blaschke_map(a)(cd.c1)) - cd.v1), 1e-10) << a;
    EXPECT_NEAR(cd.theta, oracle::theta(a), 1e-12) << a;
  }
}

TEST(CriticalData, ThetaStrictlyDecreasing) {
  double prev = 1.0;
  for (int k = 1; k <= 400; ++k) {
    const double theta = critical_data(1.0 + 9.0 * k / 400.0).theta;
    ASSERT_LT(theta, prev) << k;
    prev = theta;
  }
}

TEST(CriticalData, DomainError) { EXPECT_THROW(critical_data(1.0), DomainError); }

TEST(ShiftedMap, Examples) {
  const FactoredRational g = power_compose(blaschke_map(kSqrt2), 2);
  const ShiftedRational zero = shifted_map(g, 0.0);
  for (Complex z : {Complex(0.2, 0.1), Complex(-1.5, 2.0), Complex(0, 1)}) {
    EXPECT_EQ(finite(zero(z)), finite(g(z)));
  }
  const double z0 = 0.05;
  const ShiftedRational h = shifted_map(g, z0);
  EXPECT_NEAR(std::abs(finite(h(1.0)) - (1.0 - z0)), 0.0, 1e-15);
  EXPECT_TRUE(h(1.0 / kSqrt2).is_infinite());
  double prev = 0.0;
  for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const double m = std::abs(finite(h(1.0 / kSqrt2 + eps * Complex(0.6, 0.8))));
    EXPECT_GT(m, prev);
    prev = m;
  }
  EXPECT_GT(prev, 1e8);
}

TEST(EvalExtended, PolesOfG) {
  for (int n : {2, 3}) {
    const double a = 1.0 / std::sin(std::numbers::pi / (2.0 * n));
    const FactoredRational g = power_compose(blaschke_map(a), n);
    EXPECT_TRUE(eval_extended(g, 1.0 / a).is_infinite());
    EXPECT_TRUE(eval_extended(g, ExtendedComplex::infinity()).is_infinite());
    EXPECT_EQ(g.pole_order_at_infinity(), n);
  }
  EXPECT_EQ(eval_extended(blaschke_map(2.5), 2.5), ExtendedComplex(0.0));
}

TEST(ReciprocalSymmetry, BlaschkeMapsAreSymmetric) {
  const FactoredRational g = power_compose(blaschke_map(kSqrt2), 2);
  EXPECT_LE(reciprocal_symmetry_check(g, 256), 1e-9);
  EXPECT_LE(reciprocal_symmetry_check(blaschke_map(kSqrt2), 256), 1e-12);
}

TEST(ReciprocalSymmetry, OnUnitCircleDirectly) {
  const FactoredRational g = power_compose(blaschke_map(2.0), 3);
  for (int k = 0; k < 64; ++k) {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / 64.0);
    const Complex prod = finite(g(w)) * finite(g(1.0 / w));
    EXPECT_NEAR(std::abs(prod - 1.0), 0.0, 1e-12);
  }
}

TEST(ReciprocalSymmetry, DetectsAsymmetricMap) {
  const FactoredRational shifted({{0.3, 1}}, {}, 1.0);
  EXPECT_GT(reciprocal_symmetry_check(shifted, 64), 1e-3);
}

TEST(ExtendedComplexTest, RejectsNonFinite) {
  EXPECT_THROW(ExtendedComplex(Complex(NAN, 0.0)), EvaluationError);
  EXPECT_THROW(ExtendedComplex::infinity().value(), EvaluationError);
}
