#include "holomotion/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "holomotion/errors.hpp"

namespace holomotion {

namespace {

std::vector<Factor> merge_factors(std::vector<Factor> factors, const char* kind) {
  std::vector<Factor> merged;
  for (const Factor& f : factors) {
    if (f.multiplicity <= 0) {
      throw DomainError(std::string(kind) + " multiplicity must be positive");
    }
    if (!std::isfinite(f.location.real()) || !std::isfinite(f.location.imag())) {
      throw DomainError(std::string(kind) + " location must be finite");
    }
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Factor& m) {
      return m.location == f.location;
    });
    if (it == merged.end()) {
      merged.push_back(f);
    } else {
      it->multiplicity += f.multiplicity;
    }
  }
  return merged;
}

int total_order(const std::vector<Factor>& factors) {
  return std::accumulate(factors.begin(), factors.end(), 0,
                         [](int acc, const Factor& f) { return acc + f.multiplicity; });
}

Complex int_power(Complex base, int exponent) {
  Complex result{1.0, 0.0};
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

FactoredRational::FactoredRational(std::vector<Factor> zeros,
                                   std::vector<Factor> poles, Complex scale)
    : zeros_(merge_factors(std::move(zeros), "zero")),
      poles_(merge_factors(std::move(poles), "pole")),
      scale_(scale) {
  if (scale_ == Complex{0.0, 0.0}) throw DomainError("scale must be nonzero");
  for (const Factor& z : zeros_) {
    for (const Factor& p : poles_) {
      if (z.location == p.location) {
        throw DomainError("location listed as both zero and pole");
      }
    }
  }
}

FactoredRational FactoredRational::identity() {
  return FactoredRational({{Complex{0.0, 0.0}, 1}}, {}, Complex{1.0, 0.0});
}

int FactoredRational::finite_zero_order() const { return total_order(zeros_); }
int FactoredRational::finite_pole_order() const { return total_order(poles_); }

int FactoredRational::degree() const {
  return std::max(finite_zero_order(), finite_pole_order());
}

int FactoredRational::pole_order_at_infinity() const {
  return finite_zero_order() - finite_pole_order();
}

ExtendedComplex FactoredRational::operator()(const ExtendedComplex& z) const {
  if (z.is_infinite()) {
    const int order = pole_order_at_infinity();
    if (order > 0) return ExtendedComplex::infinity();
    if (order < 0) return Complex{0.0, 0.0};
    return scale_;
  }
  const Complex w = z.value();
  for (const Factor& p : poles_) {
    if (w == p.location) return ExtendedComplex::infinity();
  }
  Complex numerator{1.0, 0.0};
  for (const Factor& f : zeros_) {
    const Complex d = w - f.location;
    if (d == Complex{0.0, 0.0}) return Complex{0.0, 0.0};
    numerator *= int_power(d, f.multiplicity);
  }
  Complex denominator{1.0, 0.0};
  for (const Factor& f : poles_) {
    denominator *= int_power(w - f.location, f.multiplicity);
  }
  const Complex value = scale_ * numerator / denominator;
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw EvaluationError("factored evaluation overflowed at " + z.to_string());
  }
  return value;
}

ShiftedRational::ShiftedRational(FactoredRational base, Complex shift)
    : base_(std::move(base)), shift_(shift) {
  if (!std::isfinite(shift.real()) || !std::isfinite(shift.imag())) {
    throw DomainError("shift must be finite");
  }
}

ExtendedComplex ShiftedRational::operator()(const ExtendedComplex& z) const {
  const ExtendedComplex v = base_(z);
  if (v.is_infinite()) return v;
  return v.value() - shift_;
}

FactoredRational blaschke_map(double a) {
  if (!(a > 1.0)) throw DomainError("blaschke_map requires a > 1");
  // z (z - a) / (1 - a z) = (-1/a) z (z - a) / (z - 1/a)
  return FactoredRational({{Complex{0.0, 0.0}, 1}, {Complex{a, 0.0}, 1}},
                          {{Complex{1.0 / a, 0.0}, 1}}, Complex{-1.0 / a, 0.0});
}

FactoredRational power_compose(const FactoredRational& f, int n) {
  if (n < 1) throw DomainError("power_compose requires n >= 1");
  auto scaled = [n](std::vector<Factor> factors) {
    for (Factor& factor : factors) factor.multiplicity *= n;
    return factors;
  };
  return FactoredRational(scaled(f.zeros()), scaled(f.poles()),
                          int_power(f.scale(), n));
}

CriticalData critical_data(double a) {
  if (!(a > 1.0)) throw DomainError("critical_data requires a > 1");
  const double s = std::sqrt(a * a - 1.0);
  CriticalData d;
  d.c1 = Complex{1.0 / a, s / a};
  d.c2 = std::conj(d.c1);
  d.v1 = Complex{1.0 - 2.0 / (a * a), -2.0 * s / (a * a)};
  d.v2 = std::conj(d.v1);
  d.theta = std::arg(d.v2) / kTwoPi;
  return d;
}

double reciprocal_symmetry_check(const FactoredRational& g, int samples,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_radius(std::log(0.5), std::log(2.0));
  std::uniform_real_distribution<double> turns(0.0, 1.0);
  auto near_special = [&](Complex w) {
    for (const auto* list : {&g.zeros(), &g.poles()}) {
      for (const Factor& f : *list) {
        if (std::abs(w - f.location) < 1e-9) return true;
        if (f.location != Complex{0.0, 0.0} &&
            std::abs(w - 1.0 / f.location) < 1e-9) {
          return true;
        }
      }
    }
    return std::abs(w) < 1e-9;
  };
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Complex w = std::polar(std::exp(log_radius(rng)), kTwoPi * turns(rng));
    if (near_special(w)) continue;
    const ExtendedComplex gw = g(w);
    const ExtendedComplex ginv = g(1.0 / w);
    if (gw.is_infinite() || ginv.is_infinite()) continue;
    worst = std::max(worst, std::abs(gw.value() * ginv.value() - 1.0));
  }
  return worst;
}

}  // namespace holomotion
