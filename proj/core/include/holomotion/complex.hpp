#pragma once

#include <complex>
#include <concepts>
#include <functional>
#include <numbers>
#include <string>

namespace holomotion {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point of the Riemann sphere: either a finite complex value or infinity.
class ExtendedComplex {
 public:
  ExtendedComplex() = default;
  ExtendedComplex(Complex z);  // NOLINT(google-explicit-constructor)
  ExtendedComplex(double x) : ExtendedComplex(Complex{x, 0.0}) {}  // NOLINT

  static ExtendedComplex infinity() {
    ExtendedComplex e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Finite value; throws EvaluationError on infinity.
  const Complex& value() const;

  bool operator==(const ExtendedComplex& other) const {
    if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
    return value_ == other.value_;
  }

  std::string to_string() const;

 private:
  Complex value_{0.0, 0.0};
  bool infinite_ = false;
};

/// Unit-circle point e^{2 pi i turns}.
inline Complex unit_phase(double turns) {
  return std::polar(1.0, kTwoPi * turns);
}

/// Any callable that maps sphere points to sphere points.
template <typename F>
concept EvaluableMap = std::invocable<const F&, const ExtendedComplex&> &&
    std::convertible_to<std::invoke_result_t<const F&, const ExtendedComplex&>,
                        ExtendedComplex>;

/// Type-erased evaluable map.
using ComplexMap = std::function<ExtendedComplex(const ExtendedComplex&)>;

}  // namespace holomotion
