#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holomotion/contour.hpp"

namespace holomotion {

/// x = positive loop about the first puncture, y about the second.
struct Letter {
  int generator = 0;  // 0 -> x, 1 -> y
  int exponent = 1;   // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }
  bool operator==(const Letter&) const = default;
};

/// Word in the free group on {x, y}. Serialized over "xXyY", capitals are
/// inverses.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Throws DomainError on characters outside "xXyY".
  static FreeWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool is_reduced() const;
  bool is_cyclically_reduced() const;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;

  std::string to_string() const;

  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord reduce_word(const FreeWord& w);

/// Reduces, then strips inverse first/last pairs across the seam.
FreeWord cyclic_reduce(const FreeWord& w);

/// Lexicographically least rotation of the cyclic reduction. Two words are
/// conjugate iff their normal forms are equal.
FreeWord conjugacy_normal_form(const FreeWord& w);

/// (sum of x exponents, sum of y exponents).
std::pair<int, int> abelianize(const FreeWord& w);

/// C minus {p, q}, with a cut ray leaving each puncture.
struct PuncturedPlane {
  Complex p;
  Complex q;
  Complex ray_p;  // unit direction
  Complex ray_q;

  /// Rays pointing away from the other puncture. For 0 < q real this is the
  /// negative real axis from p = 0 and [q, inf) from q.
  static PuncturedPlane with_default_rays(Complex p, Complex q);

  /// Throws DomainError for coincident punctures, a ray through the other
  /// puncture, or intersecting rays.
  static PuncturedPlane with_rays(Complex p, Complex q, Complex ray_p,
                                  Complex ray_q);
};

struct TraceOptions {
  int max_depth = 16;
  double nudge = 1e-9;
  double puncture_tolerance = 1e-9;
};

/// Crossing-sequence word of a closed curve.
///
/// The curve is refined until every chord is shorter than the distance of
/// its endpoints to both punctures; then each transversal crossing of a cut
/// ray emits a letter in parameter order, x for a counter-clockwise crossing
/// of p's ray and X for a clockwise one (likewise y, Y). A sample lying
/// exactly on a ray is moved by +-nudge in parameter. The result is not
/// reduced.
FreeWord trace_word(const PuncturedPlane& plane, const ClosedCurve& c,
                    const TraceOptions& options = {});

struct HomotopyClass {
  FreeWord word;
  FreeWord reduced;
  FreeWord cyclic;
  FreeWord normal_form;
  std::pair<int, int> abelianization;

  /// Free homotopy class is nontrivial iff the cyclic reduction is nonempty.
  bool nontrivial() const { return !cyclic.empty(); }
};

HomotopyClass classify_loop(const PuncturedPlane& plane, const ClosedCurve& c,
                            const TraceOptions& options = {});

}  // namespace holomotion
