#include "holomotion/homotopy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "holomotion/errors.hpp"

namespace holomotion {

namespace {

char letter_char(Letter l) {
  if (l.generator == 0) return l.exponent > 0 ? 'x' : 'X';
  return l.exponent > 0 ? 'y' : 'Y';
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// u lies on the ray {s >= 0} of the positive real axis (origin excluded).
bool on_positive_axis(Complex u) { return u.imag() == 0.0 && u.real() > 0.0; }

struct Crossing {
  double along;  // affine position on the chord, in [0, 1]
  Letter letter;
};

}  // namespace

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'x':
        letters.push_back({0, 1});
        break;
      case 'X':
        letters.push_back({0, -1});
        break;
      case 'y':
        letters.push_back({1, 1});
        break;
      case 'Y':
        letters.push_back({1, -1});
        break;
      case ' ':
        break;
      default:
        throw DomainError(std::string("invalid letter '") + c + "' in free word");
    }
  }
  return FreeWord(std::move(letters));
}

bool FreeWord::is_reduced() const {
  for (std::size_t k = 0; k + 1 < letters_.size(); ++k) {
    if (letters_[k + 1] == letters_[k].inverse()) return false;
  }
  return true;
}

bool FreeWord::is_cyclically_reduced() const {
  if (!is_reduced()) return false;
  return letters_.size() < 2 || !(letters_.front() == letters_.back().inverse());
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = l.inverse();
  return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return FreeWord(std::move(out));
}

std::string FreeWord::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

FreeWord reduce_word(const FreeWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return FreeWord(std::move(stack));
}

FreeWord cyclic_reduce(const FreeWord& w) {
  const FreeWord reduced = reduce_word(w);
  const std::vector<Letter>& r = reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return FreeWord(std::vector<Letter>(r.begin() + static_cast<std::ptrdiff_t>(lo),
                                      r.begin() + static_cast<std::ptrdiff_t>(hi)));
}

FreeWord conjugacy_normal_form(const FreeWord& w) {
  const FreeWord c = cyclic_reduce(w);
  if (c.size() < 2) return c;
  const std::string s = c.to_string();
  std::string best = s;
  for (std::size_t k = 1; k < s.size(); ++k) {
    std::string rotated = s.substr(k) + s.substr(0, k);
    if (rotated < best) best = std::move(rotated);
  }
  return FreeWord::parse(best);
}

std::pair<int, int> abelianize(const FreeWord& w) {
  std::pair<int, int> out{0, 0};
  for (Letter l : w.letters()) {
    (l.generator == 0 ? out.first : out.second) += l.exponent;
  }
  return out;
}

PuncturedPlane PuncturedPlane::with_default_rays(Complex p, Complex q) {
  if (p == q) throw DomainError("punctures must be distinct");
  const Complex away = (p - q) / std::abs(p - q);
  return with_rays(p, q, away, -away);
}

PuncturedPlane PuncturedPlane::with_rays(Complex p, Complex q, Complex ray_p,
                                         Complex ray_q) {
  if (p == q) throw DomainError("punctures must be distinct");
  if (std::abs(ray_p) == 0.0 || std::abs(ray_q) == 0.0) {
    throw DomainError("ray directions must be nonzero");
  }
  ray_p /= std::abs(ray_p);
  ray_q /= std::abs(ray_q);
  auto passes_through = [](Complex origin, Complex dir, Complex point) {
    const Complex u = (point - origin) / dir;
    return std::abs(u.imag()) <= 1e-12 * std::abs(u) && u.real() > 0.0;
  };
  if (passes_through(p, ray_p, q) || passes_through(q, ray_q, p)) {
    throw DomainError("a cut ray passes through the other puncture");
  }
  const double det = cross(ray_p, ray_q);
  if (std::abs(det) > 1e-15) {
    // p + s ray_p = q + t ray_q
    const Complex w = q - p;
    const double s = cross(w, ray_q) / det;
    const double t = cross(w, ray_p) / det;
    if (s >= 0.0 && t >= 0.0) throw DomainError("cut rays intersect");
  }
  return {p, q, ray_p, ray_q};
}

FreeWord trace_word(const PuncturedPlane& plane, const ClosedCurve& c,
                    const TraceOptions& options) {
  const std::array<Complex, 2> origin{plane.p, plane.q};
  const std::array<Complex, 2> direction{plane.ray_p, plane.ray_q};

  auto check_point = [&](const CurveSample& s) {
    if (s.z.is_infinite()) {
      throw PointOnCurveError(s.theta, "curve passes through infinity");
    }
    for (const Complex& o : origin) {
      if (std::abs(s.z.value() - o) <= options.puncture_tolerance) {
        throw PointOnCurveError(s.theta, "curve passes through a puncture");
      }
    }
  };

  if (c.is_constant()) {
    check_point(c.samples().front());
    return {};
  }

  // Refine until every chord is shorter than its endpoints' distance to
  // either puncture.
  ClosedCurve current = c;
  for (int depth = 0;; ++depth) {
    const auto& s = current.samples();
    std::vector<double> clearance(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      check_point(s[k]);
      clearance[k] = std::min(std::abs(s[k].z.value() - origin[0]),
                              std::abs(s[k].z.value() - origin[1]));
    }
    std::vector<std::size_t> unsafe;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      const double chord = std::abs(s[k + 1].z.value() - s[k].z.value());
      if (!(chord < std::min(clearance[k], clearance[k + 1]))) unsafe.push_back(k);
    }
    if (unsafe.empty()) break;
    if (depth >= options.max_depth) {
      throw DegenerateCrossingError("curve could not be refined clear of the punctures");
    }
    current = current.refined(unsafe);
  }

  const auto& samples = current.samples();
  const std::size_t n = samples.size() - 1;
  std::vector<Complex> z(samples.size());
  auto on_some_ray = [&](Complex v) {
    for (int r = 0; r < 2; ++r) {
      if (on_positive_axis((v - origin[r]) / direction[r])) return true;
    }
    return false;
  };
  for (std::size_t k = 0; k < n; ++k) {
    Complex v = samples[k].z.value();
    if (on_some_ray(v)) {
      const double theta = samples[k].theta;
      const double prev = k == 0 ? samples[n - 1].theta - 1.0 : samples[k - 1].theta;
      const double next = samples[k + 1].theta;
      bool resolved = false;
      for (double candidate : {theta + options.nudge, theta - options.nudge}) {
        if (!(candidate > prev && candidate < next)) continue;
        const double wrapped = candidate < 0.0 ? candidate + 1.0 : candidate;
        const ExtendedComplex moved = current.at(wrapped);
        if (moved.is_finite() && !on_some_ray(moved.value())) {
          v = moved.value();
          resolved = true;
          break;
        }
      }
      if (!resolved) {
        throw DegenerateCrossingError("sample stays on a cut ray after nudging");
      }
    }
    z[k] = v;
  }
  z[n] = z[0];

  std::vector<Letter> letters;
  for (std::size_t k = 0; k < n; ++k) {
    std::array<Crossing, 2> found{};
    int count = 0;
    for (int r = 0; r < 2; ++r) {
      const Complex u0 = (z[k] - origin[r]) / direction[r];
      const Complex u1 = (z[k + 1] - origin[r]) / direction[r];
      const bool below0 = u0.imag() < 0.0;
      const bool below1 = u1.imag() < 0.0;
      if (below0 == below1) continue;
      const double along = -u0.imag() / (u1.imag() - u0.imag());
      const double x = u0.real() + along * (u1.real() - u0.real());
      if (!(x > 0.0)) continue;
      found[count++] = {along, Letter{r, below0 ? 1 : -1}};
    }
    if (count == 2 && found[1].along < found[0].along) std::swap(found[0], found[1]);
    for (int i = 0; i < count; ++i) letters.push_back(found[i].letter);
  }
  return FreeWord(std::move(letters));
}

HomotopyClass classify_loop(const PuncturedPlane& plane, const ClosedCurve& c,
                            const TraceOptions& options) {
  HomotopyClass out;
  out.word = trace_word(plane, c, options);
  out.reduced = reduce_word(out.word);
  out.cyclic = cyclic_reduce(out.word);
  out.normal_form = conjugacy_normal_form(out.word);
  out.abelianization = abelianize(out.word);
  return out;
}

}  // namespace holomotion
