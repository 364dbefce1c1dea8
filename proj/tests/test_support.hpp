#pragma once

#include <cstdint>
#include <random>

#include "hagge/geom.hpp"

namespace hagge::testing {

/// Small hand-rolled generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(std::int64_t num = 50, std::int64_t den = 30) {
    return Rational(integer(-num, num), integer(1, den));
  }
  Point<Rational> point() { return {rational(), rational()}; }

  /// Rational point on the circle with the given centre and radius r,
  /// via the tangent half-angle map.
  Point<Rational> on_circle(const Point<Rational>& center, const Rational& r) {
    const Rational t = rational();
    const Rational w = Rational(1) + t * t;
    return {center.x + r * Rational(2) * t / w, center.y + r * (Rational(1) - t * t) / w};
  }

  double real(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
inline Point<Rational> pt(const Rational& x, const Rational& y) { return {x, y}; }

}  // namespace hagge::testing
