#pragma once

// Test-only reference computations. They deliberately avoid the library's
// formulas: circle centres from perpendicular bisectors, chord ends from the
// foot of the perpendicular, reflections from projections.

#include "hagge/geom.hpp"

namespace hagge::oracle {

using R = Rational;
using P = Point<R>;

/// Centre equidistant from three points: solve (p2-p1).X = (|p2|^2-|p1|^2)/2
/// and (p3-p1).X = (|p3|^2-|p1|^2)/2.
inline P circumcenter(const P& p1, const P& p2, const P& p3) {
  const P u = p2 - p1;
  const P v = p3 - p1;
  const R bu = (dot(p2, p2) - dot(p1, p1)) / R(2);
  const R bv = (dot(p3, p3) - dot(p1, p1)) / R(2);
  const R det = u.x * v.y - u.y * v.x;
  return {(bu * v.y - bv * u.y) / det, (u.x * bv - v.x * bu) / det};
}

inline R squared_distance(const P& a, const P& b) { return dot(P(a - b), P(a - b)); }

/// Orthogonal projection of p onto the line through a and b.
inline P project(const P& p, const P& a, const P& b) {
  const P ab = b - a;
  const R s = dot(P(p - a), ab) / dot(ab, ab);
  return a + s * ab;
}

/// The chord through a on the circle with the given centre: the foot M of
/// the perpendicular from the centre bisects it, so the far end is 2M - a.
inline P chord_far_end(const P& center, const P& a, const P& through) {
  const P m = project(center, a, through);
  return R(2) * m - a;
}

inline P reflect(const P& p, const P& a, const P& b) { return R(2) * project(p, a, b) - p; }

}  // namespace hagge::oracle
