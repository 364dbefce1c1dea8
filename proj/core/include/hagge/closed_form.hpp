#pragma once

// Closed-form coordinates in the canonical frame: circumcircle x^2 + y^2 = 1,
// P = (-k, 0), Q = (k, 0), generator D = (m, n), and each vertex given by its
// tangent half-angle parameter.

#include "hagge/geom.hpp"

namespace hagge {

/// (2a/(1+a^2), (1-a^2)/(1+a^2)); never reaches (0, -1).
template <Scalar T>
Point<T> vertex_from_param(const T& a) {
  const T a2 = a * a;
  const T w = T(1) + a2;
  return {T(2) * a / w, (T(1) - a2) / w};
}

namespace detail {

template <Scalar T>
void require_not_vertex(const T& a, const Point<T>& d) {
  if (coincide(vertex_from_param(a), d)) {
    throw GeometryError(ErrorCode::DIsVertex, "generator D coincides with a vertex");
  }
}

/// (m^2 + (n+1)^2) a^2 - 4ma + m^2 + (1-n)^2, i.e. (1+a^2) |A - D|^2.
template <Scalar T>
T chord_denominator(const T& a, const Point<T>& d) {
  const T& m = d.x;
  const T& n = d.y;
  return (m * m + (n + T(1)) * (n + T(1))) * a * a - T(4) * m * a + m * m +
         (T(1) - n) * (T(1) - n);
}

}  // namespace detail

/// Line through the vertex with parameter `a` and D, with the
/// coefficients (n+1)a^2 + (n-1), -((1+a^2)m - 2a), (1-a^2)m - 2an.
template <Scalar T>
Line<T> chord_line(const T& a, const Point<T>& d) {
  detail::require_not_vertex(a, d);
  const T& m = d.x;
  const T& n = d.y;
  const T a2 = a * a;
  return Line<T>((n + T(1)) * a2 + (n - T(1)), -((T(1) + a2) * m - T(2) * a),
                 (T(1) - a2) * m - T(2) * a * n);
}

/// Second intersection E of the chord from the vertex through D with the
/// unit circumcircle. Equals the vertex itself when the chord is tangent.
template <Scalar T>
Point<T> chord_end(const T& a, const Point<T>& d) {
  detail::require_not_vertex(a, d);
  const T& m = d.x;
  const T& n = d.y;
  const T a2 = a * a;
  const T den = detail::chord_denominator(a, d);
  const T x = T(2) * (m * (n + T(1)) * a2 - (T(1) + m * m - n * n) * a + m * (T(1) - n)) / den;
  const T y = (((n + T(1)) * (n + T(1)) - m * m) * a2 - T(4) * m * n * a + m * m -
               (T(1) - n) * (T(1) - n)) /
              den;
  return {x, y};
}

/// Fourth vertex U of the parallelogram A Q E U, with Q = (k, 0), written
/// as quartics in the parameter over s = (1 + a^2) * chord_denominator.
template <Scalar T>
Point<T> special_point(const T& a, const Point<T>& d, const T& k) {
  detail::require_not_vertex(a, d);
  const T& m = d.x;
  const T& n = d.y;
  const T a2 = a * a;
  const T a3 = a2 * a;
  const T a4 = a2 * a2;
  const T m2 = m * m;
  const T n2 = n * n;
  const T s = (T(1) + a2) * detail::chord_denominator(a, d);

  const T x = -(k * (m2 + (n + T(1)) * (n + T(1))) - T(2) * m * (n + T(1))) * a4 +
              T(4) * (k * m + n * (n + T(1))) * a3 -
              T(2) * (k * (m2 + n2 + T(1)) + T(2) * m) * a2 +
              T(4) * (k * m + n * (n - T(1))) * a - k * (m2 + n2 - T(2) * n + T(1)) -
              T(2) * m * (n - T(1));
  const T y = T(-2) * (m2 * a4 + T(2) * m * (n - T(1)) * a3 - T(4) * n * a2 +
                       T(2) * m * (n + T(1)) * a - m2);
  return {x / s, y / s};
}

/// Intersection U' of the diagonals of A Q E U: the midpoint of AE, so it
/// does not depend on k.
template <Scalar T>
Point<T> diagonal_midpoint(const T& a, const Point<T>& d) {
  detail::require_not_vertex(a, d);
  const T& m = d.x;
  const T& n = d.y;
  const T a2 = a * a;
  const T s = (T(1) + a2) * detail::chord_denominator(a, d);
  const T common = T(2) * a * n - m * (T(1) - a2);
  const T x = (n * (T(1) + a2) - (T(1) - a2)) * common;
  const T y = (T(2) * a - m * (T(1) + a2)) * common;
  return {x / s, y / s};
}

/// Circle through U, V, W and P: x^2 + y^2 + 2(k-m)x - 2ny + k(k-2m) = 0,
/// centre (m-k, n), squared radius m^2 + n^2.
template <Scalar T>
Circle<T> special_circle(const Point<T>& d, const T& k) {
  if (d.x == T(0) && d.y == T(0)) {
    throw GeometryError(ErrorCode::DegeneratePointCircle, "special circle has zero radius (D = O)");
  }
  return {k - d.x, -d.y, k * (k - T(2) * d.x)};
}

/// The special circle with the y-coefficient -2mn in place of -2n. Kept only
/// to demonstrate that this form disagrees with the oracle.
template <Scalar T>
Circle<T> printed_special_circle(const Point<T>& d, const T& k) {
  if (d.x == T(0) && d.y == T(0)) {
    throw GeometryError(ErrorCode::DegeneratePointCircle, "special circle has zero radius (D = O)");
  }
  return {k - d.x, -(d.x * d.y), k * (k - T(2) * d.x)};
}

/// Circle through U', V', W' on diameter OD: x^2 + y^2 - mx - ny = 0.
template <Scalar T>
Circle<T> midpoint_circle(const Point<T>& d) {
  if (d.x == T(0) && d.y == T(0)) {
    throw GeometryError(ErrorCode::DegeneratePointCircle, "midpoint circle has zero radius (D = O)");
  }
  const T half = T(1) / T(2);
  return {-half * d.x, -half * d.y, T(0)};
}

}  // namespace hagge
