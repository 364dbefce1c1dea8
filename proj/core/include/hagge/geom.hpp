#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "hagge/error.hpp"
#include "hagge/scalar.hpp"

namespace hagge {

/// Plane point; doubles as a displacement vector.
template <Scalar T>
struct Point {
  T x{};
  T y{};

  friend bool operator==(const Point&, const Point&) = default;

  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(const Point& a) { return {-a.x, -a.y}; }
  friend Point operator*(const T& s, const Point& p) { return {s * p.x, s * p.y}; }
};

template <Scalar T>
double magnitude(const Point<T>& p) {
  return std::max(magnitude(p.x), magnitude(p.y));
}

template <Scalar T>
T dot(const Point<T>& a, const Point<T>& b) {
  return a.x * b.x + a.y * b.y;
}

template <Scalar T>
T cross(const Point<T>& a, const Point<T>& b) {
  return a.x * b.y - a.y * b.x;
}

/// Backend-aware point equality. `scale` widens the double tolerance
/// beyond the operands' own magnitude.
template <Scalar T>
bool coincide(const Point<T>& a, const Point<T>& b, double scale = 0.0) {
  const double s = std::max({scale, magnitude(a), magnitude(b)});
  return is_zero(T(a.x - b.x), s) && is_zero(T(a.y - b.y), s);
}

/// alpha*x + beta*y + gamma = 0.
template <Scalar T>
class Line {
 public:
  Line(T alpha, T beta, T gamma)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    if (alpha_ == T(0) && beta_ == T(0)) {
      throw GeometryError(ErrorCode::InvalidLine, "line with zero x and y coefficients");
    }
  }

  const T& alpha() const { return alpha_; }
  const T& beta() const { return beta_; }
  const T& gamma() const { return gamma_; }

  T evaluate(const Point<T>& p) const { return alpha_ * p.x + beta_ * p.y + gamma_; }

  /// Divides through by the first nonzero of (alpha, beta).
  Line normalized() const {
    const T& lead = alpha_ != T(0) ? alpha_ : beta_;
    return Line(alpha_ / lead, beta_ / lead, gamma_ / lead);
  }

  /// Coefficient-wise equality, which for lines is too strict; see equivalent().
  friend bool operator==(const Line&, const Line&) = default;

 private:
  T alpha_;
  T beta_;
  T gamma_;
};

/// True iff the two lines' coefficients are proportional.
template <Scalar T>
bool equivalent(const Line<T>& l1, const Line<T>& l2) {
  const Line<T> a = l1.normalized();
  const Line<T> b = l2.normalized();
  const double scale = std::max({1.0, magnitude(a.gamma()), magnitude(b.gamma()),
                                 magnitude(a.beta()), magnitude(b.beta()),
                                 magnitude(a.alpha()), magnitude(b.alpha())});
  return nearly_equal(a.alpha(), b.alpha(), scale) && nearly_equal(a.beta(), b.beta(), scale) &&
         nearly_equal(a.gamma(), b.gamma(), scale);
}

/// x^2 + y^2 + 2g*x + 2f*y + t = 0, centre (-g, -f).
template <Scalar T>
struct Circle {
  T g{};
  T f{};
  T t{};

  Point<T> center() const { return {-g, -f}; }
  T radius_sq() const { return g * g + f * f - t; }

  T evaluate(const Point<T>& p) const {
    return p.x * p.x + p.y * p.y + T(2) * g * p.x + T(2) * f * p.y + t;
  }

  friend bool operator==(const Circle&, const Circle&) = default;
};

template <Scalar T>
Circle<T> circle_from_center(const Point<T>& center, const T& radius_sq) {
  return {-center.x, -center.y, center.x * center.x + center.y * center.y - radius_sq};
}

/// Coefficient-wise comparison. The general form is already normalized
/// (unit x^2 coefficient), so this is circle identity.
template <Scalar T>
bool coincide(const Circle<T>& a, const Circle<T>& b, double scale = 0.0) {
  const double s = std::max({scale, magnitude(a.g), magnitude(a.f), magnitude(b.g),
                             magnitude(b.f), std::sqrt(magnitude(a.t)), std::sqrt(magnitude(b.t))});
  return nearly_equal(a.g, b.g, s) && nearly_equal(a.f, b.f, s) && nearly_equal(a.t, b.t, s * s);
}

/// Scale for the substitution residual of p into c: the largest term.
template <Scalar T>
double substitution_scale(const Circle<T>& c, const Point<T>& p) {
  return std::max({magnitude(T(p.x * p.x)), magnitude(T(p.y * p.y)),
                   magnitude(T(T(2) * c.g * p.x)), magnitude(T(T(2) * c.f * p.y)),
                   magnitude(c.t)});
}

template <Scalar T>
bool on_circle(const Circle<T>& c, const Point<T>& p) {
  return is_zero(c.evaluate(p), substitution_scale(c, p));
}

template <Scalar T>
Point<T> midpoint(const Point<T>& a, const Point<T>& b) {
  const T half = T(1) / T(2);
  return {half * (a.x + b.x), half * (a.y + b.y)};
}

template <Scalar T>
bool collinear(const Point<T>& p1, const Point<T>& p2, const Point<T>& p3) {
  const Point<T> u = p2 - p1;
  const Point<T> v = p3 - p1;
  const T lhs = u.x * v.y;
  const T rhs = u.y * v.x;
  return nearly_equal(lhs, rhs);
}

template <Scalar T>
Line<T> line_through(const Point<T>& p1, const Point<T>& p2) {
  if (coincide(p1, p2)) {
    throw GeometryError(ErrorCode::CoincidentPoints, "line_through: points coincide");
  }
  return Line<T>(p1.y - p2.y, p2.x - p1.x, p1.x * p2.y - p2.x * p1.y);
}

template <Scalar T>
bool on_line(const Line<T>& l, const Point<T>& p) {
  const double scale = std::max({magnitude(T(l.alpha() * p.x)), magnitude(T(l.beta() * p.y)),
                                 magnitude(l.gamma())});
  return is_zero(l.evaluate(p), scale);
}

template <Scalar T>
struct ChordEnd {
  Point<T> point;
  bool tangent = false;
};

/// Second point where the line through `a` and `d` meets `c`, given that
/// `a` lies on `c`. Parametrizing a + s(d - a), the nonzero root of the
/// quadratic is s = -(2 a.v + 2g vx + 2f vy) / |v|^2 (Vieta with root 0).
/// A tangent line yields `a` itself with the tangent flag set.
template <Scalar T>
ChordEnd<T> second_intersection(const Circle<T>& c, const Point<T>& a, const Point<T>& d) {
  if (coincide(a, d)) {
    throw GeometryError(ErrorCode::CoincidentPoints, "second_intersection: a and d coincide");
  }
  if (!on_circle(c, a)) {
    throw GeometryError(ErrorCode::PointNotOnCircle, "second_intersection: a is not on the circle");
  }
  const Point<T> v = d - a;
  const T linear = T(2) * (dot(a, v) + c.g * v.x + c.f * v.y);
  const T quadratic = dot(v, v);
  const double scale = std::sqrt(magnitude(quadratic)) *
                       std::max({magnitude(a), magnitude(c.g), magnitude(c.f)});
  if (is_zero(linear, scale)) return {a, true};
  const T s = -linear / quadratic;
  return {a + s * v, false};
}

/// Solves the 3x3 linear system for (g, f, t) with each point substituted
/// into the general circle equation.
template <Scalar T>
Circle<T> circle_through_3(const Point<T>& p1, const Point<T>& p2, const Point<T>& p3) {
  const Point<T> u = p2 - p1;
  const Point<T> v = p3 - p1;
  const T det = cross(u, v);
  const double det_scale = std::max(magnitude(T(u.x * v.y)), magnitude(T(u.y * v.x)));
  if (is_zero(det, det_scale)) {
    throw GeometryError(ErrorCode::CollinearPoints, "circle_through_3: points are collinear");
  }
  const T s1 = dot(p1, p1);
  const T du = dot(p2, p2) - s1;
  const T dv = dot(p3, p3) - s1;
  // 2g*u.x + 2f*u.y = -du, 2g*v.x + 2f*v.y = -dv
  const T two_g = (-du * v.y + dv * u.y) / det;
  const T two_f = (-u.x * dv + v.x * du) / det;
  const T half = T(1) / T(2);
  return {half * two_g, half * two_f, -s1 - two_g * p1.x - two_f * p1.y};
}

/// Fourth vertex of parallelogram a-q-e-x (diagonals ae and qx share a midpoint).
template <Scalar T>
Point<T> fourth_vertex(const Point<T>& a, const Point<T>& q, const Point<T>& e) {
  return a + e - q;
}

template <Scalar T>
Point<T> reflect_across_line(const Point<T>& p, const Line<T>& l) {
  const T k = T(2) * l.evaluate(p) / (l.alpha() * l.alpha() + l.beta() * l.beta());
  return {p.x - k * l.alpha(), p.y - k * l.beta()};
}

/// Image of `c` under the homothety with the given centre and factor.
/// Factor 0 collapses to a point circle at the centre.
template <Scalar T>
Circle<T> homothety(const Circle<T>& c, const Point<T>& center, const T& factor) {
  const Point<T> image_center = center + factor * (c.center() - center);
  return circle_from_center(image_center, T(factor * factor * c.radius_sq()));
}

}  // namespace hagge
