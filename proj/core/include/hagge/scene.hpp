#pragma once

#include <array>
#include <optional>

#include "hagge/closed_form.hpp"
#include "hagge/geom.hpp"

namespace hagge {

/// Tangent half-angle parameters of the three vertices on the unit circle.
template <Scalar T>
struct TriangleParams {
  T a;
  T b;
  T c;

  std::array<T, 3> as_array() const { return {a, b, c}; }
  std::array<Point<T>, 3> vertices() const {
    return {vertex_from_param(a), vertex_from_param(b), vertex_from_param(c)};
  }
};

enum class Frame { canonical, arbitrary };

/// Triangle, target point P and generator D.
///
/// The desired centre K and D determine each other through the
/// parallelogram O P K D: K = P + D - O. Q is never stored; it is always
/// derived as 2O - P.
template <Scalar T>
class Scene {
 public:
  /// Canonical frame: unit circumcircle at the origin, P = (-k, 0).
  static Scene canonical(const TriangleParams<T>& params, const T& k, const Point<T>& d);
  static Scene canonical_with_center(const TriangleParams<T>& params, const T& k,
                                     const Point<T>& center);

  /// Explicit vertices anywhere in the plane. The frame is tagged canonical
  /// when the circumcircle is the unit circle at the origin and P lies on
  /// the x-axis; parameters are then recovered unless a vertex is (0, -1).
  static Scene from_vertices(const std::array<Point<T>, 3>& vertices, const Point<T>& p,
                             const Point<T>& d);
  static Scene from_vertices_with_center(const std::array<Point<T>, 3>& vertices,
                                         const Point<T>& p, const Point<T>& center);

  const std::array<Point<T>, 3>& vertices() const { return vertices_; }
  const std::optional<TriangleParams<T>>& params() const { return params_; }
  const Point<T>& p() const { return p_; }
  const Point<T>& d() const { return d_; }
  Frame frame() const { return frame_; }

  const Circle<T>& circumcircle() const { return circumcircle_; }
  Point<T> circumcenter() const { return circumcircle_.center(); }
  Point<T> q() const { return T(2) * circumcenter() - p_; }
  Point<T> center_k() const { return p_ + d_ - circumcenter(); }

  /// Canonical-frame k, where P = (-k, 0).
  T k() const { return -p_.x; }

  bool generator_at_circumcenter() const { return coincide(d_, circumcenter(), scale()); }

  /// Same triangle and D with a different target point.
  Scene with_target(const Point<T>& p) const;

  /// Largest coordinate magnitude among the scene's defining points.
  double scale() const;

 private:
  Scene() = default;
  void finish();

  std::array<Point<T>, 3> vertices_{};
  std::optional<TriangleParams<T>> params_;
  Point<T> p_{};
  Point<T> d_{};
  Frame frame_ = Frame::arbitrary;
  Circle<T> circumcircle_{};
};

extern template class Scene<Rational>;
extern template class Scene<double>;

}  // namespace hagge
