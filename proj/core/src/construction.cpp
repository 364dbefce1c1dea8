#include "hagge/construction.hpp"

#include <algorithm>
#include <cmath>

namespace hagge {

namespace {

template <Scalar T>
void require_distinct_params(const TriangleParams<T>& params) {
  if (nearly_equal(params.a, params.b) || nearly_equal(params.b, params.c) ||
      nearly_equal(params.a, params.c)) {
    throw GeometryError(ErrorCode::DegenerateTriangle, "triangle parameters are not pairwise distinct");
  }
}

template <Scalar T>
bool is_unit_circle(const Circle<T>& c) {
  return coincide(c, Circle<T>{T(0), T(0), T(-1)}, 1.0);
}

template <Scalar T>
std::array<Line<T>, 3> opposite_sides(const std::array<Point<T>, 3>& v) {
  return {line_through(v[1], v[2]), line_through(v[2], v[0]), line_through(v[0], v[1])};
}

}  // namespace

// Scene --------------------------------------------------------------------

template <Scalar T>
Scene<T> Scene<T>::canonical(const TriangleParams<T>& params, const T& k, const Point<T>& d) {
  require_distinct_params(params);
  Scene scene;
  scene.vertices_ = params.vertices();
  scene.params_ = params;
  scene.p_ = {-k, T(0)};
  scene.d_ = d;
  scene.frame_ = Frame::canonical;
  scene.circumcircle_ = {T(0), T(0), T(-1)};
  scene.finish();
  return scene;
}

template <Scalar T>
Scene<T> Scene<T>::canonical_with_center(const TriangleParams<T>& params, const T& k,
                                         const Point<T>& center) {
  // O is the origin, so D = K - P.
  return canonical(params, k, center - Point<T>{-k, T(0)});
}

template <Scalar T>
Scene<T> Scene<T>::from_vertices(const std::array<Point<T>, 3>& vertices, const Point<T>& p,
                                 const Point<T>& d) {
  Scene scene;
  scene.vertices_ = vertices;
  scene.p_ = p;
  scene.d_ = d;
  try {
    scene.circumcircle_ = circle_through_3(vertices[0], vertices[1], vertices[2]);
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::CollinearPoints) throw;
    throw GeometryError(ErrorCode::DegenerateTriangle, "triangle vertices are collinear");
  }
  scene.finish();
  return scene;
}

template <Scalar T>
Scene<T> Scene<T>::from_vertices_with_center(const std::array<Point<T>, 3>& vertices,
                                             const Point<T>& p, const Point<T>& center) {
  Scene probe = from_vertices(vertices, p, p);
  return from_vertices(vertices, p, center - p + probe.circumcenter());
}

template <Scalar T>
void Scene<T>::finish() {
  for (const auto& v : vertices_) {
    if (coincide(v, d_, scale())) {
      throw GeometryError(ErrorCode::DIsVertex, "generator D coincides with a vertex");
    }
  }
  if (params_) return;

  frame_ = Frame::arbitrary;
  if (is_unit_circle(circumcircle_) && is_zero(p_.y, std::max(1.0, magnitude(p_.x)))) {
    frame_ = Frame::canonical;
    std::array<T, 3> recovered{};
    for (std::size_t i = 0; i < 3; ++i) {
      const T w = T(1) + vertices_[i].y;
      if (is_zero(w, 1.0)) return;  // vertex at (0, -1): no finite parameter
      recovered[i] = vertices_[i].x / w;
    }
    params_ = TriangleParams<T>{recovered[0], recovered[1], recovered[2]};
  }
}

template <Scalar T>
Scene<T> Scene<T>::with_target(const Point<T>& p) const {
  Scene scene = *this;
  scene.p_ = p;
  if (scene.frame_ == Frame::canonical && !is_zero(p.y, std::max(1.0, magnitude(p.x)))) {
    scene.frame_ = Frame::arbitrary;
    scene.params_.reset();
  }
  return scene;
}

template <Scalar T>
double Scene<T>::scale() const {
  double s = std::max({magnitude(p_), magnitude(d_), magnitude(circumcircle_.center()),
                       std::sqrt(magnitude(circumcircle_.radius_sq()))});
  for (const auto& v : vertices_) s = std::max(s, magnitude(v));
  return s;
}

template class Scene<Rational>;
template class Scene<double>;

// Construction ---------------------------------------------------------------

std::string_view path_name(ConstructionPath path) noexcept {
  return path == ConstructionPath::closed_form ? "closed-form" : "geometric";
}

namespace {

template <Scalar T>
void fill_circles(ConstructionOutput<T>& out) {
  try {
    out.special_circle =
        circle_through_3(out.special_points[0], out.special_points[1], out.special_points[2]);
    out.midpoint_circle = circle_through_3(out.diagonal_midpoints[0], out.diagonal_midpoints[1],
                                           out.diagonal_midpoints[2]);
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::CollinearPoints) throw;
    out.special_circle.reset();
    out.midpoint_circle.reset();
    out.degenerate = true;
  }
}

template <Scalar T>
ConstructionOutput<T> construct_geometric(const Scene<T>& scene) {
  ConstructionOutput<T> out;
  out.path = ConstructionPath::geometric;
  out.vertices = scene.vertices();
  out.o = scene.circumcenter();
  out.p = scene.p();
  out.q = scene.q();
  out.d = scene.d();
  out.k = scene.center_k();

  for (std::size_t i = 0; i < 3; ++i) {
    const Point<T>& vertex = out.vertices[i];
    const ChordEnd<T> end = second_intersection(scene.circumcircle(), vertex, out.d);
    out.chord_ends[i] = end.point;
    out.tangent[i] = end.tangent;
    out.special_points[i] = fourth_vertex(vertex, out.q, end.point);
    out.diagonal_midpoints[i] = midpoint(vertex, end.point);
  }

  if (scene.generator_at_circumcenter()) {
    out.degenerate = true;
  } else {
    fill_circles(out);
  }
  return out;
}

template <Scalar T>
ConstructionOutput<T> construct_closed_form(const Scene<T>& scene) {
  if (scene.frame() != Frame::canonical) {
    throw GeometryError(ErrorCode::NonCanonicalForClosedForm,
                        "closed-form path requires the canonical frame");
  }
  if (!scene.params()) {
    throw GeometryError(ErrorCode::NonCanonicalForClosedForm,
                        "closed-form path cannot represent a vertex at (0, -1)");
  }
  const T k = scene.k();
  const auto params = scene.params()->as_array();

  ConstructionOutput<T> out;
  out.path = ConstructionPath::closed_form;
  out.o = {T(0), T(0)};
  out.p = {-k, T(0)};
  out.q = {k, T(0)};
  out.d = scene.d();
  out.k = {out.d.x - k, out.d.y};

  for (std::size_t i = 0; i < 3; ++i) {
    out.vertices[i] = vertex_from_param(params[i]);
    out.chord_ends[i] = chord_end(params[i], out.d);
    out.special_points[i] = special_point(params[i], out.d, k);
    out.diagonal_midpoints[i] = diagonal_midpoint(params[i], out.d);
    out.tangent[i] = coincide(out.chord_ends[i], out.vertices[i]);
  }

  if (scene.generator_at_circumcenter()) {
    out.degenerate = true;
  } else {
    out.special_circle = special_circle(out.d, k);
    out.midpoint_circle = midpoint_circle(out.d);
  }
  return out;
}

}  // namespace

template <Scalar T>
ConstructionOutput<T> construct(const Scene<T>& scene, ConstructionPath path) {
  ConstructionOutput<T> out = path == ConstructionPath::closed_form ? construct_closed_form(scene)
                                                                    : construct_geometric(scene);
  const auto& v = out.vertices;
  out.p_on_sideline = collinear(out.p, v[1], v[2]) || collinear(out.p, v[2], v[0]) ||
                      collinear(out.p, v[0], v[1]);
  return out;
}

template <Scalar T>
Circle<T> homothety_circle(const ConstructionOutput<T>& output, const T& factor) {
  if (output.degenerate || !output.midpoint_circle) {
    throw GeometryError(ErrorCode::DegenerateInput, "homothety of a degenerate construction");
  }
  return homothety(*output.midpoint_circle, output.q, factor);
}

template <Scalar T>
Point<T> orthocenter(const std::array<Point<T>, 3>& vertices) {
  const Circle<T> circ = circle_through_3(vertices[0], vertices[1], vertices[2]);
  return vertices[0] + vertices[1] + vertices[2] - T(2) * circ.center();
}

template <Scalar T>
std::array<Point<T>, 3> hagge_reflections(const std::array<Point<T>, 3>& vertices,
                                          const Point<T>& d) {
  const Scene<T> scene = Scene<T>::from_vertices(vertices, d, d);
  const auto sides = opposite_sides(vertices);
  std::array<Point<T>, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const Point<T> end = second_intersection(scene.circumcircle(), vertices[i], d).point;
    out[i] = reflect_across_line(end, sides[i]);
  }
  return out;
}

template <Scalar T>
HaggeCircle<T> classic_hagge(const std::array<Point<T>, 3>& vertices, const Point<T>& d) {
  const Scene<T> scene = Scene<T>::from_vertices(vertices, d, d);
  const auto sides = opposite_sides(vertices);
  HaggeCircle<T> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.chord_ends[i] = second_intersection(scene.circumcircle(), vertices[i], d).point;
    out.reflections[i] = reflect_across_line(out.chord_ends[i], sides[i]);
  }
  try {
    out.circle = circle_through_3(out.reflections[0], out.reflections[1], out.reflections[2]);
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::CollinearPoints) throw;
    throw GeometryError(ErrorCode::CollinearReflections,
                        "reflected chord ends are collinear or coincide; no Hagge circle");
  }
  out.orthocenter = vertices[0] + vertices[1] + vertices[2] - T(2) * scene.circumcenter();
  return out;
}

template ConstructionOutput<Rational> construct(const Scene<Rational>&, ConstructionPath);
template ConstructionOutput<double> construct(const Scene<double>&, ConstructionPath);
template Circle<Rational> homothety_circle(const ConstructionOutput<Rational>&, const Rational&);
template Circle<double> homothety_circle(const ConstructionOutput<double>&, const double&);
template std::array<Point<Rational>, 3> hagge_reflections(const std::array<Point<Rational>, 3>&,
                                                          const Point<Rational>&);
template std::array<Point<double>, 3> hagge_reflections(const std::array<Point<double>, 3>&,
                                                        const Point<double>&);
template HaggeCircle<Rational> classic_hagge(const std::array<Point<Rational>, 3>&,
                                             const Point<Rational>&);
template HaggeCircle<double> classic_hagge(const std::array<Point<double>, 3>&,
                                           const Point<double>&);
template Point<Rational> orthocenter(const std::array<Point<Rational>, 3>&);
template Point<double> orthocenter(const std::array<Point<double>, 3>&);

}  // namespace hagge
