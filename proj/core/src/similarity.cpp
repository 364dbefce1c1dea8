#include "hagge/similarity.hpp"

#include <cmath>

namespace hagge {

Point<double> SimilarityTransform::apply(const Point<double>& p) const {
  return {scale * (cos * p.x - sin * p.y) + translation.x,
          scale * (sin * p.x + cos * p.y) + translation.y};
}

Point<double> SimilarityTransform::invert(const Point<double>& p) const {
  const double x = (p.x - translation.x) / scale;
  const double y = (p.y - translation.y) / scale;
  return {cos * x + sin * y, -sin * x + cos * y};
}

Circle<double> SimilarityTransform::invert(const Circle<double>& c) const {
  return circle_from_center(invert(c.center()), c.radius_sq() / (scale * scale));
}

bool SimilarityTransform::is_identity(double tolerance) const {
  return std::abs(translation.x) <= tolerance && std::abs(translation.y) <= tolerance &&
         std::abs(cos - 1.0) <= tolerance && std::abs(sin) <= tolerance &&
         std::abs(scale - 1.0) <= tolerance;
}

NormalizedScene normalize(const std::array<Point<double>, 3>& vertices, const Point<double>& p,
                          const Point<double>& d) {
  // Validates the triangle and D before anything is divided.
  const Scene<double> original = Scene<double>::from_vertices(vertices, p, d);
  const Point<double> o = original.circumcenter();
  const double radius = std::sqrt(original.circumcircle().radius_sq());

  SimilarityTransform tf;
  tf.scale = 1.0 / radius;
  const Point<double> v = p - o;
  const double distance = std::hypot(v.x, v.y);
  if (distance > ScalarTraits<double>::relative_tolerance * radius) {
    // Rotates v onto (-|v|, 0).
    tf.cos = -v.x / distance;
    tf.sin = v.y / distance;
  }
  tf.translation = {0.0, 0.0};
  const Point<double> shifted = tf.apply(o);
  tf.translation = -shifted;

  const double k = distance / radius;
  const Point<double> canonical_d = tf.apply(d);
  std::array<Point<double>, 3> canonical_vertices{};
  std::array<double, 3> params{};
  bool finite = true;
  for (std::size_t i = 0; i < 3; ++i) {
    canonical_vertices[i] = tf.apply(vertices[i]);
    const double w = 1.0 + canonical_vertices[i].y;
    if (std::abs(w) <= 1e-12) {
      finite = false;
    } else {
      params[i] = canonical_vertices[i].x / w;
    }
  }
  if (finite) {
    return {Scene<double>::canonical({params[0], params[1], params[2]}, k, canonical_d), tf};
  }
  return {Scene<double>::from_vertices(canonical_vertices, {-k, 0.0}, canonical_d), tf};
}

ConstructionOutput<double> construct_in_canonical_frame(const Scene<double>& scene) {
  const NormalizedScene normalized = normalize(scene.vertices(), scene.p(), scene.d());
  const SimilarityTransform& tf = normalized.transform;
  ConstructionOutput<double> out = construct(normalized.scene, ConstructionPath::closed_form);

  auto back = [&](Point<double>& p) { p = tf.invert(p); };
  for (auto* group : {&out.vertices, &out.chord_ends, &out.special_points, &out.diagonal_midpoints}) {
    for (auto& p : *group) back(p);
  }
  for (auto* p : {&out.o, &out.p, &out.q, &out.d, &out.k}) back(*p);
  if (out.special_circle) out.special_circle = tf.invert(*out.special_circle);
  if (out.midpoint_circle) out.midpoint_circle = tf.invert(*out.midpoint_circle);
  return out;
}

Scene<double> to_double_scene(const Scene<Rational>& scene) {
  auto conv = [](const Point<Rational>& p) { return Point<double>{p.x.to_double(), p.y.to_double()}; };
  if (scene.params()) {
    const auto& tp = *scene.params();
    if (scene.frame() == Frame::canonical) {
      return Scene<double>::canonical({tp.a.to_double(), tp.b.to_double(), tp.c.to_double()},
                                      scene.k().to_double(), conv(scene.d()));
    }
  }
  const auto& v = scene.vertices();
  return Scene<double>::from_vertices({conv(v[0]), conv(v[1]), conv(v[2])}, conv(scene.p()),
                                      conv(scene.d()));
}

}  // namespace hagge
