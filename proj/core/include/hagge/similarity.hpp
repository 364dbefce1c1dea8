#pragma once

#include <array>

#include "hagge/construction.hpp"
#include "hagge/geom.hpp"
#include "hagge/scene.hpp"

namespace hagge {

/// p -> scale * R(theta) p + translation, with R stored as (cos, sin).
struct SimilarityTransform {
  Point<double> translation{0.0, 0.0};
  double cos = 1.0;
  double sin = 0.0;
  double scale = 1.0;

  Point<double> apply(const Point<double>& p) const;
  Point<double> invert(const Point<double>& p) const;
  Circle<double> invert(const Circle<double>& c) const;

  bool is_identity(double tolerance = 1e-12) const;
};

struct NormalizedScene {
  Scene<double> scene;
  SimilarityTransform transform;
};

/// Maps the circumcentre to the origin, the circumradius to 1 and P onto
/// the nonpositive x-axis. The result is a canonical scene whenever no
/// vertex lands on (0, -1).
NormalizedScene normalize(const std::array<Point<double>, 3>& vertices, const Point<double>& p,
                          const Point<double>& d);

/// Closed-form construction of an arbitrary-frame scene: normalize, evaluate
/// the closed forms, map every result back.
ConstructionOutput<double> construct_in_canonical_frame(const Scene<double>& scene);

/// Exact scenes converted point-by-point to doubles.
Scene<double> to_double_scene(const Scene<Rational>& scene);

}  // namespace hagge
