#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "hagge/geom.hpp"
#include "hagge/scene.hpp"

namespace hagge {

enum class ConstructionPath { closed_form, geometric };

std::string_view path_name(ConstructionPath path) noexcept;

/// Everything derived from a scene. Per-vertex arrays are ordered A, B, C.
template <Scalar T>
struct ConstructionOutput {
  ConstructionPath path = ConstructionPath::geometric;

  std::array<Point<T>, 3> vertices{};
  Point<T> o{};
  Point<T> p{};
  Point<T> q{};
  Point<T> d{};
  Point<T> k{};

  /// E, F, G: second intersections of AD, BD, CD with the circumcircle.
  std::array<Point<T>, 3> chord_ends{};
  /// U, V, W: fourth vertices of the parallelograms A Q E U, B Q F V, C Q G W.
  std::array<Point<T>, 3> special_points{};
  /// U', V', W': where each parallelogram's diagonals cross.
  std::array<Point<T>, 3> diagonal_midpoints{};

  /// Absent when the output is degenerate.
  std::optional<Circle<T>> special_circle;
  std::optional<Circle<T>> midpoint_circle;

  /// Chord through D touches the circumcircle at the vertex (E = A).
  std::array<bool, 3> tangent{};
  /// D = O: U = V = W = P and no circle exists.
  bool degenerate = false;
  /// P lies on a sideline of the triangle; computed anyway.
  bool p_on_sideline = false;
};

/// Runs the construction along either path. The closed-form path needs a
/// canonical scene with finite vertex parameters; the geometric path uses
/// only chord intersection, parallelogram completion and midpoints, and
/// works in any frame.
template <Scalar T>
ConstructionOutput<T> construct(const Scene<T>& scene, ConstructionPath path);

/// Image of the midpoint circle under the homothety about Q with `factor`.
/// Factor 2 gives the special circle; the image always passes through
/// Q + factor (O - Q) on line QOP.
template <Scalar T>
Circle<T> homothety_circle(const ConstructionOutput<T>& output, const T& factor);

template <Scalar T>
struct HaggeCircle {
  Circle<T> circle;
  std::array<Point<T>, 3> chord_ends{};
  std::array<Point<T>, 3> reflections{};
  Point<T> orthocenter{};
};

/// E, F, G reflected in BC, CA, AB respectively.
template <Scalar T>
std::array<Point<T>, 3> hagge_reflections(const std::array<Point<T>, 3>& vertices,
                                          const Point<T>& d);

/// Classic Hagge circle through the three reflections; it contains the
/// orthocentre H = A + B + C - 2O.
template <Scalar T>
HaggeCircle<T> classic_hagge(const std::array<Point<T>, 3>& vertices, const Point<T>& d);

template <Scalar T>
Point<T> orthocenter(const std::array<Point<T>, 3>& vertices);

extern template ConstructionOutput<Rational> construct(const Scene<Rational>&, ConstructionPath);
extern template ConstructionOutput<double> construct(const Scene<double>&, ConstructionPath);
extern template Circle<Rational> homothety_circle(const ConstructionOutput<Rational>&, const Rational&);
extern template Circle<double> homothety_circle(const ConstructionOutput<double>&, const double&);
extern template std::array<Point<Rational>, 3> hagge_reflections(const std::array<Point<Rational>, 3>&,
                                                                 const Point<Rational>&);
extern template std::array<Point<double>, 3> hagge_reflections(const std::array<Point<double>, 3>&,
                                                               const Point<double>&);
extern template HaggeCircle<Rational> classic_hagge(const std::array<Point<Rational>, 3>&,
                                                    const Point<Rational>&);
extern template HaggeCircle<double> classic_hagge(const std::array<Point<double>, 3>&,
                                                  const Point<double>&);
extern template Point<Rational> orthocenter(const std::array<Point<Rational>, 3>&);
extern template Point<double> orthocenter(const std::array<Point<double>, 3>&);

}  // namespace hagge
