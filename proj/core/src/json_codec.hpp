#pragma once

#include <json.hpp>

#include "hagge/geom.hpp"
#include "hagge/scene.hpp"

namespace hagge::codec {

using json = nlohmann::ordered_json;

inline json scalar(const Rational& v) { return v.str(); }
inline json scalar(double v) { return v; }

template <Scalar T>
json point(const Point<T>& p) {
  return json::array({scalar(p.x), scalar(p.y)});
}

template <Scalar T>
json circle(const Circle<T>& c) {
  return json{{"g", scalar(c.g)},
              {"f", scalar(c.f)},
              {"t", scalar(c.t)},
              {"center", point(c.center())},
              {"radiusSq", scalar(T(c.radius_sq()))}};
}

template <Scalar T>
json scene(const Scene<T>& s) {
  json out;
  out["backend"] = ScalarTraits<T>::name;
  if (s.params() && s.frame() == Frame::canonical) {
    const auto& tp = *s.params();
    out["triangle"] = {{"params", json::array({scalar(tp.a), scalar(tp.b), scalar(tp.c)})}};
    out["P"] = {{"k", scalar(s.k())}};
  } else {
    json vertices = json::array();
    for (const auto& v : s.vertices()) vertices.push_back(point(v));
    out["triangle"] = {{"vertices", vertices}};
    out["P"] = point(s.p());
  }
  out["D"] = point(s.d());
  return out;
}

/// 64-bit FNV-1a, hex encoded.
std::string digest(std::string_view bytes);

}  // namespace hagge::codec
