#include "hagge/scene_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "json_codec.hpp"

namespace hagge {

namespace codec {

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace codec

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(ErrorCode code, const std::string& message) {
  throw GeometryError(code, message);
}

template <Scalar T>
T read_scalar(const json& node, std::string_view where);

template <>
Rational read_scalar<Rational>(const json& node, std::string_view where) {
  if (node.is_string()) return Rational::parse(node.get<std::string>());
  if (node.is_number_integer()) {
    if (node.is_number_unsigned()) return Rational(node.get<std::uint64_t>());
    return Rational(node.get<std::int64_t>());
  }
  if (node.is_number_float()) {
    fail(ErrorCode::InexactInput, std::string(where) +
                                      ": the exact backend takes integers or strings such as \"1/3\"");
  }
  fail(ErrorCode::InvalidScene, std::string(where) + ": expected a number");
}

template <>
double read_scalar<double>(const json& node, std::string_view where) {
  if (node.is_number()) return node.get<double>();
  if (node.is_string()) return Rational::parse(node.get<std::string>()).to_double();
  fail(ErrorCode::InvalidScene, std::string(where) + ": expected a number");
}

template <Scalar T>
Point<T> read_point(const json& node, std::string_view where) {
  if (!node.is_array() || node.size() != 2) {
    fail(ErrorCode::InvalidScene, std::string(where) + ": expected [x, y]");
  }
  return {read_scalar<T>(node[0], where), read_scalar<T>(node[1], where)};
}

template <Scalar T>
Scene<T> read_scene(const json& doc) {
  if (!doc.contains("triangle")) fail(ErrorCode::SceneUnderspecified, "missing \"triangle\"");
  const json& triangle = doc["triangle"];
  if (!triangle.is_object()) fail(ErrorCode::InvalidScene, "\"triangle\" must be an object");
  const bool has_params = triangle.contains("params");
  const bool has_vertices = triangle.contains("vertices");
  if (has_params && has_vertices) {
    fail(ErrorCode::SceneOverspecified, "\"triangle\" has both \"params\" and \"vertices\"");
  }
  if (!has_params && !has_vertices) {
    fail(ErrorCode::SceneUnderspecified, "\"triangle\" needs \"params\" or \"vertices\"");
  }

  std::optional<TriangleParams<T>> params;
  std::array<Point<T>, 3> vertices{};
  if (has_params) {
    const json& p = triangle["params"];
    if (!p.is_array() || p.size() != 3) fail(ErrorCode::InvalidScene, "\"params\" must hold three numbers");
    params = TriangleParams<T>{read_scalar<T>(p[0], "params"), read_scalar<T>(p[1], "params"),
                               read_scalar<T>(p[2], "params")};
    vertices = params->vertices();
  } else {
    const json& v = triangle["vertices"];
    if (!v.is_array() || v.size() != 3) fail(ErrorCode::InvalidScene, "\"vertices\" must hold three points");
    for (std::size_t i = 0; i < 3; ++i) vertices[i] = read_point<T>(v[i], "vertices");
  }

  if (!doc.contains("P")) fail(ErrorCode::SceneUnderspecified, "missing \"P\"");
  const json& p_node = doc["P"];
  Point<T> p;
  if (p_node.is_object()) {
    if (!p_node.contains("k")) fail(ErrorCode::InvalidScene, "\"P\" object must contain \"k\"");
    p = {-read_scalar<T>(p_node["k"], "P.k"), T(0)};
  } else {
    p = read_point<T>(p_node, "P");
  }

  std::optional<Point<T>> d;
  std::optional<Point<T>> center;
  if (doc.contains("D")) {
    const json& d_node = doc["D"];
    if (d_node.is_object()) {
      if (!d_node.contains("K")) fail(ErrorCode::InvalidScene, "\"D\" object must contain \"K\"");
      center = read_point<T>(d_node["K"], "K");
    } else {
      d = read_point<T>(d_node, "D");
    }
  }
  if (doc.contains("K")) {
    if (d || center) fail(ErrorCode::SceneOverspecified, "give exactly one of \"D\" and \"K\"");
    center = read_point<T>(doc["K"], "K");
  }
  if (!d && !center) fail(ErrorCode::SceneUnderspecified, "one of \"D\" or \"K\" is required");

  const bool canonical_p = p.y == T(0);
  if (params && canonical_p) {
    const T k = -p.x;
    return d ? Scene<T>::canonical(*params, k, *d) : Scene<T>::canonical_with_center(*params, k, *center);
  }
  return d ? Scene<T>::from_vertices(vertices, p, *d)
           : Scene<T>::from_vertices_with_center(vertices, p, *center);
}

template <Scalar T>
json flags(const ConstructionOutput<T>& out) {
  return {{"degenerate", out.degenerate},
          {"tangent", json::array({out.tangent[0], out.tangent[1], out.tangent[2]})},
          {"pOnSideline", out.p_on_sideline}};
}

}  // namespace

AnyScene parse_scene_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::MalformedJson, e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::MalformedJson, "scene document must be a JSON object");

  std::string backend = "exact";
  if (doc.contains("backend")) {
    if (!doc["backend"].is_string()) fail(ErrorCode::InvalidScene, "\"backend\" must be a string");
    backend = doc["backend"].get<std::string>();
  }
  try {
    if (backend == "exact") return read_scene<Rational>(doc);
    if (backend == "double") return read_scene<double>(doc);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidScene, e.what());
  }
  fail(ErrorCode::InvalidScene, "\"backend\" must be \"exact\" or \"double\"");
}

std::string scene_to_json(const Scene<Rational>& scene) { return codec::scene(scene).dump(); }
std::string scene_to_json(const Scene<double>& scene) { return codec::scene(scene).dump(); }

template <Scalar T>
std::string construction_to_json(const ConstructionOutput<T>& out) {
  json doc;
  doc["path"] = std::string(path_name(out.path));
  doc["backend"] = ScalarTraits<T>::name;
  doc["O"] = codec::point(out.o);
  doc["P"] = codec::point(out.p);
  doc["Q"] = codec::point(out.q);
  doc["D"] = codec::point(out.d);
  doc["K"] = codec::point(out.k);
  static constexpr const char* kVertex[] = {"A", "B", "C"};
  static constexpr const char* kChord[] = {"E", "F", "G"};
  static constexpr const char* kSpecial[] = {"U", "V", "W"};
  static constexpr const char* kMid[] = {"U'", "V'", "W'"};
  for (std::size_t i = 0; i < 3; ++i) doc[kVertex[i]] = codec::point(out.vertices[i]);
  for (std::size_t i = 0; i < 3; ++i) doc[kChord[i]] = codec::point(out.chord_ends[i]);
  for (std::size_t i = 0; i < 3; ++i) doc[kSpecial[i]] = codec::point(out.special_points[i]);
  for (std::size_t i = 0; i < 3; ++i) doc[kMid[i]] = codec::point(out.diagonal_midpoints[i]);
  doc["specialCircle"] = out.special_circle ? codec::circle(*out.special_circle) : json(nullptr);
  doc["midpointCircle"] = out.midpoint_circle ? codec::circle(*out.midpoint_circle) : json(nullptr);
  doc["flags"] = flags(out);
  return doc.dump(2) + "\n";
}

template std::string construction_to_json(const ConstructionOutput<Rational>&);
template std::string construction_to_json(const ConstructionOutput<double>&);

}  // namespace hagge
