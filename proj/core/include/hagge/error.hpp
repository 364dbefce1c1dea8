#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hagge {

enum class ErrorCode {
  CoincidentPoints,
  PointNotOnCircle,
  CollinearPoints,
  InvalidLine,
  DivisionByZero,
  ParseError,
  MalformedJson,
  DIsVertex,
  NonCanonicalForClosedForm,
  DegenerateTriangle,
  DegeneratePointCircle,
  DegenerateInput,
  CollinearReflections,
  PolicyUnsatisfiable,
  SceneUnderspecified,
  SceneOverspecified,
  InvalidScene,
  InexactInput,
};

/// Machine-readable upper-snake name, e.g. "SCENE_UNDERSPECIFIED".
std::string_view code_name(ErrorCode code) noexcept;

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hagge
