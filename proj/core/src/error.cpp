#include "hagge/error.hpp"

namespace hagge {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CoincidentPoints: return "COINCIDENT_POINTS";
    case ErrorCode::PointNotOnCircle: return "POINT_NOT_ON_CIRCLE";
    case ErrorCode::CollinearPoints: return "COLLINEAR_POINTS";
    case ErrorCode::InvalidLine: return "INVALID_LINE";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::MalformedJson: return "MALFORMED_JSON";
    case ErrorCode::DIsVertex: return "D_IS_VERTEX";
    case ErrorCode::NonCanonicalForClosedForm: return "NON_CANONICAL_FOR_CLOSED_FORM";
    case ErrorCode::DegenerateTriangle: return "DEGENERATE_TRIANGLE";
    case ErrorCode::DegeneratePointCircle: return "DEGENERATE_POINT_CIRCLE";
    case ErrorCode::DegenerateInput: return "DEGENERATE_INPUT";
    case ErrorCode::CollinearReflections: return "COLLINEAR_REFLECTIONS";
    case ErrorCode::PolicyUnsatisfiable: return "POLICY_UNSATISFIABLE";
    case ErrorCode::SceneUnderspecified: return "SCENE_UNDERSPECIFIED";
    case ErrorCode::SceneOverspecified: return "SCENE_OVERSPECIFIED";
    case ErrorCode::InvalidScene: return "INVALID_SCENE";
    case ErrorCode::InexactInput: return "INEXACT_INPUT";
  }
  return "UNKNOWN";
}

}  // namespace hagge
