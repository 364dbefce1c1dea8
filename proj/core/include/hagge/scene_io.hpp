#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "hagge/construction.hpp"
#include "hagge/scene.hpp"

namespace hagge {

using AnyScene = std::variant<Scene<Rational>, Scene<double>>;

/// Parses a scene document:
///
///   {"triangle": {"params": [a, b, c]} | {"vertices": [[x, y], [x, y], [x, y]]},
///    "P": [x, y] | {"k": k},
///    "D": [m, n] | {"K": [x, y]},        (or a top-level "K": [x, y])
///    "backend": "exact" | "double"}      (default "exact")
///
/// Numbers are JSON numbers or strings "p/q", "p", or decimals. The exact
/// backend accepts JSON integers and strings only. Errors are GeometryError
/// with codes MALFORMED_JSON, SCENE_UNDERSPECIFIED, SCENE_OVERSPECIFIED,
/// INVALID_SCENE, INEXACT_INPUT, PARSE_ERROR, plus any scene invariant code.
AnyScene parse_scene_document(std::string_view text);

/// Scene document text that parse_scene_document reads back to an equal
/// scene. Rationals are written as "p/q" strings, doubles as numbers.
std::string scene_to_json(const Scene<Rational>& scene);
std::string scene_to_json(const Scene<double>& scene);

/// Construction output with the same number encoding as scene documents.
template <Scalar T>
std::string construction_to_json(const ConstructionOutput<T>& output);

extern template std::string construction_to_json(const ConstructionOutput<Rational>&);
extern template std::string construction_to_json(const ConstructionOutput<double>&);

}  // namespace hagge
