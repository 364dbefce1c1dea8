#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <initializer_list>
#include <string>

#include "hagge/rational.hpp"

namespace hagge {

/// The two arithmetic backends. Rational is ground truth; double serves
/// scenes in arbitrary frames where normalization needs square roots.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static bool is_zero(const Rational& v, double /*scale*/ = 0.0) { return v.is_zero(); }
  static double magnitude(const Rational& v) { return std::abs(v.to_double()); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static std::string to_string(const Rational& v) { return v.str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "double";
  /// Relative tolerance applied against the largest intermediate magnitude.
  static constexpr double relative_tolerance = 1e-9;

  static bool is_zero(double v, double scale = 0.0) {
    return std::abs(v) <= relative_tolerance * scale;
  }
  static double magnitude(double v) { return std::abs(v); }
  static double to_double(double v) { return v; }
  static std::string to_string(double v);
};

template <Scalar T>
bool is_zero(const T& v, double scale = 0.0) {
  return ScalarTraits<T>::is_zero(v, scale);
}

template <Scalar T>
double magnitude(const T& v) {
  return ScalarTraits<T>::magnitude(v);
}

template <Scalar T>
double max_magnitude(std::initializer_list<T> values) {
  double out = 0.0;
  for (const T& v : values) out = std::max(out, magnitude(v));
  return out;
}

/// Backend-aware equality: exact for Rational, relative for double.
template <Scalar T>
bool nearly_equal(const T& lhs, const T& rhs, double scale = 0.0) {
  return is_zero(T(lhs - rhs), std::max({scale, magnitude(lhs), magnitude(rhs)}));
}

/// Shortest round-trip decimal, capped at 12 significant digits.
std::string format_double(double v);

inline std::string ScalarTraits<double>::to_string(double v) { return format_double(v); }

}  // namespace hagge
