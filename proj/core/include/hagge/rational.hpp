#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hagge {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
///
/// Only integers convert implicitly; there is deliberately no constructor
/// from floating point, so an expression mixing Rational and double does
/// not compile.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(to_mpz(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral N, std::integral D>
  Rational(N numerator, D denominator) {
    set_fraction(to_mpz(numerator), to_mpz(denominator));
  }

  explicit Rational(const mpq_class& value);

  Rational(float) = delete;
  Rational(double) = delete;
  Rational(long double) = delete;

  /// Parses "p", "p/q", or a finite decimal such as "-1.25".
  static Rational parse(std::string_view text);

  std::string str() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  template <std::integral I>
  static mpz_class to_mpz(I value) {
    if constexpr (std::is_signed_v<I>) {
      return mpz_class(std::to_string(static_cast<std::int64_t>(value)));
    } else {
      return mpz_class(std::to_string(static_cast<std::uint64_t>(value)));
    }
  }

  void set_fraction(const mpz_class& numerator, const mpz_class& denominator);

  mpq_class value_;
};

inline Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

}  // namespace hagge
