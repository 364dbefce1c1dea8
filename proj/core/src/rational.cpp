#include "hagge/rational.hpp"

#include <cctype>
#include <ostream>

#include "hagge/error.hpp"

namespace hagge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw GeometryError(ErrorCode::ParseError,
                        "not a rational literal: \"" + std::string(whole) + "\"");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s));
}

}  // namespace

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

void Rational::set_fraction(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) {
    throw GeometryError(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw GeometryError(ErrorCode::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  Rational out;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    out.set_fraction(parse_integer(text.substr(0, slash), text),
                     parse_integer(text.substr(slash + 1), text));
    return out;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !is_integer_literal(int_part)) ||
        (!frac_part.empty() && !is_integer_literal(frac_part)) ||
        (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+'))) {
      throw GeometryError(ErrorCode::ParseError,
                          "not a rational literal: \"" + std::string(text) + "\"");
    }
    mpz_class digits(std::string(int_part) + std::string(frac_part));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    out.set_fraction(negative ? mpz_class(-digits) : digits, scale);
    return out;
  }
  out.set_fraction(parse_integer(text, text), mpz_class(1));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace hagge
