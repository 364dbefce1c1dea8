#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "hagge/scalar.hpp"

namespace hagge {

std::string format_double(double v) {
  if (v == 0.0) return "0";  // also folds -0
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

}  // namespace hagge
