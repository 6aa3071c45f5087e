#include "fuzzyts/degree.hpp"

#include <cctype>
#include <ostream>

namespace fuzzyts {

Degree Degree::parse(std::string_view text) {
  std::size_t pos = 0;
  std::uint64_t whole = 0;
  std::size_t int_digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    whole = whole * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (whole > 1) whole = 2;  // anything above 1 is out of range
    ++pos;
    ++int_digits;
  }
  if (int_digits == 0) throw Error("malformed degree '" + std::string(text) + "'");

  std::uint64_t fraction = 0;
  int frac_digits = 0;
  bool nonzero_fraction = false;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (frac_digits == kMaxFractionDigits)
        throw Error("degree precision: more than 9 fractional digits in '" + std::string(text) + "'");
      fraction = fraction * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      nonzero_fraction = nonzero_fraction || text[pos] != '0';
      ++frac_digits;
      ++pos;
    }
    if (pos == start) throw Error("malformed degree '" + std::string(text) + "'");
  }
  if (pos != text.size()) throw Error("malformed degree '" + std::string(text) + "'");

  if (whole > 1 || (whole == 1 && nonzero_fraction))
    throw Error("degree out of range: '" + std::string(text) + "' is not in [0,1]");
  for (int i = frac_digits; i < kMaxFractionDigits; ++i) fraction *= 10;
  return from_scaled(static_cast<Rep>(whole * kScale + fraction));
}

std::string Degree::to_string() const {
  if (value_ == 0) return "0";
  if (value_ == kScale) return "1";
  std::string digits = std::to_string(value_);
  digits.insert(0, static_cast<std::size_t>(kMaxFractionDigits) - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return "0." + digits;
}

std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.to_string(); }

}  // namespace fuzzyts
