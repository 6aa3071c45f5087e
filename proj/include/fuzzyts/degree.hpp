#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fuzzyts/error.hpp"

namespace fuzzyts {

// A truth degree in [0,1], stored exactly as a numerator over 10^9.
// Only max, min and comparison are ever applied, so values never leave the
// set of inputs and no rounding happens anywhere.
class Degree {
 public:
  using Rep = std::uint32_t;
  static constexpr Rep kScale = 1'000'000'000;
  static constexpr int kMaxFractionDigits = 9;

  constexpr Degree() = default;

  static constexpr Degree zero() { return Degree{}; }
  static constexpr Degree one() { return from_scaled(kScale); }

  // Throws Error if `scaled` exceeds kScale.
  static constexpr Degree from_scaled(Rep scaled);

  // Parses a decimal literal "D", "D.F..." with at most 9 fractional digits.
  // Throws Error with one of: "malformed degree", "degree precision",
  // "degree out of range".
  static Degree parse(std::string_view text);

  constexpr Rep scaled() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }
  constexpr bool is_positive() const { return value_ != 0; }

  // Minimal decimal form: "0", "1", "0.8", "0.000000001".
  std::string to_string() const;

  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  Rep value_ = 0;
};

constexpr Degree Degree::from_scaled(Rep scaled) {
  if (scaled > kScale) throw Error("degree out of range");
  Degree d;
  d.value_ = scaled;
  return d;
}

constexpr Degree max(Degree a, Degree b) { return a < b ? b : a; }
constexpr Degree min(Degree a, Degree b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, Degree d);

}  // namespace fuzzyts
