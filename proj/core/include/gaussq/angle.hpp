#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace gaussq {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A rational multiple of pi, num/den * pi, in lowest terms with den > 0.
struct PiFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

/// Reduces num/den to lowest terms with a positive denominator. The value is
/// not wrapped. Throws PreconditionError when den == 0.
PiFraction reduce(std::int64_t num, std::int64_t den);

/// Direction angle in radians, normalized to [0, 2pi).
///
/// An angle remembers how it was specified. When it came from a rational
/// multiple of pi the exact fraction is kept, and boundary decisions use
/// sin/cos evaluated at that fraction (exactly, for multiples of pi/4)
/// instead of at the rounded double.
class Angle {
 public:
  enum class Origin { kPiFraction, kDecimal };

  Angle() = default;

  static Angle from_radians(double radians);
  /// num/den * pi, wrapped into [0, 2pi).
  static Angle from_pi_fraction(std::int64_t num, std::int64_t den);

  double radians() const { return value_; }
  Origin origin() const { return origin_; }
  /// The wrapped fraction (0 <= num < 2*den) when origin() is kPiFraction.
  std::optional<PiFraction> pi_fraction() const;

  /// When the direction is a multiple of pi/4, an integer vector pointing
  /// along it (components in {-1, 0, 1}).
  std::optional<std::pair<int, int>> lattice_direction() const;

  long double cos_intent() const;
  long double sin_intent() const;

  /// Text in the angle grammar: "0", "pi", "3pi/4", "pi/31415" or a decimal.
  std::string to_string() const;

  /// Sum, kept exact when both operands are pi fractions.
  friend Angle operator+(const Angle& lhs, const Angle& rhs);

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  double value_ = 0.0;
  Origin origin_ = Origin::kDecimal;
  PiFraction fraction_{};
};

/// Parses the angle grammar:
///
///   pi | Kpi | pi/N | Kpi/N      (K, N positive integers)
///   <decimal radians>
///   <pi term>+<decimal> | <pi term>-<decimal>
///
/// The last form is an offset in radians and yields a decimal-origin angle.
/// Throws ParseError naming the offending token.
Angle parse_angle(std::string_view text);

/// Same grammar, but also returns the unwrapped value so that "2pi" can be
/// told apart from "0" when a sector end is being read.
struct AngleLiteral {
  Angle angle;
  long double unwrapped = 0.0L;
  std::optional<PiFraction> unwrapped_fraction;
};
AngleLiteral parse_angle_literal(std::string_view text);

}  // namespace gaussq
