#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gaussq/angle.hpp"

namespace gaussq {

/// Largest allowed |real| or |imaginary| part; keeps a^2 + b^2 exact in 64 bits.
inline constexpr std::int64_t kCoordinateLimit = 2147483647;  // 2^31 - 1

/// Exact lattice point a + bi of Z[i].
class GaussianInt {
 public:
  constexpr GaussianInt() = default;
  /// Throws OverflowError when a coordinate exceeds kCoordinateLimit.
  GaussianInt(std::int64_t re, std::int64_t im);

  constexpr std::int64_t re() const { return re_; }
  constexpr std::int64_t im() const { return im_; }
  constexpr bool is_zero() const { return re_ == 0 && im_ == 0; }

  friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;
  friend constexpr auto operator<=>(const GaussianInt&, const GaussianInt&) = default;

 private:
  std::int64_t re_ = 0;
  std::int64_t im_ = 0;
};

/// a^2 + b^2.
constexpr std::uint64_t norm(const GaussianInt& z) {
  const auto a = static_cast<std::uint64_t>(z.re() < 0 ? -z.re() : z.re());
  const auto b = static_cast<std::uint64_t>(z.im() < 0 ? -z.im() : z.im());
  return a * a + b * b;
}

/// Exact product; throws OverflowError instead of wrapping.
GaussianInt mul(const GaussianInt& lhs, const GaussianInt& rhs);

GaussianInt conj(const GaussianInt& z);

/// i * z, a quarter turn counterclockwise.
GaussianInt rotate_quarter(const GaussianInt& z, int quarter_turns = 1);

/// Orbit of z under the four units and complex conjugation, sorted and
/// deduplicated (8 points, or 4 on the axes and diagonals).
/// Throws PreconditionError for zero.
std::vector<GaussianInt> symmetry_orbit(const GaussianInt& z);

/// Principal argument in [0, 2pi). Throws PreconditionError for zero.
Angle arg_of(const GaussianInt& z);

/// Exact division test: true when divisor | z in Z[i]. divisor must be nonzero.
bool divides(const GaussianInt& divisor, const GaussianInt& z);

/// "a+bi" / "a-bi".
std::string to_string(const GaussianInt& z);

}  // namespace gaussq
