#include "gaussq/gaussian.hpp"

#include <algorithm>
#include <cmath>

#include "gaussq/error.hpp"

namespace gaussq {
namespace {

bool in_bounds(__int128 v) { return v >= -kCoordinateLimit && v <= kCoordinateLimit; }

}  // namespace

GaussianInt::GaussianInt(std::int64_t re, std::int64_t im) : re_(re), im_(im) {
  if (!in_bounds(re) || !in_bounds(im)) {
    throw OverflowError("Gaussian integer coordinate out of range: (" + std::to_string(re) +
                        ", " + std::to_string(im) + ")");
  }
}

GaussianInt mul(const GaussianInt& lhs, const GaussianInt& rhs) {
  const __int128 re = static_cast<__int128>(lhs.re()) * rhs.re() -
                      static_cast<__int128>(lhs.im()) * rhs.im();
  const __int128 im = static_cast<__int128>(lhs.re()) * rhs.im() +
                      static_cast<__int128>(lhs.im()) * rhs.re();
  if (!in_bounds(re) || !in_bounds(im)) {
    throw OverflowError("product of " + to_string(lhs) + " and " + to_string(rhs) +
                        " leaves the coordinate range");
  }
  return {static_cast<std::int64_t>(re), static_cast<std::int64_t>(im)};
}

GaussianInt conj(const GaussianInt& z) { return {z.re(), -z.im()}; }

GaussianInt rotate_quarter(const GaussianInt& z, int quarter_turns) {
  switch (((quarter_turns % 4) + 4) % 4) {
    case 1: return {-z.im(), z.re()};
    case 2: return {-z.re(), -z.im()};
    case 3: return {z.im(), -z.re()};
    default: return z;
  }
}

std::vector<GaussianInt> symmetry_orbit(const GaussianInt& z) {
  if (z.is_zero()) throw PreconditionError("symmetry orbit of zero");
  std::vector<GaussianInt> out;
  out.reserve(8);
  for (const GaussianInt& base : {z, conj(z)}) {
    for (int k = 0; k < 4; ++k) out.push_back(rotate_quarter(base, k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Angle arg_of(const GaussianInt& z) {
  if (z.is_zero()) throw PreconditionError("argument of zero");
  // Axis points and diagonals carry an exact pi-fraction intent.
  const std::int64_t a = z.re();
  const std::int64_t b = z.im();
  if (b == 0) return Angle::from_pi_fraction(a > 0 ? 0 : 1, 1);
  if (a == 0) return Angle::from_pi_fraction(b > 0 ? 1 : 3, 2);
  if (a == b) return Angle::from_pi_fraction(a > 0 ? 1 : 5, 4);
  if (a == -b) return Angle::from_pi_fraction(a < 0 ? 3 : 7, 4);
  return Angle::from_radians(std::atan2(static_cast<double>(b), static_cast<double>(a)));
}

bool divides(const GaussianInt& divisor, const GaussianInt& z) {
  const std::uint64_t n = norm(divisor);
  if (n == 0) throw PreconditionError("division by zero Gaussian integer");
  // z / d = z * conj(d) / N(d)
  const __int128 re = static_cast<__int128>(z.re()) * divisor.re() +
                      static_cast<__int128>(z.im()) * divisor.im();
  const __int128 im = static_cast<__int128>(z.im()) * divisor.re() -
                      static_cast<__int128>(z.re()) * divisor.im();
  return re % n == 0 && im % n == 0;
}

std::string to_string(const GaussianInt& z) {
  std::string out = std::to_string(z.re());
  out += z.im() < 0 ? "-" : "+";
  out += std::to_string(z.im() < 0 ? -z.im() : z.im());
  out += "i";
  return out;
}

}  // namespace gaussq
