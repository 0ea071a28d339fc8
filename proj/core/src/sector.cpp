#include "gaussq/sector.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "gaussq/error.hpp"

namespace gaussq {
namespace {

int sign(long double v) { return (v > 0) - (v < 0); }

using boost::multiprecision::cpp_int;

// A finite double as mantissa * 2^exponent with an integer mantissa.
struct Dyadic {
  cpp_int mantissa;
  int exponent;
};

Dyadic to_dyadic(double x) {
  int exponent = 0;
  const double fraction = std::frexp(x, &exponent);
  return {cpp_int(static_cast<std::int64_t>(std::ldexp(fraction, 53))), exponent - 53};
}

// v * 2^(shift), shift >= 0
cpp_int shifted(const cpp_int& v, int shift) { return v << shift; }

}  // namespace

Sector::Sector(Angle alpha, double width, Bounds bounds)
    : alpha_(alpha), width_(width), bounds_(bounds) {
  if (!(width > 0.0) || !(width <= kTwoPi)) {
    throw PreconditionError("sector width must lie in (0, 2pi], got " + std::to_string(width));
  }
  full_ = width >= kTwoPi;
  beta_ = full_ ? alpha_ : Angle::from_radians(alpha_.radians() + width_);
}

Sector::Sector(Angle alpha, Angle beta, double width, Bounds bounds, bool full)
    : alpha_(alpha), beta_(beta), width_(width), bounds_(bounds), full_(full) {}

Sector Sector::between(const Angle& alpha, const Angle& beta, Bounds bounds) {
  const auto fa = alpha.pi_fraction();
  const auto fb = beta.pi_fraction();
  if (fa && fb) {
    // (beta - alpha) / pi as an exact fraction in [0, 2)
    const Angle diff = beta + Angle::from_pi_fraction(-fa->num, fa->den);
    if (const auto fd = diff.pi_fraction()) {
      if (fd->num == 0) throw PreconditionError("sector bounds coincide: " + alpha.to_string());
      return Sector(alpha, beta, diff.radians(), bounds, false);
    }
  }
  double width = beta.radians() - alpha.radians();
  if (width < 0.0) width += kTwoPi;
  if (width <= 0.0) throw PreconditionError("sector bounds coincide: " + alpha.to_string());
  return Sector(alpha, beta, width, bounds, false);
}

Sector Sector::between(const AngleLiteral& alpha, const AngleLiteral& beta, Bounds bounds) {
  bool full_turn = false;
  if (alpha.unwrapped_fraction && beta.unwrapped_fraction) {
    const PiFraction a = *alpha.unwrapped_fraction;
    const PiFraction b = *beta.unwrapped_fraction;
    const __int128 lhs = static_cast<__int128>(b.num) * a.den - static_cast<__int128>(a.num) * b.den;
    full_turn = lhs == 2 * static_cast<__int128>(a.den) * b.den;
  } else {
    full_turn = std::fabs(beta.unwrapped - alpha.unwrapped - 2.0L * std::numbers::pi_v<long double>) <=
                1e-15L;
  }
  if (full_turn) return Sector(alpha.angle, alpha.angle, kTwoPi, bounds, true);
  return between(alpha.angle, beta.angle, bounds);
}

Sector Sector::full_circle(Bounds bounds) {
  const Angle zero = Angle::from_pi_fraction(0, 1);
  return Sector(zero, zero, kTwoPi, bounds, true);
}

Sector Sector::with_bounds(Bounds bounds) const {
  Sector out = *this;
  out.bounds_ = bounds;
  return out;
}

Sector Sector::rotated_quarter(int quarter_turns) const {
  const Angle turn = Angle::from_pi_fraction(((quarter_turns % 4) + 4) % 4, 2);
  Sector out = *this;
  out.alpha_ = alpha_ + turn;
  out.beta_ = beta_ + turn;
  return out;
}

std::string Sector::to_string() const {
  const bool closed = inclusive();
  const std::string end = full_ ? alpha_.to_string() + "+2pi" : beta_.to_string();
  return std::string(closed ? "[" : "(") + alpha_.to_string() + ", " + end + (closed ? "]" : ")");
}

int side_of_ray(const Angle& ray, const GaussianInt& z) {
  if (const auto dir = ray.lattice_direction()) {
    const std::int64_t cross = dir->first * z.im() - dir->second * z.re();
    return (cross > 0) - (cross < 0);
  }
  const long double cross = static_cast<long double>(z.im()) * ray.cos_intent() -
                            static_cast<long double>(z.re()) * ray.sin_intent();
  return sign(cross);
}

bool sector_contains(const Sector& sector, const GaussianInt& z) {
  if (z.is_zero()) throw PreconditionError("sector membership of zero");
  const bool closed = sector.inclusive();
  double d = arg_of(z).radians() - sector.alpha().radians();
  if (d < 0.0) d += kTwoPi;
  const bool near_alpha = d < kAngleGuard || d > kTwoPi - kAngleGuard;

  if (sector.is_full_circle()) {
    if (closed || !near_alpha) return true;
    return side_of_ray(sector.alpha(), z) != 0;
  }

  const double width = sector.width();
  auto before_beta = [&] {
    const int s = side_of_ray(sector.beta(), z);
    return s < 0 || (s == 0 && closed);
  };

  if (near_alpha) {
    const int s = side_of_ray(sector.alpha(), z);
    if (s < 0) {
      // Just clockwise of alpha: only inside when the sector nearly closes up.
      return width > kTwoPi - 2 * kAngleGuard && before_beta();
    }
    if (s == 0 && !closed) return false;
    d = 0.0;
  }
  if (std::fabs(d - width) < kAngleGuard || (near_alpha && width < kAngleGuard)) {
    return before_beta();
  }
  return d < width;
}

AnnularRegion::AnnularRegion(const Sector& sector, double r, double big_r)
    : sector_(sector.with_bounds(Bounds::kOpen)), r_(r), big_r_(big_r) {
  if (!std::isfinite(r) || !std::isfinite(big_r) || !(r > 0.0) || !(r < big_r)) {
    throw PreconditionError("annular region needs 0 < r < R, got r=" + std::to_string(r) +
                            " R=" + std::to_string(big_r));
  }
}

AnnularRegion AnnularRegion::rotated_quarter(int quarter_turns) const {
  return AnnularRegion(sector_.rotated_quarter(quarter_turns), r_, big_r_);
}

RationalComplex::RationalComplex(GaussianInt numerator, std::uint64_t denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (denominator == 0) throw PreconditionError("rational complex with zero denominator");
}

long double RationalComplex::real() const {
  return static_cast<long double>(numerator_.re()) / static_cast<long double>(denominator_);
}

long double RationalComplex::imag() const {
  return static_cast<long double>(numerator_.im()) / static_cast<long double>(denominator_);
}

int compare_modulus(const RationalComplex& w, double x) {
  if (!std::isfinite(x) || x < 0.0) throw PreconditionError("modulus bound must be finite and >= 0");
  const Dyadic d = to_dyadic(x);
  cpp_int lhs = norm(w.numerator());
  cpp_int rhs = d.mantissa * d.mantissa * w.denominator() * w.denominator();
  // compare lhs against rhs * 2^(2 * exponent)
  if (d.exponent >= 0) {
    rhs <<= 2 * d.exponent;
  } else {
    lhs <<= -2 * d.exponent;
  }
  return lhs.compare(rhs);
}

bool within_distance(const RationalComplex& w, double re, double im, double eps) {
  if (!std::isfinite(re) || !std::isfinite(im) || !std::isfinite(eps) || !(eps > 0.0)) {
    throw PreconditionError("distance test needs finite target and eps > 0");
  }
  // |(a - q re) + (b - q im) i|^2 < (q eps)^2, all scaled to a common 2^-k.
  const Dyadic x = to_dyadic(re);
  const Dyadic y = to_dyadic(im);
  const Dyadic e = to_dyadic(eps);
  const int k = -std::min({x.exponent, y.exponent, e.exponent, 0});
  const cpp_int q = w.denominator();
  const cpp_int dx = shifted(cpp_int(w.numerator().re()), k) - q * shifted(x.mantissa, x.exponent + k);
  const cpp_int dy = shifted(cpp_int(w.numerator().im()), k) - q * shifted(y.mantissa, y.exponent + k);
  const cpp_int radius = q * shifted(e.mantissa, e.exponent + k);
  return dx * dx + dy * dy < radius * radius;
}

long double distance(const RationalComplex& w, double re, double im) {
  return std::hypot(w.real() - static_cast<long double>(re), w.imag() - static_cast<long double>(im));
}

bool region_contains(const AnnularRegion& region, const RationalComplex& w) {
  if (w.is_zero()) throw PreconditionError("region membership of zero");
  return compare_modulus(w, region.r()) > 0 && compare_modulus(w, region.big_r()) < 0 &&
         sector_contains(region.sector(), w.numerator());
}

}  // namespace gaussq
