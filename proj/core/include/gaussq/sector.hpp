#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gaussq/angle.hpp"
#include "gaussq/gaussian.hpp"

namespace gaussq {

/// Half-width of the band around a sector bound inside which membership is
/// decided by an exact side-of-ray test instead of comparing doubles.
inline constexpr double kAngleGuard = 1e-12;

enum class Bounds { kOpen, kClosed };

/// Angular interval starting at alpha and sweeping counterclockwise by
/// width, 0 < width <= 2pi. Wrap-around past 2pi is allowed.
class Sector {
 public:
  /// Throws PreconditionError unless 0 < width <= 2pi.
  Sector(Angle alpha, double width, Bounds bounds);

  /// [alpha, beta] swept counterclockwise; width is (beta - alpha) mod 2pi,
  /// computed exactly for pi fractions. Equal bounds are rejected.
  static Sector between(const Angle& alpha, const Angle& beta, Bounds bounds);
  /// As between(), but a literal "2pi" end (unwrapped difference of exactly
  /// one turn) yields the full circle.
  static Sector between(const AngleLiteral& alpha, const AngleLiteral& beta, Bounds bounds);
  static Sector full_circle(Bounds bounds = Bounds::kClosed);

  const Angle& alpha() const { return alpha_; }
  const Angle& beta() const { return beta_; }
  double width() const { return width_; }
  bool inclusive() const { return bounds_ == Bounds::kClosed; }
  Bounds bounds() const { return bounds_; }
  bool is_full_circle() const { return full_; }

  Sector with_bounds(Bounds bounds) const;
  /// The sector turned counterclockwise by quarter_turns * pi/2.
  Sector rotated_quarter(int quarter_turns = 1) const;

  /// "[alpha, beta]" or "(alpha, beta)".
  std::string to_string() const;

 private:
  Sector(Angle alpha, Angle beta, double width, Bounds bounds, bool full);

  Angle alpha_;
  Angle beta_;
  double width_ = kTwoPi;
  Bounds bounds_ = Bounds::kClosed;
  bool full_ = false;
};

/// Sign of the cross product (direction of ray) x (z): +1 when z lies
/// counterclockwise of the ray, -1 clockwise, 0 on the line. Exact for
/// multiples of pi/4; extended precision at the stored intent otherwise.
int side_of_ray(const Angle& ray, const GaussianInt& z);

/// True when arg z lies in the sector. Throws PreconditionError for zero.
bool sector_contains(const Sector& sector, const GaussianInt& z);

/// {alpha < arg z < beta, r < |z| < R}.
class AnnularRegion {
 public:
  /// The sector is stored with open bounds. Throws PreconditionError unless
  /// 0 < r < R (both finite).
  AnnularRegion(const Sector& sector, double r, double big_r);

  const Sector& sector() const { return sector_; }
  double r() const { return r_; }
  double big_r() const { return big_r_; }

  AnnularRegion rotated_quarter(int quarter_turns = 1) const;

 private:
  Sector sector_;
  double r_;
  double big_r_;
};

/// Exact (a + bi) / q with q >= 1.
class RationalComplex {
 public:
  /// Throws PreconditionError when denominator == 0.
  RationalComplex(GaussianInt numerator, std::uint64_t denominator);

  const GaussianInt& numerator() const { return numerator_; }
  std::uint64_t denominator() const { return denominator_; }
  bool is_zero() const { return numerator_.is_zero(); }

  long double real() const;
  long double imag() const;

  friend bool operator==(const RationalComplex&, const RationalComplex&) = default;

 private:
  GaussianInt numerator_;
  std::uint64_t denominator_;
};

/// Exact comparison of |w|^2 = N(num)/q^2 against x^2 for a finite double
/// x >= 0: returns <0, 0, >0.
int compare_modulus(const RationalComplex& w, double x);

/// Exact test of |w - (re + im i)| < eps for finite doubles re, im, eps.
bool within_distance(const RationalComplex& w, double re, double im, double eps);

/// |w - (re + im i)| in extended precision, for reporting.
long double distance(const RationalComplex& w, double re, double im);

/// True when r < |w| < R (decided exactly in rationals) and arg w is strictly
/// inside the sector. Throws PreconditionError for zero.
bool region_contains(const AnnularRegion& region, const RationalComplex& w);

}  // namespace gaussq
