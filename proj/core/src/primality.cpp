#include "gaussq/primality.hpp"

#include <array>
#include <cmath>

#include "gaussq/detail/isqrt.hpp"
#include "gaussq/error.hpp"

namespace gaussq {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 15> kSmallPrimes = {3,  5,  7,  11, 13, 17, 19, 23,
                                              29, 31, 37, 41, 43, 47, 53};

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One strong-probable-prime round; n odd, n - 1 = d * 2^s.
bool strong_probable_prime(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return true;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Cheap Gaussian divisor for a composite z, or nullopt. Only small rational
// primes of the norm are tried.
std::optional<GaussianInt> small_divisor(const GaussianInt& z, u64 n) {
  if (n % 2 == 0) return GaussianInt(1, 1);
  for (u64 p = 3; p < 1000 && p * p <= n; p += 2) {
    if (n % p != 0) continue;
    if (p % 4 == 3) {
      if (z.re() % static_cast<std::int64_t>(p) == 0 && z.im() % static_cast<std::int64_t>(p) == 0) {
        return GaussianInt(static_cast<std::int64_t>(p), 0);
      }
      continue;
    }
    // p = x^2 + y^2; one of x + yi, x - yi divides z.
    for (std::int64_t x = 1; static_cast<u64>(x * x) < p; ++x) {
      const u64 rest = p - static_cast<u64>(x * x);
      const u64 y = detail::isqrt(rest);
      if (y * y != rest) continue;
      const GaussianInt pi(x, static_cast<std::int64_t>(y));
      if (divides(pi, z)) return pi;
      if (divides(conj(pi), z)) return conj(pi);
    }
  }
  return std::nullopt;
}

PrimeClass prime_shape(const GaussianInt& z, u64 n) {
  if (n == 2) return {PrimeTag::kRamified, 2, std::nullopt};
  if (z.re() == 0 || z.im() == 0) {
    return {PrimeTag::kInert, static_cast<u64>(std::abs(z.re()) + std::abs(z.im())), std::nullopt};
  }
  return {PrimeTag::kSplit, n, std::nullopt};
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < 59 * 59) return true;

  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  if (n < (u64{1} << 32)) {
    // Sufficient below 4,759,123,141.
    for (u64 a : {2, 7, 61}) {
      if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
  }
  // Jim Sinclair's seven bases, sufficient for all n < 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

std::string_view to_string(PrimeTag tag) {
  switch (tag) {
    case PrimeTag::kZero: return "zero";
    case PrimeTag::kUnit: return "unit";
    case PrimeTag::kRamified: return "ramified";
    case PrimeTag::kInert: return "inert";
    case PrimeTag::kSplit: return "split";
    case PrimeTag::kComposite: return "composite";
  }
  return "unknown";
}

PrimeClass classify(const GaussianInt& z) {
  const u64 n = norm(z);
  if (n == 0) return {PrimeTag::kZero, std::nullopt, std::nullopt};
  if (n == 1) return {PrimeTag::kUnit, std::nullopt, std::nullopt};
  if (z.re() == 0 || z.im() == 0) {
    const auto c = static_cast<u64>(std::abs(z.re()) + std::abs(z.im()));
    if (c % 4 == 3 && is_prime(c)) return prime_shape(z, n);
  } else if (is_prime(n)) {
    return prime_shape(z, n);
  }
  return {PrimeTag::kComposite, std::nullopt, small_divisor(z, n)};
}

bool is_gaussian_prime(const GaussianInt& z) {
  if (z.re() == 0 || z.im() == 0) {
    const auto c = static_cast<u64>(std::abs(z.re()) + std::abs(z.im()));
    return c % 4 == 3 && is_prime(c);
  }
  const u64 n = norm(z);
  if (n % 2 == 0) return n == 2;
  return is_prime(n);
}

PrimeClass trial_divide_zi(const GaussianInt& z) {
  const u64 n = norm(z);
  if (n > kTrialDivisionNormLimit) {
    throw BudgetError("trial division limited to norm <= 10^8, got " + std::to_string(n));
  }
  if (n == 0) return {PrimeTag::kZero, std::nullopt, std::nullopt};
  if (n == 1) return {PrimeTag::kUnit, std::nullopt, std::nullopt};

  // Every divisor has an associate with re > 0, im >= 0; scan those by norm.
  const u64 limit = detail::isqrt(n);
  std::optional<GaussianInt> best;
  u64 best_norm = 0;
  for (std::int64_t x = 1; static_cast<u64>(x * x) <= limit; ++x) {
    for (std::int64_t y = 0; static_cast<u64>(x * x + y * y) <= limit; ++y) {
      const u64 dn = static_cast<u64>(x * x + y * y);
      if (dn <= 1) continue;
      if (best && dn >= best_norm) break;
      const GaussianInt d(x, y);
      if (divides(d, z)) {
        best = d;
        best_norm = dn;
        break;
      }
    }
  }
  if (best) return {PrimeTag::kComposite, std::nullopt, best};
  return prime_shape(z, n);
}

}  // namespace gaussq
