#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gaussq {

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kPi3Limit = 10'000'000'000;

struct SieveOptions {
  /// Maximum span of one segment, in integers.
  std::uint64_t segment_size = kDefaultSegmentSize;
  /// Segments are independent; counts are identical for any thread count.
  unsigned threads = 1;
};

/// Primality bitmap for [lo, hi). Odd integers are stored one bit each;
/// 2 is tracked separately. Every set bit is a proven prime.
class SieveSegment {
 public:
  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }

  /// n must lie in [lo, hi).
  bool contains_prime(std::uint64_t n) const;
  std::vector<std::uint64_t> primes() const;
  std::uint64_t count() const;
  /// Primes congruent to 1 and to 3 modulo 4.
  std::uint64_t count_1mod4() const;
  std::uint64_t count_3mod4() const;
  /// Smallest prime p = 3 (mod 4) in the segment.
  std::optional<std::uint64_t> first_3mod4() const;

 private:
  friend SieveSegment sieve_range(std::uint64_t, std::uint64_t, std::uint64_t);

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  std::uint64_t first_odd_ = 3;  // number represented by bit 0
  std::uint64_t odd_count_ = 0;
  bool has_two_ = false;
  std::vector<std::uint64_t> bits_;
};

/// Sieves [lo, hi). Throws PreconditionError unless lo < hi and
/// BudgetError when hi - lo exceeds max_span.
SieveSegment sieve_range(std::uint64_t lo, std::uint64_t hi,
                         std::uint64_t max_span = kDefaultSegmentSize);

struct PrimeCountsMod4 {
  std::uint64_t one = 0;    // p = 1 (mod 4)
  std::uint64_t three = 0;  // p = 3 (mod 4)
  std::uint64_t two = 0;    // 1 when 2 <= x
};

/// Counts of primes p <= x split by residue mod 4. Throws BudgetError for
/// x > kPi3Limit.
PrimeCountsMod4 count_primes_mod4(std::uint64_t x, const SieveOptions& options = {});

/// Number of primes p <= x with p = 3 (mod 4).
std::uint64_t pi3(std::uint64_t x, const SieveOptions& options = {});

/// Smallest prime p = 3 (mod 4) with lo < p < hi, or nullopt. Only (lo, hi)
/// is sieved. Throws PreconditionError unless 0 < lo < hi.
std::optional<std::uint64_t> prime_3mod4_in(double lo, double hi, const SieveOptions& options = {});

}  // namespace gaussq
