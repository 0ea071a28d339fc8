#include "gaussq/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "gaussq/detail/isqrt.hpp"
#include "gaussq/error.hpp"
#include "gaussq/primality.hpp"

namespace gaussq {
namespace {

using u64 = std::uint64_t;

// Odd base primes are kept up to this bound; survivors of segments whose
// square root exceeds it are confirmed with is_prime.
constexpr u64 kBaseLimit = u64{1} << 20;
// Bits processed per cache block while crossing off.
constexpr u64 kBlockBits = u64{1} << 18;

constexpr u64 kEvenMask = 0x5555555555555555ULL;
constexpr u64 kOddMask = 0xAAAAAAAAAAAAAAAAULL;

const std::vector<std::uint32_t>& base_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kBaseLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (u64 n = 3; n <= kBaseLimit; n += 2) {
      if (composite[n]) continue;
      out.push_back(static_cast<std::uint32_t>(n));
      for (u64 m = n * n; m <= kBaseLimit; m += 2 * n) composite[m] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

bool SieveSegment::contains_prime(u64 n) const {
  if (n < lo_ || n >= hi_) throw PreconditionError("value outside sieve segment");
  if (n == 2) return has_two_;
  if (n % 2 == 0 || n < first_odd_) return false;
  const u64 i = (n - first_odd_) / 2;
  return (bits_[i / 64] >> (i % 64)) & 1U;
}

std::vector<u64> SieveSegment::primes() const {
  std::vector<u64> out;
  if (has_two_) out.push_back(2);
  for (u64 w = 0; w < bits_.size(); ++w) {
    u64 word = bits_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.push_back(first_odd_ + 2 * (w * 64 + static_cast<u64>(bit)));
      word &= word - 1;
    }
  }
  return out;
}

u64 SieveSegment::count() const {
  u64 total = has_two_ ? 1 : 0;
  for (u64 word : bits_) total += static_cast<u64>(std::popcount(word));
  return total;
}

u64 SieveSegment::count_1mod4() const {
  // bit i stands for first_odd + 2i; even i share first_odd's residue
  const u64 mask = first_odd_ % 4 == 1 ? kEvenMask : kOddMask;
  u64 total = 0;
  for (u64 word : bits_) total += static_cast<u64>(std::popcount(word & mask));
  return total;
}

u64 SieveSegment::count_3mod4() const {
  const u64 mask = first_odd_ % 4 == 3 ? kEvenMask : kOddMask;
  u64 total = 0;
  for (u64 word : bits_) total += static_cast<u64>(std::popcount(word & mask));
  return total;
}

std::optional<u64> SieveSegment::first_3mod4() const {
  const u64 mask = first_odd_ % 4 == 3 ? kEvenMask : kOddMask;
  for (u64 w = 0; w < bits_.size(); ++w) {
    const u64 word = bits_[w] & mask;
    if (word != 0) {
      return first_odd_ + 2 * (w * 64 + static_cast<u64>(std::countr_zero(word)));
    }
  }
  return std::nullopt;
}

SieveSegment sieve_range(u64 lo, u64 hi, u64 max_span) {
  if (lo >= hi) throw PreconditionError("sieve_range needs lo < hi");
  if (hi - lo > max_span) {
    throw BudgetError("sieve span " + std::to_string(hi - lo) + " exceeds segment limit " +
                      std::to_string(max_span));
  }
  SieveSegment seg;
  seg.lo_ = lo;
  seg.hi_ = hi;
  seg.has_two_ = lo <= 2 && 2 < hi;

  u64 first = std::max<u64>(lo, 3);
  if (first % 2 == 0) {
    if (first == std::numeric_limits<u64>::max()) return seg;
    ++first;
  }
  seg.first_odd_ = first;
  if (first >= hi) return seg;
  seg.odd_count_ = (hi - first + 1) / 2;

  const u64 words = (seg.odd_count_ + 63) / 64;
  seg.bits_.assign(words, ~u64{0});
  if (seg.odd_count_ % 64 != 0) seg.bits_.back() = (u64{1} << (seg.odd_count_ % 64)) - 1;

  const u64 root = detail::isqrt(hi - 1);
  const auto& primes = base_primes();
  const auto used_end = std::upper_bound(primes.begin(), primes.end(), std::min(root, kBaseLimit));
  const auto used = static_cast<std::size_t>(used_end - primes.begin());

  // next[k]: bit index of the next odd multiple of primes[k] to clear.
  std::vector<u64> next(used);
  for (std::size_t k = 0; k < used; ++k) {
    const u64 p = primes[k];
    unsigned __int128 m = static_cast<unsigned __int128>(first) + (p - first % p) % p;
    m = std::max<unsigned __int128>(m, static_cast<unsigned __int128>(p) * p);
    if (m % 2 == 0) m += p;
    next[k] = m >= hi ? seg.odd_count_ : static_cast<u64>((m - first) / 2);
  }

  u64* bits = seg.bits_.data();
  for (u64 block = 0; block < seg.odd_count_; block += kBlockBits) {
    const u64 block_end = std::min(block + kBlockBits, seg.odd_count_);
    for (std::size_t k = 0; k < used; ++k) {
      const u64 p = primes[k];
      u64 i = next[k];
      for (; i < block_end; i += p) bits[i / 64] &= ~(u64{1} << (i % 64));
      next[k] = i;
    }
  }

  if (root > kBaseLimit) {
    for (u64 w = 0; w < words; ++w) {
      u64 word = bits[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        word &= word - 1;
        if (!is_prime(first + 2 * (w * 64 + static_cast<u64>(bit)))) {
          bits[w] &= ~(u64{1} << bit);
        }
      }
    }
  }
  return seg;
}

PrimeCountsMod4 count_primes_mod4(u64 x, const SieveOptions& options) {
  if (x > kPi3Limit) {
    throw BudgetError("prime counting limited to x <= 10^10, got " + std::to_string(x));
  }
  PrimeCountsMod4 total;
  if (x < 2) return total;
  const u64 span = std::max<u64>(options.segment_size, 1024);
  const u64 end = x + 1;
  const u64 segments = (end + span - 1) / span;
  const unsigned threads =
      static_cast<unsigned>(std::clamp<u64>(options.threads, 1, std::max<u64>(segments, 1)));

  std::vector<PrimeCountsMod4> partial(threads);
  auto work = [&](unsigned t) {
    for (u64 s = t; s < segments; s += threads) {
      const u64 lo = s * span;
      const SieveSegment seg = sieve_range(lo, std::min(end, lo + span), span);
      partial[t].one += seg.count_1mod4();
      partial[t].three += seg.count_3mod4();
      if (lo <= 2 && 2 < end) partial[t].two = 1;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& p : partial) {
    total.one += p.one;
    total.three += p.three;
    total.two |= p.two;
  }
  return total;
}

u64 pi3(u64 x, const SieveOptions& options) { return count_primes_mod4(x, options).three; }

std::optional<u64> prime_3mod4_in(double lo, double hi, const SieveOptions& options) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo > 0.0) || !(lo < hi)) {
    throw PreconditionError("prime_3mod4_in needs 0 < lo < hi");
  }
  constexpr long double kTop = 18446744073709551615.0L;
  if (static_cast<long double>(lo) >= kTop) return std::nullopt;
  u64 start = static_cast<u64>(std::floor(static_cast<long double>(lo))) + 1;
  const long double hi_ceil = std::ceil(static_cast<long double>(hi));
  const u64 end = hi_ceil >= kTop ? std::numeric_limits<u64>::max() : static_cast<u64>(hi_ceil);

  const u64 max_chunk = std::max<u64>(options.segment_size, 4096);
  u64 chunk = 4096;
  while (start < end) {
    const u64 stop = end - start > chunk ? start + chunk : end;
    const SieveSegment seg = sieve_range(start, stop, chunk);
    if (auto p = seg.first_3mod4()) return p;
    start = stop;
    chunk = std::min(chunk * 2, max_chunk);
  }
  return std::nullopt;
}

}  // namespace gaussq
