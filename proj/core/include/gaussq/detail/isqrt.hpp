#pragma once

#include <cmath>
#include <cstdint>

namespace gaussq::detail {

/// floor(sqrt(n)), exact for every 64-bit n.
inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// ceil(sqrt(n)).
inline std::uint64_t isqrt_ceil(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

}  // namespace gaussq::detail
