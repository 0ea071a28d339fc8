#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "gaussq/detail/isqrt.hpp"
#include "gaussq/gaussian.hpp"
#include "gaussq/sector.hpp"

namespace gaussq {

/// Lattice points z != 0 with norm_lo <= N(z) < norm_hi and arg z in a
/// sector, enumerated column by column.
///
/// The plane is split into the four half-open quadrants
/// [k pi/2, (k+1) pi/2). Each quadrant is rotated onto the first one, where
/// its points are (x, y) with x >= 1, y >= 0. For a fixed column x the
/// candidates in the sector form at most two contiguous runs of y, bounded by
/// the rays through the sector ends and by the norm window. Points well
/// inside a run are accepted directly; points within a small angular margin
/// of a sector end are decided by sector_contains, so membership agrees with
/// it exactly and every point is visited once.
class SectorWindow {
 public:
  /// Throws PreconditionError unless norm_lo < norm_hi; norm_hi must be at
  /// most 2 * kCoordinateLimit^2.
  SectorWindow(const Sector& sector, std::uint64_t norm_lo, std::uint64_t norm_hi);

  const Sector& sector() const { return sector_; }
  std::uint64_t norm_lo() const { return norm_lo_; }
  std::uint64_t norm_hi() const { return norm_hi_; }

  /// Expected number of lattice points, width/2 * (norm_hi - norm_lo).
  double estimated_points() const;

  /// Columns run over x in [1, column_end()).
  std::int64_t column_end() const { return x_end_; }

  /// Calls visit(z, on_edge) for every point whose rotated column lies in
  /// [x_begin, x_end). on_edge marks points that were decided by the exact
  /// predicate rather than by the interior shortcut.
  template <class Visitor>
  void visit_columns(std::int64_t x_begin, std::int64_t x_end, Visitor&& visit) const;

  template <class Visitor>
  void visit(Visitor&& visit) const {
    visit_columns(1, x_end_, visit);
  }

 private:
  // Part of the sector inside one quadrant, in that quadrant's local angle.
  struct Piece {
    int quarter = 0;
    // Local angles of the candidate range (padded outward) and of the
    // certain interior (shrunk inward). A missing bound is the quadrant edge.
    bool has_lower = false;
    bool has_upper = false;
    double candidate_lower = 0.0;  // angle
    double candidate_upper = 0.0;
    double certain_lower = 0.0;
    double certain_upper = 0.0;
  };

  struct Run {
    std::int64_t lo;
    std::int64_t hi;  // inclusive
  };

  static std::int64_t floor_times_tan(std::int64_t x, double angle, std::int64_t cap);

  Sector sector_;
  std::uint64_t norm_lo_;
  std::uint64_t norm_hi_;
  std::int64_t x_end_;
  std::vector<Piece> pieces_;
};

inline std::int64_t SectorWindow::floor_times_tan(std::int64_t x, double angle, std::int64_t cap) {
  // floor(x * tan(angle)) for angle in [0, pi/2], saturating at cap.
  if (angle <= 0.0) return angle == 0.0 ? 0 : -1;
  if (angle >= kPi / 2) return cap;
  const double v = static_cast<double>(x) * std::tan(angle);
  if (!(v < static_cast<double>(cap))) return cap;
  return static_cast<std::int64_t>(std::floor(v));
}

template <class Visitor>
void SectorWindow::visit_columns(std::int64_t x_begin, std::int64_t x_end, Visitor&& visit) const {
  x_begin = std::max<std::int64_t>(x_begin, 1);
  x_end = std::min(x_end, x_end_);
  const std::uint64_t top = norm_hi_ - 1;
  for (std::int64_t x = x_begin; x < x_end; ++x) {
    const auto xx = static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(x);
    if (xx > top) break;
    const auto y_max = static_cast<std::int64_t>(detail::isqrt(top - xx));
    const auto y_min =
        norm_lo_ > xx ? static_cast<std::int64_t>(detail::isqrt_ceil(norm_lo_ - xx)) : 0;
    if (y_min > y_max) continue;
    const std::int64_t cap = y_max + 1;

    for (int quarter = 0; quarter < 4; ++quarter) {
      Run candidates[2];
      Run certain[2];
      int n_candidates = 0;
      int n_certain = 0;
      for (const Piece& piece : pieces_) {
        if (piece.quarter != quarter) continue;
        Run cand{y_min, y_max};
        Run sure{y_min, y_max};
        if (piece.has_lower) {
          cand.lo = std::max(cand.lo, floor_times_tan(x, piece.candidate_lower, cap));
          sure.lo = std::max(sure.lo, floor_times_tan(x, piece.certain_lower, cap) + 1);
        }
        if (piece.has_upper) {
          cand.hi = std::min(cand.hi, floor_times_tan(x, piece.candidate_upper, cap) + 1);
          sure.hi = std::min(sure.hi, floor_times_tan(x, piece.certain_upper, cap) - 1);
        }
        if (cand.lo <= cand.hi) candidates[n_candidates++] = cand;
        if (sure.lo <= sure.hi) certain[n_certain++] = sure;
      }
      if (n_candidates == 0) continue;
      // Merge overlapping candidate runs so each point is seen once.
      if (n_candidates == 2) {
        if (candidates[1].lo < candidates[0].lo) std::swap(candidates[0], candidates[1]);
        if (candidates[1].lo <= candidates[0].hi + 1) {
          candidates[0].hi = std::max(candidates[0].hi, candidates[1].hi);
          n_candidates = 1;
        }
      }
      for (int c = 0; c < n_candidates; ++c) {
        for (std::int64_t y = candidates[c].lo; y <= candidates[c].hi; ++y) {
          const GaussianInt z = rotate_quarter(GaussianInt(x, y), quarter);
          bool sure = false;
          for (int s = 0; s < n_certain; ++s) {
            sure = sure || (y >= certain[s].lo && y <= certain[s].hi);
          }
          if (sure) {
            visit(z, false);
          } else if (sector_contains(sector_, z)) {
            visit(z, true);
          }
        }
      }
    }
  }
}


/// Splits the window's columns into strips and runs strip(x_begin, x_end,
/// slot) on up to `threads` workers; slot in [0, threads) identifies the
/// worker so callers can keep per-worker accumulators. Which worker gets
/// which strip is not deterministic, so accumulators must combine
/// associatively and commutatively.
template <class StripFn>
void for_each_strip(const SectorWindow& window, unsigned threads, StripFn&& strip) {
  const std::int64_t end = window.column_end();
  threads = std::max(1U, threads);
  if (threads == 1 || end < 64) {
    strip(std::int64_t{1}, end, 0U);
    return;
  }
  const std::int64_t strips = static_cast<std::int64_t>(threads) * 16;
  const std::int64_t width = std::max<std::int64_t>(1, (end - 1 + strips - 1) / strips);
  std::atomic<std::int64_t> next{1};
  auto worker = [&](unsigned slot) {
    for (;;) {
      const std::int64_t begin = next.fetch_add(width);
      if (begin >= end) break;
      strip(begin, std::min(end, begin + width), slot);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
}

}  // namespace gaussq
