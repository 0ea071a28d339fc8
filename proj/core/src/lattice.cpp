#include "gaussq/lattice.hpp"

#include "gaussq/error.hpp"

namespace gaussq {
namespace {

// Angular margin around sector ends. Far above double rounding of the
// bounds, far below the angular spacing of lattice points that matters.
constexpr double kEdgeMargin = 1e-9;

constexpr std::uint64_t kMaxNorm =
    2 * static_cast<std::uint64_t>(kCoordinateLimit) * static_cast<std::uint64_t>(kCoordinateLimit);

}  // namespace

SectorWindow::SectorWindow(const Sector& sector, std::uint64_t norm_lo, std::uint64_t norm_hi)
    : sector_(sector), norm_lo_(std::max<std::uint64_t>(norm_lo, 1)), norm_hi_(norm_hi) {
  if (norm_lo_ >= norm_hi_) throw PreconditionError("empty norm window");
  if (norm_hi_ > kMaxNorm + 1) throw OverflowError("norm window exceeds the coordinate range");
  x_end_ = static_cast<std::int64_t>(detail::isqrt(norm_hi_ - 1)) + 1;

  if (sector.is_full_circle() && sector.inclusive()) {
    for (int k = 0; k < 4; ++k) pieces_.push_back(Piece{.quarter = k});
    return;
  }

  const double start = sector.alpha().radians();
  const double end = start + sector.width();
  for (int k = 0; k < 4; ++k) {
    const double q0 = k * (kPi / 2);
    const double q1 = q0 + kPi / 2;
    for (const double shift : {-kTwoPi, 0.0, kTwoPi}) {
      const double a = start + shift;
      const double b = end + shift;
      if (a - kEdgeMargin >= q1 || b + kEdgeMargin <= q0) continue;
      Piece piece{.quarter = k};
      if (a + kEdgeMargin > q0) {
        piece.has_lower = true;
        piece.candidate_lower = a - kEdgeMargin - q0;
        piece.certain_lower = a + kEdgeMargin - q0;
      }
      if (b - kEdgeMargin < q1) {
        piece.has_upper = true;
        piece.candidate_upper = b + kEdgeMargin - q0;
        piece.certain_upper = b - kEdgeMargin - q0;
      }
      pieces_.push_back(piece);
    }
  }
}

double SectorWindow::estimated_points() const {
  return sector_.width() / 2.0 * static_cast<double>(norm_hi_ - norm_lo_);
}

}  // namespace gaussq
