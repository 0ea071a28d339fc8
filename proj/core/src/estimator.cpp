#include "gaussq/estimator.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>

#include "gaussq/error.hpp"

namespace gaussq {
namespace {

// Kronrod 15-point abscissae (positive half) and weights; every odd-indexed
// abscissa is also a 7-point Gauss node.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

// integrand after x = e^t: e^t / t
double integrand(double t) { return std::exp(t) / t; }

Panel kronrod(double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double center = integrand(mid);
  double kronrod_sum = center * kKronrodWeights[7];
  double gauss_sum = center * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double pair = integrand(mid - dx) + integrand(mid + dx);
    kronrod_sum += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss_sum += kGaussWeights[j / 2] * pair;
  }
  const double value = kronrod_sum * half;
  return {a, b, value, std::fabs(value - gauss_sum * half)};
}

}  // namespace

double log_integral_from_2(double u, const EstimatorConfig& config) {
  if (!(config.relative_tolerance > 0.0) || !(config.relative_tolerance <= 1e-3)) {
    throw PreconditionError("quadrature tolerance must lie in (0, 1e-3]");
  }
  if (!std::isfinite(u) || !(u >= 2.0)) {
    throw PreconditionError("log_integral_from_2 needs u >= 2, got " + std::to_string(u));
  }
  if (u == 2.0) return 0.0;

  const double lo = std::log(2.0);
  const double hi = std::log(u);
  // Unit-length starting panels in t keep e^t's growth per panel bounded.
  const int initial = std::max(1, static_cast<int>(std::ceil(hi - lo)));
  std::priority_queue<Panel> panels;
  double total = 0.0;
  double error = 0.0;
  for (int i = 0; i < initial; ++i) {
    const double a = lo + (hi - lo) * i / initial;
    const double b = i + 1 == initial ? hi : lo + (hi - lo) * (i + 1) / initial;
    const Panel p = kronrod(a, b);
    total += p.value;
    error += p.error;
    panels.push(p);
  }

  constexpr int kMaxPanels = 100000;
  while (error > config.relative_tolerance * std::fabs(total) &&
         static_cast<int>(panels.size()) < kMaxPanels) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = kronrod(worst.a, mid);
    const Panel right = kronrod(mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum from the panels to shed accumulated update rounding.
  double sum = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    panels.pop();
  }
  return sum;
}

double kubilyus_estimate(const Sector& sector, double u, const EstimatorConfig& config) {
  return 2.0 / kPi * sector.width() * log_integral_from_2(u, config);
}

double pi3_estimate(double x) {
  if (!(x > 2.0) || !std::isfinite(x)) {
    throw PreconditionError("pi3_estimate needs x > 2, got " + std::to_string(x));
  }
  return x / (2.0 * std::log(x));
}

}  // namespace gaussq
