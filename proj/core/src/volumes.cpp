#include "aw/volumes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aw {

namespace {
constexpr double kPi = std::numbers::pi;

double index_norm(const WpqIndex& idx) {
  const double p = idx.p, q = idx.q;
  return std::sqrt(p * p + p * q + q * q);
}
}  // namespace

double orbit_length(const WpqIndex& idx) {
  return 2.0 * kPi / double(idx.gcd) * index_norm(idx);
}

double vol_su3(const MetricSpec& spec) {
  const double vol_k = std::sqrt(3.0) * std::pow(kPi, 5);
  auto is = [](double a, double b) { return std::abs(a - b) < 1e-15; };
  if (is(spec.coeff_t, 1.0) && is(spec.coeff_v1, 1.0) && is(spec.coeff_v2, 1.0)) {
    return vol_k;
  }
  if (is(spec.coeff_t, 1.0) && is(spec.coeff_v1, 0.5) && is(spec.coeff_v2, 1.0)) {
    // Scaling the 3-dim V1 block by 1/2 scales the density by (1/2)^{3/2}.
    return vol_k / (2.0 * std::sqrt(2.0));
  }
  throw std::invalid_argument("vol_su3: only the killing and wallach_w specs are supported");
}

VolumeBounds vol_wpq_bounds(const WpqIndex& idx) {
  const double common = std::sqrt(3.0) * std::pow(kPi, 4) * double(idx.gcd) / index_norm(idx);
  VolumeBounds b;
  b.lower = common / 32.0;
  b.upper = common / 2.0;
  b.exact = vol_su3(MetricSpec::wallach_w()) / orbit_length(idx);
  return b;
}

}  // namespace aw
