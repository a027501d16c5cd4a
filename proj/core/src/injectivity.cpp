#include "aw/injectivity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aw/curvature.hpp"
#include "aw/pinching.hpp"

namespace aw {

namespace {
constexpr double kPi = std::numbers::pi;
}

double s_delta(double delta, double t) {
  if (delta > 0.0) {
    const double r = std::sqrt(delta);
    return std::sin(r * t) / r;
  }
  if (delta < 0.0) {
    const double r = std::sqrt(-delta);
    return std::sinh(r * t) / r;
  }
  return t;
}

double vol_sphere(int m) {
  if (m < 1) throw std::invalid_argument("vol_sphere: m must be >= 1");
  // Gamma((m+1)/2) by recursion from Gamma(1/2) = sqrt(pi) or Gamma(1) = 1.
  double g;
  double x;
  if (m % 2 == 0) {
    g = std::sqrt(kPi);
    x = 0.5;
  } else {
    g = 1.0;
    x = 1.0;
  }
  while (x < (m + 1) / 2.0 - 0.25) {
    g *= x;
    x += 1.0;
  }
  return 2.0 * std::pow(kPi, (m + 1) / 2.0) / g;
}

double cheeger_lower(double vol_lower, const CurvatureInterval& interval,
                     int dim, std::optional<double> diameter,
                     BindingBranch* branch) {
  if (vol_lower <= 0.0) {
    throw std::invalid_argument("cheeger_lower: volume bound must be positive");
  }
  if (interval.delta <= 0.0) {
    throw std::invalid_argument("cheeger_lower: delta must be positive");
  }
  if (dim < 2) throw std::invalid_argument("cheeger_lower: dim must be >= 2");

  const double conj = kPi / std::sqrt(interval.Delta);
  double vol_branch;
  if (diameter) {
    const double arg = std::min(*diameter, kPi / (2.0 * std::sqrt(interval.delta)));
    vol_branch = kPi * vol_lower / vol_sphere(dim) *
                 std::pow(s_delta(interval.delta, arg), 1.0 - dim);
  } else {
    vol_branch = kPi * vol_lower / vol_sphere(dim) *
                 std::pow(interval.delta, (dim - 1) / 2.0);
  }
  if (branch) {
    *branch = conj <= vol_branch ? BindingBranch::ConjugatePoint
                                 : BindingBranch::VolumeBranch;
  }
  return std::min(conj, vol_branch);
}

double berger_upper(double vol_upper, int dim) {
  if (vol_upper <= 0.0) {
    throw std::invalid_argument("berger_upper: volume bound must be positive");
  }
  return kPi * std::pow(vol_upper / vol_sphere(dim), 1.0 / dim);
}

InjectivityBounds bounds_wpq(const WpqIndex& idx, CurvatureSource source,
                             long oracle_budget, std::uint64_t seed) {
  if (!idx.positively_curvable()) {
    throw std::domain_error("bounds_wpq: index is degenerate");
  }
  CurvatureInterval interval;
  switch (source) {
    case CurvatureSource::Pinching: {
      const PinchResult pr = pinch(idx, oracle_budget, seed);
      interval = {pr.k_min, pr.k_max};
      break;
    }
    case CurvatureSource::Oracle: {
      const ExtremizeResult er = extremize_sectional(idx, oracle_budget, seed);
      interval = {er.k_min, er.k_max};
      break;
    }
    case CurvatureSource::HuangConstants:
      interval = {2.0 / 37.0, 29.0 / 8.0};
      break;
  }
  if (!(interval.delta > 0.0) || std::isnan(interval.Delta)) {
    throw std::runtime_error("bounds_wpq: curvature source unavailable");
  }
  const VolumeBounds vb = vol_wpq_bounds(idx);
  InjectivityBounds out;
  out.lower = cheeger_lower(vb.lower, interval, 7, std::nullopt,
                            &out.binding_branch);
  out.upper = berger_upper(vb.upper, 7);
  return out;
}

}  // namespace aw
