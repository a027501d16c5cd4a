#pragma once

#include <cstdint>
#include <optional>

#include "aw/volumes.hpp"

namespace aw {

/// Two-sided sectional curvature bound K(M) in [delta, Delta].
struct CurvatureInterval {
  double delta = 0.0;
  double Delta = 0.0;
};

/// Solution of f'' + delta f = 0 with f(0) = 0, f'(0) = 1.
double s_delta(double delta, double t);

/// Vol(S^m) = 2 pi^{(m+1)/2} / Gamma((m+1)/2), via the exact half-integer
/// Gamma recursion.
double vol_sphere(int m);

enum class BindingBranch { ConjugatePoint, VolumeBranch };

/// Cheeger-type lower bound
/// min{pi/sqrt(Delta), pi Vol/Vol(S^n) delta^{(n-1)/2}}; with a diameter
/// upper bound present, the sharper s_delta form is used instead.
double cheeger_lower(double vol_lower, const CurvatureInterval& interval,
                     int dim, std::optional<double> diameter = std::nullopt,
                     BindingBranch* branch = nullptr);

/// Berger isoembolic bound inverted: pi (vol_upper / Vol(S^dim))^{1/dim}.
double berger_upper(double vol_upper, int dim);

enum class CurvatureSource { Pinching, Oracle, HuangConstants };

struct InjectivityBounds {
  double lower = 0.0;
  double upper = 0.0;
  BindingBranch binding_branch = BindingBranch::VolumeBranch;
};

/// Injectivity radius bounds for W(p,q): Cheeger lower bound from the
/// Theorem-1 volume lower bound plus a curvature interval, Berger upper
/// bound from the volume upper bound. Dimension is 7.
InjectivityBounds bounds_wpq(const WpqIndex& idx, CurvatureSource source,
                             long oracle_budget = 2000,
                             std::uint64_t seed = 1);

}  // namespace aw
