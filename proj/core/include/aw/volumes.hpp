#pragma once

#include <optional>

#include "aw/wpq.hpp"

namespace aw {

struct VolumeBounds {
  double lower = 0.0;
  double upper = 0.0;
  /// Submersion-quotient volume Vol(SU(3),w)/Vol(T(p,q)); always inside
  /// [lower, upper].
  std::optional<double> exact;
};

/// Circle length 2*pi/gcd(p,q) * sqrt(p^2+q^2+pq).
double orbit_length(const WpqIndex& idx);

/// Vol(SU(3)) in the Killing metric (sqrt3 pi^5) or the Wallach metric
/// (sqrt3 pi^5 / (2 sqrt2), via the constant density ratio). Throws
/// std::invalid_argument for other specs.
double vol_su3(const MetricSpec& spec);

VolumeBounds vol_wpq_bounds(const WpqIndex& idx);

}  // namespace aw
