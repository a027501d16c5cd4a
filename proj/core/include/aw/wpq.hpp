#pragma once

#include <array>
#include <cstdint>

#include "aw/su3.hpp"

namespace aw {

/// Index pair of an Aloff-Wallach space W(p,q) = SU(3)/T(p,q).
struct WpqIndex {
  int p = 0;
  int q = 0;
  int gcd = 1;

  /// Throws std::invalid_argument on (0,0).
  static WpqIndex make(int p, int q);

  /// True when none of p, q, p+q vanishes; only these spaces carry the
  /// positively curved metric, and only they are accepted by the curvature
  /// and pinching operations.
  bool positively_curvable() const;
};

/// 2*pi*i*diag(p, q, -(p+q)), the tangent generator of the circle T(p,q).
Mat3 tangent_generator(const WpqIndex& idx);

/// k-orthonormal adapted frame of su(3) = T + V1 + V2 with
/// V1 = T-perp intersect u, V2 = u-perp.
struct ReductiveSplit {
  Mat3 t;
  std::array<Mat3, 3> v1;
  std::array<Mat3, 4> v2;
};

/// Deterministic construction: normalized T generator, then Gram-Schmidt of
/// {i l1, i l2, i l3, i l8} against it for V1, then the fixed off-block
/// basis {i l4, i l5, i l6, i l7} for V2.
ReductiveSplit build_split(const WpqIndex& idx);

enum class Block { T, V1, V2 };

/// k-orthogonal projection of X onto the requested block.
Mat3 project(const Mat3& X, const ReductiveSplit& split, Block block);

/// Per-block scale coefficients selecting among the Killing metric k,
/// the total-space metric w and the base metric ktilde.
struct MetricSpec {
  double coeff_t = 1.0;
  double coeff_v1 = 1.0;
  double coeff_v2 = 1.0;

  static MetricSpec killing() { return {1.0, 1.0, 1.0}; }
  static MetricSpec wallach_w() { return {1.0, 0.5, 1.0}; }
  /// Same coefficients as w; coeff_t is unused for base-space computations.
  static MetricSpec base_ktilde() { return {1.0, 0.5, 1.0}; }
};

double metric_eval(const MetricSpec& spec, const ReductiveSplit& split,
                   const Mat3& X, const Mat3& Y);

/// Residuals of the bracket inclusions [V1,V2] in V2, [V1,V1] in T+V1,
/// [V2,V2] in T+V1 (items 1-3, checked on all basis pairs) and a randomized
/// counterexample search for item 4.
struct ConditionIIReport {
  double residual_item1 = 0.0;
  double residual_item2 = 0.0;
  double residual_item3 = 0.0;
  long item4_samples = 0;
  long item4_violations = 0;
};

ConditionIIReport check_condition_II(const ReductiveSplit& split,
                                     long sample_budget, std::uint64_t seed);

}  // namespace aw
