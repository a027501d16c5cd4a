#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "aw/wpq.hpp"

namespace aw {

/// phi in [0,4pi), theta in [0,pi), psi in [0,2pi).
struct EulerAnglesSU2 {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;
};

/// beta, theta, xi in [0,pi); alpha, phi in [0,4pi); gamma, psi in [0,2pi);
/// tau in [0,2pi).
struct EulerAnglesSU3 {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;
  double xi = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double tau = 0.0;
};

/// s(phi,theta,psi) = e^{(i/2)phi s3} e^{(i/2)theta s2} e^{(i/2)psi s3}.
Mat2 su2_point(const EulerAnglesSU2& angles);

/// Inverse of su2_point outside the measure-zero chart boundary. Requires
/// |a|^2 + |b|^2 = 1 within tolerance.
EulerAnglesSU2 su2_angles_from_point(Complex a, Complex b);

/// g = s(phi,theta,psi) e^{(i/2) l5 xi} s(alpha,beta,gamma)
/// e^{(i sqrt3/2) l8 tau}
/// with the SU(2) factors acting in the upper-left block.
Mat3 su3_point(const EulerAnglesSU3& angles);

/// Left-invariant pullback g^{-1} dg of the eight coordinate vector fields,
/// by analytic per-factor differentiation. Order matches EulerAnglesSU3
/// field order.
std::array<Mat3, 8> maurer_cartan_frame(const EulerAnglesSU3& angles);

/// sqrt(det G) with G_ij = metric_eval(spec, split, frame_i, frame_j).
/// Throws std::domain_error at chart-degenerate points (Gram matrix not
/// positive definite beyond roundoff).
double volume_density(const EulerAnglesSU3& angles, const MetricSpec& spec,
                      const ReductiveSplit& split);

struct QuadratureSpec {
  enum class Scheme { ProductGauss, MonteCarlo };
  Scheme scheme = Scheme::ProductGauss;
  int nodes_per_axis = 32;    // ProductGauss
  long samples = 1000000;     // MonteCarlo
  std::uint64_t seed = 1;
  /// Optional: throw if the internal error estimate exceeds this (relative).
  double target_rel_error = 0.0;
};

struct IntegrationResult {
  double value = 0.0;
  /// MC standard error, or the Gauss half-resolution delta.
  double error_estimate = 0.0;
};

/// Integral of volume_density over the full coordinate box.
IntegrationResult integrate_volume(const MetricSpec& spec,
                                   const ReductiveSplit& split,
                                   const QuadratureSpec& quad);

/// Gauss-Legendre nodes/weights on (a,b).
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace aw
