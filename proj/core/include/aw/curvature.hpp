#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aw/wpq.hpp"

namespace aw {

/// Pair of ktilde-orthonormal horizontal vectors spanning a 2-plane.
struct TwoPlane {
  Mat3 X;
  Mat3 Y;
};

/// Dense Riemann tensor components over an orthonormal frame,
/// Rm(X,Y,Z,W) = g(R(X,Y)Z, W) with the Koszul-convention curvature
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
class CurvatureTable {
 public:
  explicit CurvatureTable(int dim);

  int dim() const { return dim_; }
  double& at(int a, int b, int c, int d) {
    return m_[((a * dim_ + b) * dim_ + c) * dim_ + d];
  }
  double at(int a, int b, int c, int d) const {
    return m_[((a * dim_ + b) * dim_ + c) * dim_ + d];
  }

  /// Unnormalized biquadratic Rm(X,Y,Y,X) in frame coordinates.
  double biquadratic(std::span<const double> x, std::span<const double> y) const;

  /// Sectional curvature of the plane of two orthonormal coordinate vectors.
  double sectional(std::span<const double> x, std::span<const double> y) const;

  struct SymmetryResiduals {
    double antisym_first = 0.0;
    double antisym_second = 0.0;
    double pair_symmetry = 0.0;
    double first_bianchi = 0.0;
  };
  SymmetryResiduals symmetry_residuals() const;

 private:
  int dim_;
  std::vector<double> m_;
};

/// The w-orthonormal adapted frame {t/sqrt(ct), v1/sqrt(c1), v2/sqrt(c2)}.
std::array<Mat3, 8> group_frame(const MetricSpec& spec, const ReductiveSplit& split);

/// The ktilde-orthonormal frame of T-perp: {sqrt2 v1, v2}.
std::array<Mat3, 7> base_frame(const ReductiveSplit& split);

/// Left-invariant-metric curvature of SU(3) from the Koszul connection
/// coefficients on the w-orthonormal frame.
CurvatureTable group_curvature(const MetricSpec& spec, const ReductiveSplit& split);

/// Sectional curvature of W(p,q) on a horizontal plane: group curvature in
/// the metric w plus the submersion correction (3/4)|[X,Y]_T|_w^2.
/// Throws std::invalid_argument for a degenerate plane and std::domain_error
/// for non-positively-curvable indices.
double sectional_wpq(const WpqIndex& idx, const TwoPlane& plane);

/// Base-space curvature tensor on the ktilde-orthonormal 7-frame, recovered
/// from the submersion biquadratic by exact polarization.
CurvatureTable base_curvature(const WpqIndex& idx);

/// Curvature operator on the 21 coordinate bivectors e_a ^ e_b (a < b) of
/// the 7-frame, eigenvalues sorted ascending.
struct OperatorSpectrum {
  Eigen::MatrixXd op;
  Eigen::VectorXd eigenvalues;
};
OperatorSpectrum base_curvature_operator(const WpqIndex& idx);

struct ExtremizeResult {
  double k_min = 0.0;
  double k_max = 0.0;
  Eigen::Matrix<double, 7, 2> argmin_plane;  // base_frame coordinates
  Eigen::Matrix<double, 7, 2> argmax_plane;
  /// Dispersion of the refined optima across restarts.
  double spread_min = 0.0;
  double spread_max = 0.0;
  bool converged = true;
};

/// Multi-start extremization of the sectional curvature over 2-planes.
/// Deterministic for a fixed seed; budget counts random starting planes.
ExtremizeResult extremize_sectional(const WpqIndex& idx, long budget,
                                    std::uint64_t seed);

}  // namespace aw
