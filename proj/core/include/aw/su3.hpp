#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace aw {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;

/// Default tolerance for matrix invariant checks (two orders above
/// accumulated 3x3 rounding).
inline constexpr double kDefaultTol = 1e-10;

/// Pauli matrix sigma_k, k in 1..3.
Mat2 pauli(int index);

/// Gell-Mann matrix lambda_k, k in 1..8. Throws std::out_of_range otherwise.
Mat3 gell_mann(int index);

/// Residual of the anti-Hermitian + traceless invariants (max entry norm).
double algebra_residual(const Mat3& X);
/// Residual of unitarity and det = 1.
double group_residual(const Mat3& g);

bool is_algebra_element(const Mat3& X, double tol = kDefaultTol);
bool is_group_element(const Mat3& g, double tol = kDefaultTol);

/// Matrix commutator XY - YX.
Mat3 bracket(const Mat3& X, const Mat3& Y);

/// Bi-invariant inner product k(X,Y) = Re(Tr(X Y*))/2 on su(3).
double killing(const Mat3& X, const Mat3& Y);

/// k-norm sqrt(k(X,X)).
double knorm(const Mat3& X);

/// Matrix exponential of an anti-Hermitian X via eigendecomposition of -iX.
Mat3 exponential(const Mat3& X);

/// The i*lambda_k basis of su(3) together with the Pauli matrices.
/// The generators are k-orthonormal.
struct GeneratorBasis {
  std::array<Mat3, 8> generators;
  std::array<Mat2, 3> pauli;
};

GeneratorBasis gell_mann_basis();

using StructureConstants = std::array<std::array<std::array<double, 8>, 8>, 8>;

/// c[a][b][e] with [e_a,e_b] = sum_e c[a][b][e] e_e over a k-orthonormal
/// basis. Throws std::invalid_argument (reporting the max Gram deviation)
/// if the basis is not k-orthonormal.
StructureConstants structure_constants(const GeneratorBasis& basis);

}  // namespace aw
