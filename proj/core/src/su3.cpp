#include "aw/su3.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aw {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Mat2 pauli(int index) {
  Mat2 s = Mat2::Zero();
  switch (index) {
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, -kI, kI, 0;
      break;
    case 3:
      s << 1, 0, 0, -1;
      break;
    default:
      throw std::out_of_range("pauli: index must be in 1..3");
  }
  return s;
}

Mat3 gell_mann(int index) {
  Mat3 m = Mat3::Zero();
  const double r3 = 1.0 / std::sqrt(3.0);
  switch (index) {
    case 1:
      m(0, 1) = 1;
      m(1, 0) = 1;
      break;
    case 2:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 3:
      m(0, 0) = 1;
      m(1, 1) = -1;
      break;
    case 4:
      m(0, 2) = 1;
      m(2, 0) = 1;
      break;
    case 5:
      m(0, 2) = -kI;
      m(2, 0) = kI;
      break;
    case 6:
      m(1, 2) = 1;
      m(2, 1) = 1;
      break;
    case 7:
      m(1, 2) = -kI;
      m(2, 1) = kI;
      break;
    case 8:
      m(0, 0) = r3;
      m(1, 1) = r3;
      m(2, 2) = -2 * r3;
      break;
    default:
      throw std::out_of_range("gell_mann: index must be in 1..8");
  }
  return m;
}

double algebra_residual(const Mat3& X) {
  const double herm = (X + X.adjoint()).cwiseAbs().maxCoeff();
  const double tr = std::abs(X.trace());
  return std::max(herm, tr);
}

double group_residual(const Mat3& g) {
  const double unit = (g * g.adjoint() - Mat3::Identity()).cwiseAbs().maxCoeff();
  const double det = std::abs(g.determinant() - Complex{1.0, 0.0});
  return std::max(unit, det);
}

bool is_algebra_element(const Mat3& X, double tol) {
  return algebra_residual(X) < tol;
}

bool is_group_element(const Mat3& g, double tol) {
  return group_residual(g) < tol;
}

Mat3 bracket(const Mat3& X, const Mat3& Y) { return X * Y - Y * X; }

double killing(const Mat3& X, const Mat3& Y) {
  return 0.5 * (X * Y.adjoint()).trace().real();
}

double knorm(const Mat3& X) { return std::sqrt(killing(X, X)); }

Mat3 exponential(const Mat3& X) {
  // X anti-Hermitian, so H = -iX is Hermitian and exp(X) = V exp(i diag) V*.
  const Mat3 H = -kI * X;
  Eigen::SelfAdjointEigenSolver<Mat3> es(H);
  Eigen::Vector3cd phases;
  for (int j = 0; j < 3; ++j) {
    phases(j) = std::exp(kI * es.eigenvalues()(j));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

GeneratorBasis gell_mann_basis() {
  GeneratorBasis b;
  for (int k = 0; k < 8; ++k) b.generators[k] = kI * gell_mann(k + 1);
  for (int k = 0; k < 3; ++k) b.pauli[k] = pauli(k + 1);
  return b;
}

StructureConstants structure_constants(const GeneratorBasis& basis) {
  double gram_dev = 0.0;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const double g = killing(basis.generators[a], basis.generators[b]);
      gram_dev = std::max(gram_dev, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  }
  if (gram_dev > kDefaultTol) {
    std::ostringstream os;
    os << "structure_constants: basis not k-orthonormal, max Gram deviation "
       << gram_dev;
    throw std::invalid_argument(os.str());
  }
  StructureConstants c{};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const Mat3 br = bracket(basis.generators[a], basis.generators[b]);
      for (int e = 0; e < 8; ++e) {
        c[a][b][e] = killing(br, basis.generators[e]);
      }
    }
  }
  return c;
}

}  // namespace aw
