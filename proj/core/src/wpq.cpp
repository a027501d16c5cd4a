#include "aw/wpq.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace aw {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
}  // namespace

WpqIndex WpqIndex::make(int p, int q) {
  if (p == 0 && q == 0) {
    throw std::invalid_argument("WpqIndex: (p,q) must not be (0,0)");
  }
  WpqIndex idx;
  idx.p = p;
  idx.q = q;
  idx.gcd = std::gcd(std::abs(p), std::abs(q));
  return idx;
}

bool WpqIndex::positively_curvable() const {
  return p != 0 && q != 0 && p + q != 0;
}

Mat3 tangent_generator(const WpqIndex& idx) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = 2.0 * kPi * kI * double(idx.p);
  m(1, 1) = 2.0 * kPi * kI * double(idx.q);
  m(2, 2) = -2.0 * kPi * kI * double(idx.p + idx.q);
  return m;
}

ReductiveSplit build_split(const WpqIndex& idx) {
  ReductiveSplit split;
  const Mat3 gen = tangent_generator(idx);
  split.t = gen / knorm(gen);

  // V1: Gram-Schmidt of the u(2) block generators against t, fixed order.
  const std::array<int, 4> u_indices = {1, 2, 3, 8};
  std::vector<Mat3> v1;
  for (int k : u_indices) {
    Mat3 v = kI * gell_mann(k);
    v -= killing(v, split.t) * split.t;
    for (const Mat3& w : v1) v -= killing(v, w) * w;
    const double n = knorm(v);
    if (n > 1e-8) v1.push_back(v / n);
  }
  if (v1.size() != 3) {
    throw std::logic_error("build_split: V1 dimension is not 3");
  }
  for (int i = 0; i < 3; ++i) split.v1[i] = v1[i];

  for (int i = 0; i < 4; ++i) split.v2[i] = kI * gell_mann(4 + i);
  return split;
}

Mat3 project(const Mat3& X, const ReductiveSplit& split, Block block) {
  Mat3 out = Mat3::Zero();
  switch (block) {
    case Block::T:
      out = killing(X, split.t) * split.t;
      break;
    case Block::V1:
      for (const Mat3& v : split.v1) out += killing(X, v) * v;
      break;
    case Block::V2:
      for (const Mat3& v : split.v2) out += killing(X, v) * v;
      break;
  }
  return out;
}

double metric_eval(const MetricSpec& spec, const ReductiveSplit& split,
                   const Mat3& X, const Mat3& Y) {
  double s = 0.0;
  s += spec.coeff_t * killing(project(X, split, Block::T), project(Y, split, Block::T));
  s += spec.coeff_v1 * killing(project(X, split, Block::V1), project(Y, split, Block::V1));
  s += spec.coeff_v2 * killing(project(X, split, Block::V2), project(Y, split, Block::V2));
  return s;
}

ConditionIIReport check_condition_II(const ReductiveSplit& split,
                                     long sample_budget, std::uint64_t seed) {
  ConditionIIReport report;

  auto forbidden_u = [&](const Mat3& z) {
    // Component inside u = T + V1.
    return knorm(project(z, split, Block::T) + project(z, split, Block::V1));
  };
  auto forbidden_v2 = [&](const Mat3& z) {
    return knorm(project(z, split, Block::V2));
  };

  for (const Mat3& x : split.v1) {
    for (const Mat3& y : split.v2) {
      report.residual_item1 =
          std::max(report.residual_item1, forbidden_u(bracket(x, y)));
    }
  }
  for (const Mat3& x : split.v1) {
    for (const Mat3& y : split.v1) {
      report.residual_item2 =
          std::max(report.residual_item2, forbidden_v2(bracket(x, y)));
    }
  }
  for (const Mat3& x : split.v2) {
    for (const Mat3& y : split.v2) {
      report.residual_item3 =
          std::max(report.residual_item3, forbidden_v2(bracket(x, y)));
    }
  }

  // Item 4: for random x in T-perp, compute the centralizer of x inside
  // T-perp and look for a commuting partner y with [x1,y1] = 0. This is a
  // falsification search, not a proof.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Mat3, 7> frame;
  for (int i = 0; i < 3; ++i) frame[i] = split.v1[i];
  for (int i = 0; i < 4; ++i) frame[3 + i] = split.v2[i];
  const GeneratorBasis gm = gell_mann_basis();

  for (long s = 0; s < sample_budget; ++s) {
    Eigen::Matrix<double, 7, 1> coeffs;
    for (int i = 0; i < 7; ++i) coeffs(i) = gauss(rng);
    coeffs.normalize();
    Mat3 x = Mat3::Zero();
    for (int i = 0; i < 7; ++i) x += coeffs(i) * frame[i];

    // ad_x as a real 8x7 matrix from T-perp coordinates to su(3) coordinates.
    Eigen::Matrix<double, 8, 7> adx;
    for (int j = 0; j < 7; ++j) {
      const Mat3 b = bracket(x, frame[j]);
      for (int a = 0; a < 8; ++a) adx(a, j) = killing(b, gm.generators[a]);
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 8, 7>> svd(
        adx, Eigen::ComputeFullV);
    const double smax = svd.singularValues()(0);
    for (int j = 0; j < 7; ++j) {
      if (svd.singularValues()(j) > 1e-8 * std::max(smax, 1.0)) continue;
      Eigen::Matrix<double, 7, 1> yc = svd.matrixV().col(j);
      yc -= yc.dot(coeffs) * coeffs;  // linear independence from x
      if (yc.norm() < 1e-6) continue;
      yc.normalize();
      Mat3 y = Mat3::Zero();
      for (int i = 0; i < 7; ++i) y += yc(i) * frame[i];
      const Mat3 x1 = project(x, split, Block::V1);
      const Mat3 y1 = project(y, split, Block::V1);
      if (knorm(bracket(x1, y1)) < 1e-8) ++report.item4_violations;
    }
    ++report.item4_samples;
  }
  return report;
}

}  // namespace aw
