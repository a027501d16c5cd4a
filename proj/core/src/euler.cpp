#include "aw/euler.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace aw {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

// e^{(i/2) x l3} = diag(e^{ix/2}, e^{-ix/2}, 1)
Mat3 factor_l3(double x) {
  Mat3 m = Mat3::Identity();
  m(0, 0) = std::exp(kI * (x / 2));
  m(1, 1) = std::exp(-kI * (x / 2));
  return m;
}

// e^{(i/2) y l2}: rotation by y/2 in the 1-2 plane.
Mat3 factor_l2(double y) {
  Mat3 m = Mat3::Identity();
  const double c = std::cos(y / 2), s = std::sin(y / 2);
  m(0, 0) = c;
  m(0, 1) = s;
  m(1, 0) = -s;
  m(1, 1) = c;
  return m;
}

// e^{(i/2) xi l5}: rotation by xi/2 in the 1-3 plane.
Mat3 factor_l5(double xi) {
  Mat3 m = Mat3::Identity();
  const double c = std::cos(xi / 2), s = std::sin(xi / 2);
  m(0, 0) = c;
  m(0, 2) = s;
  m(2, 0) = -s;
  m(2, 2) = c;
  return m;
}

// e^{(i sqrt3/2) tau l8} = diag(e^{i tau/2}, e^{i tau/2}, e^{-i tau})
Mat3 factor_l8(double tau) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = std::exp(kI * (tau / 2));
  m(1, 1) = std::exp(kI * (tau / 2));
  m(2, 2) = std::exp(-kI * tau);
  return m;
}

std::array<Mat3, 8> chart_factors(const EulerAnglesSU3& an) {
  return {factor_l3(an.phi),  factor_l2(an.theta), factor_l3(an.psi),
          factor_l5(an.xi),   factor_l3(an.alpha), factor_l2(an.beta),
          factor_l3(an.gamma), factor_l8(an.tau)};
}

std::array<Mat3, 8> chart_generators() {
  std::array<Mat3, 8> gen;
  const Mat3 l2 = gell_mann(2), l3 = gell_mann(3);
  gen[0] = kI * 0.5 * l3;
  gen[1] = kI * 0.5 * l2;
  gen[2] = kI * 0.5 * l3;
  gen[3] = kI * 0.5 * gell_mann(5);
  gen[4] = kI * 0.5 * l3;
  gen[5] = kI * 0.5 * l2;
  gen[6] = kI * 0.5 * l3;
  gen[7] = kI * (std::sqrt(3.0) / 2.0) * gell_mann(8);
  return gen;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Mat2 su2_point(const EulerAnglesSU2& an) {
  Mat2 m;
  const double c = std::cos(an.theta / 2), s = std::sin(an.theta / 2);
  const Complex ep = std::exp(kI * ((an.phi + an.psi) / 2));
  const Complex em = std::exp(kI * ((an.phi - an.psi) / 2));
  m(0, 0) = ep * c;
  m(0, 1) = em * s;
  m(1, 0) = -std::conj(em) * s;
  m(1, 1) = std::conj(ep) * c;
  return m;
}

EulerAnglesSU2 su2_angles_from_point(Complex a, Complex b) {
  const double n = std::norm(a) + std::norm(b);
  if (std::abs(n - 1.0) > 1e-8) {
    throw std::invalid_argument("su2_angles_from_point: |a|^2+|b|^2 != 1");
  }
  auto arg2pi = [](Complex z) {
    if (std::abs(z) == 0.0) return 0.0;
    double t = std::arg(z);
    if (t < 0) t += 2 * kPi;
    return t;
  };
  const double alpha = arg2pi(a);
  const double beta = arg2pi(b);
  EulerAnglesSU2 an;
  an.theta = 2.0 * std::acos(std::min(1.0, std::abs(a)));
  if (alpha >= beta) {
    an.phi = alpha + beta;
    an.psi = alpha - beta;
  } else if (alpha + beta >= 2 * kPi) {
    an.phi = alpha + beta - 2 * kPi;
    an.psi = alpha - beta + 2 * kPi;
  } else {
    an.phi = alpha + beta + 2 * kPi;
    an.psi = alpha - beta + 2 * kPi;
  }
  return an;
}

Mat3 su3_point(const EulerAnglesSU3& an) {
  const auto f = chart_factors(an);
  Mat3 g = f[0];
  for (int k = 1; k < 8; ++k) g = g * f[k];
  return g;
}

std::array<Mat3, 8> maurer_cartan_frame(const EulerAnglesSU3& an) {
  const auto f = chart_factors(an);
  static const std::array<Mat3, 8> gen = chart_generators();
  // g^{-1} dg/dx_k = Ad(R_k^{-1}) X_k with R_k the product of the factors to
  // the right of factor k.
  std::array<Mat3, 8> frame;
  Mat3 right = Mat3::Identity();
  for (int k = 7; k >= 0; --k) {
    frame[k] = right.adjoint() * gen[k] * right;
    right = f[k] * right;
  }
  return frame;
}

double volume_density(const EulerAnglesSU3& angles, const MetricSpec& spec,
                      const ReductiveSplit& split) {
  const auto frame = maurer_cartan_frame(angles);
  std::array<Mat3, 8> pt, p1, p2;
  for (int i = 0; i < 8; ++i) {
    pt[i] = project(frame[i], split, Block::T);
    p1[i] = project(frame[i], split, Block::V1);
    p2[i] = project(frame[i], split, Block::V2);
  }
  Eigen::Matrix<double, 8, 8> gram;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double g = spec.coeff_t * killing(pt[i], pt[j]) +
                       spec.coeff_v1 * killing(p1[i], p1[j]) +
                       spec.coeff_v2 * killing(p2[i], p2[j]);
      gram(i, j) = g;
      gram(j, i) = g;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> es(gram);
  const double emax = es.eigenvalues().maxCoeff();
  double det = 1.0;
  for (int i = 0; i < 8; ++i) {
    const double e = es.eigenvalues()(i);
    if (e < -1e-12 * std::max(emax, 1.0)) {
      throw std::domain_error(
          "volume_density: Gram matrix not positive semi-definite "
          "(chart-degenerate point)");
    }
    det *= std::max(e, 0.0);
  }
  return std::sqrt(det);
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    nodes[i] = xm - xl * x;
    nodes[n - 1 - i] = xm + xl * x;
    weights[i] = 2.0 * xl / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

namespace {

// The Killing and Wallach densities depend only on (theta, xi, beta); the
// product-Gauss path asserts this numerically before exploiting it.
void assert_separable(const MetricSpec& spec, const ReductiveSplit& split) {
  std::mt19937_64 rng(0xA10FFu);
  std::uniform_real_distribution<double> u01(0.1, 0.9);
  for (int trial = 0; trial < 3; ++trial) {
    EulerAnglesSU3 an;
    an.theta = u01(rng) * kPi;
    an.xi = u01(rng) * kPi;
    an.beta = u01(rng) * kPi;
    const double ref = volume_density(an, spec, split);
    for (int k = 0; k < 4; ++k) {
      EulerAnglesSU3 b = an;
      b.phi = u01(rng) * 4 * kPi;
      b.psi = u01(rng) * 2 * kPi;
      b.alpha = u01(rng) * 4 * kPi;
      b.gamma = u01(rng) * 2 * kPi;
      b.tau = u01(rng) * 2 * kPi;
      const double v = volume_density(b, spec, split);
      if (std::abs(v - ref) > 1e-8 * std::max(std::abs(ref), 1e-30)) {
        throw std::runtime_error(
            "integrate_volume: density not separable for this metric spec; "
            "use the Monte-Carlo scheme");
      }
    }
  }
}

double gauss_pass(const MetricSpec& spec, const ReductiveSplit& split, int n) {
  std::vector<double> xs, ws;
  gauss_legendre(n, 0.0, kPi, xs, ws);
  // phi, psi, alpha, gamma, tau ranges: 4pi * 2pi * 4pi * 2pi * 2pi
  const double flat_measure = 128.0 * std::pow(kPi, 5);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, n);
  std::vector<double> partial(n, 0.0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < n; i += workers) {
        double s = 0.0;
        EulerAnglesSU3 an;
        an.theta = xs[i];
        for (int j = 0; j < n; ++j) {
          an.xi = xs[j];
          for (int k = 0; k < n; ++k) {
            an.beta = xs[k];
            s += ws[j] * ws[k] * volume_density(an, spec, split);
          }
        }
        partial[i] = ws[i] * s;
      }
    });
  }
  for (auto& t : pool) t.join();
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += partial[i];
  return flat_measure * total;
}

}  // namespace

IntegrationResult integrate_volume(const MetricSpec& spec,
                                   const ReductiveSplit& split,
                                   const QuadratureSpec& quad) {
  IntegrationResult res;
  if (quad.scheme == QuadratureSpec::Scheme::ProductGauss) {
    if (quad.nodes_per_axis < 2) {
      throw std::invalid_argument("integrate_volume: need >= 2 nodes/axis");
    }
    assert_separable(spec, split);
    res.value = gauss_pass(spec, split, quad.nodes_per_axis);
    const double coarse = gauss_pass(spec, split, quad.nodes_per_axis / 2);
    res.error_estimate = std::abs(res.value - coarse);
  } else {
    if (quad.samples < 1) {
      throw std::invalid_argument("integrate_volume: need >= 1 sample");
    }
    const double box = 128.0 * std::pow(kPi, 8);
    constexpr int kChunks = 64;
    std::array<double, kChunks> sums{}, sumsqs{};
    std::array<long, kChunks> counts{};
    for (int c = 0; c < kChunks; ++c) {
      counts[c] = quad.samples / kChunks + (c < quad.samples % kChunks ? 1 : 0);
    }
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, kChunks);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (int c = w; c < kChunks; c += workers) {
          std::mt19937_64 rng(splitmix64(quad.seed ^ (0x517cc1b7u + c)));
          std::uniform_real_distribution<double> u(0.0, 1.0);
          double s = 0.0, s2 = 0.0;
          for (long i = 0; i < counts[c]; ++i) {
            EulerAnglesSU3 an;
            an.phi = 4 * kPi * u(rng);
            an.theta = kPi * u(rng);
            an.psi = 2 * kPi * u(rng);
            an.xi = kPi * u(rng);
            an.alpha = 4 * kPi * u(rng);
            an.beta = kPi * u(rng);
            an.gamma = 2 * kPi * u(rng);
            an.tau = 2 * kPi * u(rng);
            const double d = volume_density(an, spec, split);
            s += d;
            s2 += d * d;
          }
          sums[c] = s;
          sumsqs[c] = s2;
        }
      });
    }
    for (auto& t : pool) t.join();
    double sum = 0.0, sumsq = 0.0;
    for (int c = 0; c < kChunks; ++c) {
      sum += sums[c];
      sumsq += sumsqs[c];
    }
    const double n = double(quad.samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sumsq / n - mean * mean);
    res.value = box * mean;
    res.error_estimate = box * std::sqrt(var / n);
  }
  if (quad.target_rel_error > 0.0 &&
      res.error_estimate > quad.target_rel_error * std::abs(res.value)) {
    std::ostringstream os;
    os << "integrate_volume: budget too small, achieved relative error "
       << res.error_estimate / std::abs(res.value) << " > target "
       << quad.target_rel_error;
    throw std::runtime_error(os.str());
  }
  return res;
}

}  // namespace aw
