#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "aw/euler.hpp"

using namespace aw;

namespace {
constexpr double kPi = std::numbers::pi;

EulerAnglesSU3 random_angles(std::mt19937_64& rng, double margin = 0.0) {
  std::uniform_real_distribution<double> u(margin, 1.0 - margin);
  EulerAnglesSU3 an;
  an.phi = 4 * kPi * u(rng);
  an.theta = kPi * u(rng);
  an.psi = 2 * kPi * u(rng);
  an.xi = kPi * u(rng);
  an.alpha = 4 * kPi * u(rng);
  an.beta = kPi * u(rng);
  an.gamma = 2 * kPi * u(rng);
  an.tau = 2 * kPi * u(rng);
  return an;
}
}  // namespace

TEST_CASE("su2_point is special unitary") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    EulerAnglesSU2 an{4 * kPi * u(rng), kPi * u(rng), 2 * kPi * u(rng)};
    const Mat2 m = su2_point(an);
    CHECK((m * m.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(m.determinant() - Complex(1.0)) < 1e-14);
  }
}

TEST_CASE("su2 chart inverts on interior points") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 500; ++i) {
    EulerAnglesSU2 an{4 * kPi * u(rng), kPi * u(rng), 2 * kPi * u(rng)};
    const Mat2 m = su2_point(an);
    const EulerAnglesSU2 back = su2_angles_from_point(m(0, 0), m(0, 1));
    CHECK(back.phi == doctest::Approx(an.phi).epsilon(1e-9));
    CHECK(back.theta == doctest::Approx(an.theta).epsilon(1e-9));
    CHECK(back.psi == doctest::Approx(an.psi).epsilon(1e-9));
    const Mat2 m2 = su2_point(back);
    CHECK((m - m2).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("su2_angles_from_point validates the unit-norm input") {
  CHECK_THROWS_AS(su2_angles_from_point(Complex(0.9), Complex(0.9)),
                  std::invalid_argument);
}

TEST_CASE("su3_point lands in SU(3), identity at the origin") {
  std::mt19937_64 rng(3);
  CHECK((su3_point(EulerAnglesSU3{}) - Mat3::Identity()).cwiseAbs().maxCoeff() <
        1e-14);
  for (int i = 0; i < 100; ++i) {
    CHECK(is_group_element(su3_point(random_angles(rng)), 1e-12));
  }
}

TEST_CASE("maurer_cartan_frame matches finite differences of the chart") {
  std::mt19937_64 rng(4);
  const double h = 1e-6;
  for (int i = 0; i < 20; ++i) {
    const EulerAnglesSU3 an = random_angles(rng, 0.05);
    const auto frame = maurer_cartan_frame(an);
    const Mat3 ginv = su3_point(an).adjoint();
    EulerAnglesSU3 pert = an;
    double* coords[8] = {&pert.phi, &pert.theta, &pert.psi, &pert.xi,
                         &pert.alpha, &pert.beta, &pert.gamma, &pert.tau};
    for (int k = 0; k < 8; ++k) {
      const double saved = *coords[k];
      *coords[k] = saved + h;
      const Mat3 plus = su3_point(pert);
      *coords[k] = saved - h;
      const Mat3 minus = su3_point(pert);
      *coords[k] = saved;
      const Mat3 fd = ginv * (plus - minus) / (2 * h);
      CAPTURE(k);
      CHECK((frame[k] - fd).cwiseAbs().maxCoeff() < 5e-9);
      CHECK(is_algebra_element(frame[k], 1e-9));
    }
  }
}

TEST_CASE("volume density matches the closed form in the Killing metric") {
  std::mt19937_64 rng(5);
  const ReductiveSplit split = build_split(WpqIndex::make(1, 1));
  for (int i = 0; i < 200; ++i) {
    const EulerAnglesSU3 an = random_angles(rng, 0.02);
    const double num = volume_density(an, MetricSpec::killing(), split);
    const double closed = std::sqrt(3.0) / 512.0 * std::sin(an.beta) *
                          std::sin(an.theta) * std::sin(an.xi) *
                          std::pow(std::sin(an.xi / 2), 2);
    CHECK(num == doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("volume density is split-independent") {
  std::mt19937_64 rng(6);
  const ReductiveSplit s11 = build_split(WpqIndex::make(1, 1));
  const ReductiveSplit s23 = build_split(WpqIndex::make(2, 3));
  for (int i = 0; i < 20; ++i) {
    const EulerAnglesSU3 an = random_angles(rng, 0.02);
    const double a = volume_density(an, MetricSpec::wallach_w(), s11);
    const double b = volume_density(an, MetricSpec::wallach_w(), s23);
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }
}

TEST_CASE("density vanishes toward the chart boundary") {
  const ReductiveSplit split = build_split(WpqIndex::make(1, 1));
  EulerAnglesSU3 an;
  an.phi = 1.0;
  an.psi = 1.0;
  an.alpha = 1.0;
  an.gamma = 1.0;
  an.tau = 1.0;
  an.theta = 1e-5;
  an.beta = 0.7;
  an.xi = 0.9;
  CHECK(volume_density(an, MetricSpec::killing(), split) < 1e-4);
}

TEST_CASE("Gauss and Monte Carlo integrators agree") {
  const ReductiveSplit split = build_split(WpqIndex::make(1, 2));

  QuadratureSpec gauss;
  gauss.nodes_per_axis = 16;
  const IntegrationResult vg =
      integrate_volume(MetricSpec::killing(), split, gauss);
  const double exact = std::sqrt(3.0) * std::pow(kPi, 5);
  CHECK(vg.value == doctest::Approx(exact).epsilon(1e-8));

  QuadratureSpec mc;
  mc.scheme = QuadratureSpec::Scheme::MonteCarlo;
  mc.samples = 400000;
  mc.seed = 9;
  const IntegrationResult vm =
      integrate_volume(MetricSpec::killing(), split, mc);
  CHECK(std::abs(vm.value - exact) < 5 * vm.error_estimate);
  CHECK(vm.error_estimate < 0.02 * exact);

  // Deterministic for a fixed seed.
  const IntegrationResult vm2 =
      integrate_volume(MetricSpec::killing(), split, mc);
  CHECK(vm.value == vm2.value);

  QuadratureSpec strict = mc;
  strict.target_rel_error = 1e-9;
  CHECK_THROWS_AS(integrate_volume(MetricSpec::killing(), split, strict),
                  std::runtime_error);
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(5, 0.0, 2.0, x, w);
  REQUIRE(x.size() == 5);
  for (int deg = 0; deg <= 9; ++deg) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], deg);
    CHECK(s == doctest::Approx(std::pow(2.0, deg + 1) / (deg + 1))
                   .epsilon(1e-12));
  }
}
