#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "aw/wpq.hpp"

using namespace aw;

namespace {
constexpr double kPi = std::numbers::pi;

std::array<Mat3, 8> flat_frame(const ReductiveSplit& s) {
  return {s.t,     s.v1[0], s.v1[1], s.v1[2],
          s.v2[0], s.v2[1], s.v2[2], s.v2[3]};
}
}  // namespace

TEST_CASE("index validation and gcd") {
  CHECK_THROWS_AS(WpqIndex::make(0, 0), std::invalid_argument);
  CHECK(WpqIndex::make(2, 4).gcd == 2);
  CHECK(WpqIndex::make(-6, 4).gcd == 2);
  CHECK(WpqIndex::make(1, 0).gcd == 1);

  CHECK(WpqIndex::make(1, 1).positively_curvable());
  CHECK(WpqIndex::make(2, 3).positively_curvable());
  CHECK(!WpqIndex::make(1, 0).positively_curvable());
  CHECK(!WpqIndex::make(0, 5).positively_curvable());
  CHECK(!WpqIndex::make(3, -3).positively_curvable());
}

TEST_CASE("tangent generator and its k-norm") {
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {3, 5}, {-2, 7}}) {
    const WpqIndex idx = WpqIndex::make(p, q);
    const Mat3 x = tangent_generator(idx);
    CHECK(std::abs(x(0, 0) - Complex(0, 2 * kPi * p)) < 1e-12);
    CHECK(std::abs(x(1, 1) - Complex(0, 2 * kPi * q)) < 1e-12);
    CHECK(std::abs(x(2, 2) - Complex(0, -2 * kPi * (p + q))) < 1e-12);
    CHECK(is_algebra_element(x, 1e-9));
    const double d = double(p) * p + double(p) * q + double(q) * q;
    CHECK(knorm(x) == doctest::Approx(2 * kPi * std::sqrt(d)).epsilon(1e-13));
  }
}

TEST_CASE("reductive split is a k-orthonormal adapted frame") {
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 3}, {5, 7}}) {
    const WpqIndex idx = WpqIndex::make(p, q);
    const ReductiveSplit split = build_split(idx);
    const auto f = flat_frame(split);
    for (int a = 0; a < 8; ++a) {
      CHECK(is_algebra_element(f[a], 1e-9));
      for (int b = 0; b < 8; ++b) {
        CHECK(std::abs(killing(f[a], f[b]) - (a == b ? 1.0 : 0.0)) < 1e-12);
      }
    }
    // t spans the circle direction.
    const Mat3 gen = tangent_generator(idx);
    CHECK((gen - killing(gen, split.t) * split.t).cwiseAbs().maxCoeff() <
          1e-9);
    // V2 is the fixed off-block span {i l4..i l7}.
    for (const Mat3& v : split.v2) {
      CHECK(std::abs(v(0, 1)) < 1e-14);
      CHECK(std::abs(v(0, 0)) < 1e-14);
      CHECK(std::abs(v(1, 1)) < 1e-14);
      CHECK(std::abs(v(2, 2)) < 1e-14);
    }
    // V1 sits inside u = span{i l1, i l2, i l3, i l8}: off-block entries zero.
    for (const Mat3& v : split.v1) {
      CHECK(std::abs(v(0, 2)) < 1e-12);
      CHECK(std::abs(v(1, 2)) < 1e-12);
    }
  }
}

TEST_CASE("projections decompose the identity") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  const ReductiveSplit split = build_split(WpqIndex::make(2, 3));
  const GeneratorBasis basis = gell_mann_basis();
  for (int i = 0; i < 20; ++i) {
    Mat3 x = Mat3::Zero();
    for (int k = 0; k < 8; ++k) x += g(rng) * basis.generators[k];
    const Mat3 pt = project(x, split, Block::T);
    const Mat3 p1 = project(x, split, Block::V1);
    const Mat3 p2 = project(x, split, Block::V2);
    CHECK((pt + p1 + p2 - x).cwiseAbs().maxCoeff() < 1e-11);
    CHECK((project(pt, split, Block::T) - pt).cwiseAbs().maxCoeff() < 1e-11);
    CHECK(project(pt, split, Block::V1).cwiseAbs().maxCoeff() < 1e-11);
    CHECK(std::abs(killing(p1, p2)) < 1e-11);
  }
}

TEST_CASE("metric_eval applies per-block coefficients") {
  const ReductiveSplit split = build_split(WpqIndex::make(1, 2));
  const MetricSpec w = MetricSpec::wallach_w();
  CHECK(metric_eval(w, split, split.t, split.t) == doctest::Approx(1.0));
  CHECK(metric_eval(w, split, split.v1[1], split.v1[1]) ==
        doctest::Approx(0.5));
  CHECK(metric_eval(w, split, split.v2[2], split.v2[2]) ==
        doctest::Approx(1.0));
  CHECK(std::abs(metric_eval(w, split, split.v1[0], split.v2[0])) < 1e-12);
  const MetricSpec k = MetricSpec::killing();
  CHECK(metric_eval(k, split, split.v1[1], split.v1[1]) ==
        doctest::Approx(1.0));
}

TEST_CASE("condition II holds for positively curvable indices") {
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 3}, {3, 5}}) {
    const ReductiveSplit split = build_split(WpqIndex::make(p, q));
    const ConditionIIReport rep = check_condition_II(split, 20000, 42);
    CAPTURE(p);
    CAPTURE(q);
    CHECK(rep.residual_item1 < 1e-12);
    CHECK(rep.residual_item2 < 1e-12);
    CHECK(rep.residual_item3 < 1e-12);
    CHECK(rep.item4_samples >= 20000);
    CHECK(rep.item4_violations == 0);
  }
}
