#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "aw/injectivity.hpp"

using namespace aw;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("s_delta branches") {
  CHECK(s_delta(1.0, 0.7) == doctest::Approx(std::sin(0.7)).epsilon(1e-15));
  CHECK(s_delta(4.0, 0.7) ==
        doctest::Approx(std::sin(1.4) / 2.0).epsilon(1e-15));
  CHECK(s_delta(0.0, 0.7) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(s_delta(-1.0, 0.7) == doctest::Approx(std::sinh(0.7)).epsilon(1e-15));
  // Continuity across delta = 0.
  CHECK(s_delta(1e-12, 0.7) == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(s_delta(-1e-12, 0.7) == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("unit sphere volumes") {
  CHECK_THROWS_AS(vol_sphere(0), std::invalid_argument);
  CHECK(vol_sphere(1) == doctest::Approx(2 * kPi).epsilon(1e-14));
  CHECK(vol_sphere(2) == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(vol_sphere(3) == doctest::Approx(2 * kPi * kPi).epsilon(1e-14));
  CHECK(vol_sphere(6) ==
        doctest::Approx(16.0 / 15.0 * std::pow(kPi, 3)).epsilon(1e-14));
  CHECK(vol_sphere(7) == doctest::Approx(std::pow(kPi, 4) / 3.0).epsilon(1e-14));
}

TEST_CASE("cheeger_lower: validation, branches, sphere sanity") {
  const CurvatureInterval pinched{1.0, 1.0};
  CHECK_THROWS_AS(cheeger_lower(-1.0, pinched, 7), std::invalid_argument);
  CHECK_THROWS_AS(cheeger_lower(1.0, CurvatureInterval{0.0, 1.0}, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(cheeger_lower(1.0, pinched, 1), std::invalid_argument);

  // Round sphere with its exact volume: the conjugate-point branch binds and
  // gives pi.
  BindingBranch branch = BindingBranch::VolumeBranch;
  const double inj = cheeger_lower(vol_sphere(7), pinched, 7, kPi, &branch);
  CHECK(inj == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(branch == BindingBranch::ConjugatePoint);

  // Tiny volume forces the volume branch.
  const double small = cheeger_lower(1e-6, pinched, 7, std::nullopt, &branch);
  CHECK(branch == BindingBranch::VolumeBranch);
  CHECK(small == doctest::Approx(kPi * 1e-6 / vol_sphere(7)).epsilon(1e-12));
}

TEST_CASE("berger_upper: validation and sphere sanity") {
  CHECK_THROWS_AS(berger_upper(0.0, 7), std::invalid_argument);
  CHECK(berger_upper(vol_sphere(7), 7) == doctest::Approx(kPi).epsilon(1e-13));
}

TEST_CASE("W(1,1) bounds from the published curvature constants") {
  CHECK_THROWS_AS(bounds_wpq(WpqIndex::make(1, 0), CurvatureSource::Pinching),
                  std::domain_error);

  const InjectivityBounds ib =
      bounds_wpq(WpqIndex::make(1, 1), CurvatureSource::HuangConstants);
  CHECK(ib.lower ==
        doctest::Approx(3 * kPi / (4.0 * 37 * 37 * 37)).epsilon(1e-12));
  CHECK(ib.upper ==
        doctest::Approx(kPi * std::pow(1.5, 1.0 / 7.0)).epsilon(1e-12));
  CHECK(ib.binding_branch == BindingBranch::VolumeBranch);

  // The pinching-derived interval gives the same numbers for W(1,1) since
  // the closed forms are exact there.
  const InjectivityBounds ip =
      bounds_wpq(WpqIndex::make(1, 1), CurvatureSource::Pinching);
  CHECK(ip.lower == doctest::Approx(ib.lower).epsilon(1e-10));
  CHECK(ip.upper == doctest::Approx(ib.upper).epsilon(1e-10));
}

TEST_CASE("bounds are ordered across the family") {
  for (long n = 1; n <= 20; ++n) {
    const InjectivityBounds b =
        bounds_wpq(WpqIndex::make(int(n), int(n + 1)), CurvatureSource::Pinching);
    CHECK(b.lower > 0.0);
    CHECK(b.lower < b.upper);
  }
}

TEST_CASE("oracle-sourced interval is consistent with pinching for W(1,2)") {
  const InjectivityBounds a =
      bounds_wpq(WpqIndex::make(1, 2), CurvatureSource::Pinching);
  const InjectivityBounds b =
      bounds_wpq(WpqIndex::make(1, 2), CurvatureSource::Oracle, 2000, 7);
  CHECK(a.upper == doctest::Approx(b.upper).epsilon(1e-9));
  CHECK(a.lower == doctest::Approx(b.lower).epsilon(1e-2));
}
