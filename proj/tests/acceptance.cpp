/// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "aw/curvature.hpp"
#include "aw/euler.hpp"
#include "aw/injectivity.hpp"
#include "aw/pinching.hpp"
#include "aw/report.hpp"
#include "aw/volumes.hpp"

using namespace aw;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  (%s)\n", id, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

template <typename F>
void criterion(int id, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  // 1. Total volume of SU(3) in the Killing metric by quadrature.
  criterion(1, [] {
    const double t0 = now_s();
    QuadratureSpec quad;  // 32 nodes per axis
    const ReductiveSplit split = build_split(WpqIndex::make(1, 1));
    const double v = integrate_volume(MetricSpec::killing(), split, quad).value;
    const double exact = std::sqrt(3.0) * std::pow(kPi, 5);
    const double rel = std::abs(v - exact) / exact;
    const double dt = now_s() - t0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "rel err %.3g, %.1fs", rel, dt);
    report(1, rel < 1e-6 && dt < 30.0, buf);
  });

  // 2. Volume density against the closed form.
  criterion(2, [] {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.02, 0.98);
    const ReductiveSplit split = build_split(WpqIndex::make(1, 1));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      EulerAnglesSU3 an;
      an.phi = 4 * kPi * u(rng);
      an.theta = kPi * u(rng);
      an.psi = 2 * kPi * u(rng);
      an.xi = kPi * u(rng);
      an.alpha = 4 * kPi * u(rng);
      an.beta = kPi * u(rng);
      an.gamma = 2 * kPi * u(rng);
      an.tau = 2 * kPi * u(rng);
      const double num = volume_density(an, MetricSpec::killing(), split);
      const double closed = std::sqrt(3.0) / 512.0 * std::sin(an.beta) *
                            std::sin(an.theta) * std::sin(an.xi) *
                            std::pow(std::sin(an.xi / 2), 2);
      worst = std::max(worst, std::abs(num - closed) / closed);
    }
    report(2, worst < 1e-9, "max rel err " + std::to_string(worst));
  });

  // 3. Volume bounds sandwich the exact quotient volume with fixed ratios.
  criterion(3, [] {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> u(1, 50);
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
      const VolumeBounds vb = vol_wpq_bounds(WpqIndex::make(u(rng), u(rng)));
      const double ex = *vb.exact;
      ok = ok && vb.lower < ex && ex < vb.upper &&
           std::abs(ex / vb.lower - 4 * std::sqrt(2.0)) < 1e-11 &&
           std::abs(vb.upper / ex - 2 * std::sqrt(2.0)) < 1e-11;
    }
    report(3, ok, "100 random indices, ratios 4*sqrt2 and 2*sqrt2");
  });

  // 4. Extremization oracle recovers the sharp W(1,1) constants.
  criterion(4, [] {
    const double t0 = now_s();
    const ExtremizeResult er = extremize_sectional(WpqIndex::make(1, 1), 10000, 1);
    const double emin = std::abs(er.k_min - 2.0 / 37.0);
    const double emax = std::abs(er.k_max - 29.0 / 8.0);
    const double dt = now_s() - t0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "|dmin| %.2e, |dmax| %.2e, %.1fs", emin,
                  emax, dt);
    report(4, emin < 1e-3 && emax < 1e-3 && dt < 120.0, buf);
  });

  // 5. Family W(n,n+1), n = 1..5: oracle matches c(n), C(n).
  criterion(5, [] {
    bool ok = true;
    double worst = 0.0;
    for (long n = 1; n <= 5; ++n) {
      const ExtremizeResult er =
          extremize_sectional(WpqIndex::make(int(n), int(n + 1)), 6000, 1);
      const FamilyFormulas ff = family_formulas(n);
      worst = std::max({worst, std::abs(er.k_min - ff.c_n),
                        std::abs(er.k_max - ff.C_n)});
    }
    ok = worst < 1e-3;
    const FamilyFormulas f1 = family_formulas(1);
    ok = ok && f1.c_n > 1.0 / 25.0 && f1.c_n < 2.0 / 37.0 &&
         std::abs(f1.C_n - 215.0 / 56.0) < 1e-14;
    report(5, ok, "max oracle deviation " + std::to_string(worst));
  });

  // 6. Simplex quadratic: QP equals the closed form; reference values.
  criterion(6, [] {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> u(1, 50);
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const int p = u(rng), q = u(rng);
      const auto lb =
          lambda_bar(simplex_quadratic(coefficients(WpqIndex::make(p, q))));
      ok = ok && lb.conditions_hold;
      worst = std::max(worst, std::abs(lb.value - lb.closed_form));
      const auto sym =
          lambda_bar(simplex_quadratic(coefficients(WpqIndex::make(q, p))));
      ok = ok && std::abs(lb.value - sym.value) < 1e-12;
    }
    ok = ok && worst < 1e-12;
    const double v11 =
        lambda_bar(simplex_quadratic(coefficients(WpqIndex::make(1, 1)))).value;
    const double v12 = lambda_bar_tabulated(WpqIndex::make(1, 2)).to_double();
    ok = ok && std::abs(v11 - 2.0 / 37.0) < 1e-13 &&
         std::abs(v12 - 1757.0 / 28762.0) < 1e-13;
    report(6, ok, "max |QP - closed form| " + std::to_string(worst));
  });

  // 7. lambda_hat: dual methods agree; monotone below 2/37 along the family.
  criterion(7, [] {
    bool ok = true;
    double prev = -1.0;
    for (long n = 1; n <= 100; ++n) {
      const auto lh =
          lambda_hat(coefficients(WpqIndex::make(int(n), int(n + 1))));
      ok = ok && std::abs(lh.value - lh.enumerated) < 1e-10;
      ok = ok && lh.value > prev && lh.value < 2.0 / 37.0;
      prev = lh.value;
    }
    report(7, ok, "n = 1..100, final value " + std::to_string(prev));
  });

  // 8. Curvature operator is indefinite for W(1,1) and its eigenvalues
  //    sandwich the pinching constants.
  criterion(8, [] {
    bool ok = true;
    std::string detail;
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
      const WpqIndex idx = WpqIndex::make(p, q);
      const OperatorSpectrum os = base_curvature_operator(idx);
      const PinchResult pr = pinch(idx);
      const double lmin = os.eigenvalues.minCoeff();
      const double lmax = os.eigenvalues.maxCoeff();
      if (p == 1 && q == 1) {
        ok = ok && lmin < 0.0;
        detail = "lambda_min(W(1,1)) = " + std::to_string(lmin);
      }
      ok = ok && lmin <= pr.k_min + 1e-9 && pr.k_max <= lmax + 1e-9;
    }
    report(8, ok, detail);
  });

  // 9. K_max gates certified in exact arithmetic; strict decrease to 29/8.
  criterion(9, [] {
    bool ok = true;
    double prev = 1e9;
    for (long n = 1; n <= 100; ++n) {
      const KmaxResult km =
          k_max(coefficients(WpqIndex::make(int(n), int(n + 1))));
      ok = ok && km.gate_lemma_5_13 && km.gate_lemma_5_14 && km.closed_form;
      ok = ok && km.value < prev && km.value > 29.0 / 8.0;
      prev = km.value;
    }
    // The gap is (3+9n)/(8(1+3n+3n^2)), an O(1/n) rate: 903/242408 at n=100.
    ok = ok && (prev - 29.0 / 8.0) < 4e-3;
    report(9, ok, "K_max(100) - 29/8 = " + std::to_string(prev - 29.0 / 8.0));
  });

  // 10. Injectivity radius bounds for W(1,1).
  criterion(10, [] {
    const InjectivityBounds ib =
        bounds_wpq(WpqIndex::make(1, 1), CurvatureSource::HuangConstants);
    const double lo_ref = 3 * kPi / (4.0 * 37 * 37 * 37);
    const double hi_ref = kPi * std::pow(1.5, 1.0 / 7.0);
    const bool ok = std::abs(ib.lower - lo_ref) < 1e-12 * lo_ref &&
                    std::abs(ib.upper - hi_ref) < 1e-12 * hi_ref &&
                    ib.binding_branch == BindingBranch::VolumeBranch;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "lower %.6e, upper %.6e", ib.lower,
                  ib.upper);
    report(10, ok, buf);
  });

  // 11. Bi-invariant sectional curvature identity on SU(3).
  criterion(11, [] {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g(0.0, 1.0);
    const ReductiveSplit split = build_split(WpqIndex::make(1, 1));
    const CurvatureTable table = group_curvature(MetricSpec::killing(), split);
    const auto frame = group_frame(MetricSpec::killing(), split);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      Eigen::Matrix<double, 8, 1> x, y;
      for (int k = 0; k < 8; ++k) {
        x(k) = g(rng);
        y(k) = g(rng);
      }
      x.normalize();
      y -= y.dot(x) * x;
      y.normalize();
      std::array<double, 8> xa{}, ya{};
      Mat3 mx = Mat3::Zero(), my = Mat3::Zero();
      for (int k = 0; k < 8; ++k) {
        xa[k] = x(k);
        ya[k] = y(k);
        mx += x(k) * frame[k];
        my += y(k) * frame[k];
      }
      const double ref = 0.25 * killing(bracket(mx, my), bracket(mx, my));
      worst = std::max(worst, std::abs(table.biquadratic(xa, ya) - ref) /
                                  std::max(1e-12, ref));
    }
    report(11, worst < 1e-9, "max rel err " + std::to_string(worst));
  });

  // 12. Condition II: exact bracket inclusions plus randomized item 4.
  criterion(12, [] {
    bool ok = true;
    long violations = 0;
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}}) {
      const ConditionIIReport rep =
          check_condition_II(build_split(WpqIndex::make(p, q)), 100000, 12);
      ok = ok && rep.residual_item1 < 1e-12 && rep.residual_item2 < 1e-12 &&
           rep.residual_item3 < 1e-12 && rep.item4_samples >= 100000 &&
           rep.item4_violations == 0;
      violations += rep.item4_violations;
    }
    report(12, ok, "item-4 violations " + std::to_string(violations));
  });

  std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED"
                                      : "CRITERIA FAILURES PRESENT");
  return g_failures == 0 ? 0 : 1;
}
