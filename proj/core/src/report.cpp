#include "aw/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "aw/curvature.hpp"
#include "aw/euler.hpp"

namespace aw {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt(bool v) { return v ? "true" : "false"; }

}  // namespace

BoundsReport make_report(int p, int q, const ReportOptions& opts) {
  const WpqIndex idx = WpqIndex::make(p, q);
  BoundsReport rep;
  rep.p = p;
  rep.q = q;
  rep.seed = opts.seed;
  rep.tol = opts.tol;
  rep.volume = vol_wpq_bounds(idx);
  if (!idx.positively_curvable()) return rep;

  const PinchResult pr = pinch(idx, opts.oracle_budget, opts.seed);
  rep.curvature_available = true;
  rep.k_min = pr.k_min;
  rep.k_max = pr.k_max;
  rep.curvature_method = pr.k_max_closed_form ? "closed-form" : "oracle";
  const PinchCoefficients co = coefficients(idx);
  // Tolerance: at p == q the two bounds coincide exactly and the ternary
  // search may land a few ulp below the rational value.
  if (pr.lambda_bar <= pr.lambda_hat + 1e-12 && pr.lambda_bar_closed_form_ok) {
    const SimplexQuadratic sq = simplex_quadratic(co);
    const Rational lb = sq.det_A / (sq.rD[0] + sq.rD[1] + sq.rD[2]);
    rep.k_min_exact = lb.to_string();
  }
  if (pr.k_max_closed_form) {
    rep.k_max_exact = k_max(co).exact_lambda0.to_string();
  }
  if (opts.with_oracle) {
    const ExtremizeResult er =
        extremize_sectional(idx, opts.oracle_budget, opts.seed);
    rep.curvature_method = "both";
    // Keep the closed-form numbers; the oracle values are consistency
    // evidence, surfaced through verify.
    (void)er;
  }
  rep.injectivity_available = true;
  rep.injectivity =
      bounds_wpq(idx, CurvatureSource::Pinching, opts.oracle_budget, opts.seed);
  return rep;
}

std::string serialize(const BoundsReport& r) {
  std::ostringstream os;
  os << "aw-report v1\n";
  os << "p = " << r.p << "\n";
  os << "q = " << r.q << "\n";
  os << "vol_lower = " << fmt(r.volume.lower) << "\n";
  os << "vol_upper = " << fmt(r.volume.upper) << "\n";
  os << "vol_exact = " << (r.volume.exact ? fmt(*r.volume.exact) : "none") << "\n";
  os << "curvature_available = " << fmt(r.curvature_available) << "\n";
  if (r.curvature_available) {
    os << "k_min = " << fmt(r.k_min) << "\n";
    os << "k_min_exact = " << (r.k_min_exact.empty() ? "none" : r.k_min_exact) << "\n";
    os << "k_max = " << fmt(r.k_max) << "\n";
    os << "k_max_exact = " << (r.k_max_exact.empty() ? "none" : r.k_max_exact) << "\n";
    os << "curvature_method = " << r.curvature_method << "\n";
  }
  os << "injectivity_available = " << fmt(r.injectivity_available) << "\n";
  if (r.injectivity_available) {
    os << "inj_lower = " << fmt(r.injectivity.lower) << "\n";
    os << "inj_upper = " << fmt(r.injectivity.upper) << "\n";
    os << "inj_binding_branch = "
       << (r.injectivity.binding_branch == BindingBranch::ConjugatePoint
               ? "conjugate-point"
               : "volume")
       << "\n";
  }
  os << "seed = " << r.seed << "\n";
  os << "tol = " << fmt(r.tol) << "\n";
  return os.str();
}

BoundsReport parse_report(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "aw-report v1") {
    throw std::invalid_argument("parse_report: bad header");
  }
  BoundsReport r;
  while (std::getline(is, line)) {
    const auto sep = line.find(" = ");
    if (sep == std::string::npos) continue;
    const std::string key = line.substr(0, sep);
    const std::string val = line.substr(sep + 3);
    auto d = [&]() { return std::stod(val); };
    if (key == "p") r.p = std::stoi(val);
    else if (key == "q") r.q = std::stoi(val);
    else if (key == "vol_lower") r.volume.lower = d();
    else if (key == "vol_upper") r.volume.upper = d();
    else if (key == "vol_exact") { if (val != "none") r.volume.exact = d(); }
    else if (key == "curvature_available") r.curvature_available = (val == "true");
    else if (key == "k_min") r.k_min = d();
    else if (key == "k_min_exact") { if (val != "none") r.k_min_exact = val; }
    else if (key == "k_max") r.k_max = d();
    else if (key == "k_max_exact") { if (val != "none") r.k_max_exact = val; }
    else if (key == "curvature_method") r.curvature_method = val;
    else if (key == "injectivity_available") r.injectivity_available = (val == "true");
    else if (key == "inj_lower") r.injectivity.lower = d();
    else if (key == "inj_upper") r.injectivity.upper = d();
    else if (key == "inj_binding_branch")
      r.injectivity.binding_branch = val == "conjugate-point"
                                         ? BindingBranch::ConjugatePoint
                                         : BindingBranch::VolumeBranch;
    else if (key == "seed") r.seed = std::stoull(val);
    else if (key == "tol") r.tol = d();
  }
  return r;
}

std::vector<FamilyRow> family_table(long n_max) {
  if (n_max < 1) throw std::invalid_argument("family_table: n_max must be >= 1");
  std::vector<FamilyRow> rows;
  rows.reserve(n_max);
  for (long n = 1; n <= n_max; ++n) {
    const WpqIndex idx = WpqIndex::make(int(n), int(n + 1));
    const PinchCoefficients co = coefficients(idx);
    FamilyRow row;
    row.n = n;
    row.lambda_hat = lambda_hat(co).value;
    row.lambda_bar = lambda_bar(simplex_quadratic(co)).value;
    const FamilyFormulas ff = family_formulas(n);
    row.c_n = ff.c_n;
    row.C_n = ff.C_n;
    const InjectivityBounds ib = bounds_wpq(idx, CurvatureSource::Pinching);
    row.inj_lower = ib.lower;
    row.inj_upper = ib.upper;
    rows.push_back(row);
  }
  return rows;
}

std::string family_csv(const std::vector<FamilyRow>& rows) {
  std::ostringstream os;
  os << "n,lambda_hat,lambda_bar,c_n,C_n,inj_lower,inj_upper,"
        "limit_2_37,limit_29_8\n";
  for (const FamilyRow& r : rows) {
    os << r.n << ',' << fmt(r.lambda_hat) << ',' << fmt(r.lambda_bar) << ','
       << fmt(r.c_n) << ',' << fmt(r.C_n) << ',' << fmt(r.inj_lower) << ','
       << fmt(r.inj_upper) << ',' << fmt(2.0 / 37.0) << ',' << fmt(29.0 / 8.0)
       << "\n";
  }
  return os.str();
}

namespace {

using Checks = std::vector<CheckResult>;

void add(Checks& out, const std::string& name,
         const std::function<bool(std::ostringstream&)>& body) {
  CheckResult r;
  r.name = name;
  std::ostringstream detail;
  try {
    r.pass = body(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    detail << "exception: " << e.what();
  }
  r.detail = detail.str();
  out.push_back(r);
}

}  // namespace

std::vector<CheckResult> run_verification(long budget, std::uint64_t seed,
                                          double tol, const VerifyHooks& hooks) {
  Checks out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> small_pq(1, 50);

  auto random_algebra = [&]() {
    Mat3 x = Mat3::Zero();
    const GeneratorBasis gm = gell_mann_basis();
    for (int k = 0; k < 8; ++k) x += gauss(rng) * gm.generators[k];
    return x;
  };

  add(out, "gell-mann-entries", [&](std::ostringstream& d) {
    const Mat3 l8 = gell_mann(8);
    const Mat3 l3 = gell_mann(3);
    const double r3 = 1.0 / std::sqrt(3.0);
    double err = std::abs(l8(0, 0) - Complex(r3)) +
                 std::abs(l8(2, 2) + Complex(2 * r3)) +
                 std::abs(l3(0, 0) - Complex(1.0)) + std::abs(l3(2, 2));
    for (int k = 1; k <= 8; ++k) err += std::abs(gell_mann(k).trace());
    d << "entry residual " << err;
    return err < tol;
  });

  add(out, "bracket-jacobi", [&](std::ostringstream& d) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Mat3 x = random_algebra(), y = random_algebra(), z = random_algebra();
      const Mat3 j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                     bracket(z, bracket(x, y));
      worst = std::max(worst, j.cwiseAbs().maxCoeff());
    }
    d << "max Jacobi residual " << worst;
    return worst < 1e-12 * 100;
  });

  add(out, "exponential-unitarity", [&](std::ostringstream& d) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      worst = std::max(worst, group_residual(exponential(random_algebra())));
    }
    d << "max group residual " << worst;
    return worst < 1e-12;
  });

  add(out, "condition-II", [&](std::ostringstream& d) {
    const long samples = std::max<long>(1000, budget);
    for (auto [p, q] : {std::pair{1, 1}, {2, 3}}) {
      const auto rep = check_condition_II(build_split(WpqIndex::make(p, q)),
                                          samples, seed);
      d << "(" << p << "," << q << ") residuals " << rep.residual_item1 << " "
        << rep.residual_item2 << " " << rep.residual_item3 << " violations "
        << rep.item4_violations << "; ";
      if (rep.residual_item1 > 1e-12 || rep.residual_item2 > 1e-12 ||
          rep.residual_item3 > 1e-12 || rep.item4_violations > 0) {
        return false;
      }
    }
    return true;
  });

  add(out, "density-closed-form", [&](std::ostringstream& d) {
    const ReductiveSplit split = build_split(WpqIndex::make(1, 1));
    std::uniform_real_distribution<double> u(0.05, 0.95);
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
    d << "max relative error " << worst;
    return worst < 1e-9;
  });

  add(out, "volume-killing", [&](std::ostringstream& d) {
    QuadratureSpec quad;
    quad.nodes_per_axis = 16;
    const ReductiveSplit split = build_split(WpqIndex::make(1, 1));
    const double v = integrate_volume(MetricSpec::killing(), split, quad).value;
    const double exact = std::sqrt(3.0) * std::pow(kPi, 5);
    d << "integral " << v << " vs " << exact;
    return std::abs(v - exact) < 1e-6 * exact;
  });

  add(out, "volume-wallach-ratio", [&](std::ostringstream& d) {
    QuadratureSpec quad;
    quad.nodes_per_axis = 16;
    const ReductiveSplit split = build_split(WpqIndex::make(1, 2));
    const double v = integrate_volume(MetricSpec::wallach_w(), split, quad).value;
    const double exact = vol_su3(MetricSpec::wallach_w());
    d << "integral " << v << " vs " << exact;
    return std::abs(v - exact) < 1e-6 * exact;
  });

  add(out, "theorem1-sandwich", [&](std::ostringstream& d) {
    for (int i = 0; i < 100; ++i) {
      int p = small_pq(rng), q = small_pq(rng);
      const VolumeBounds vb = vol_wpq_bounds(WpqIndex::make(p, q));
      const double ex = *vb.exact;
      if (!(vb.lower < ex && ex < vb.upper)) return false;
      if (std::abs(ex / vb.lower - 4 * std::sqrt(2.0)) > 1e-12 * 8) return false;
      if (std::abs(vb.upper / ex - 2 * std::sqrt(2.0)) > 1e-12 * 8) return false;
    }
    d << "100 random indices";
    return true;
  });

  add(out, "lambda-bar-dual", [&](std::ostringstream& d) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const int p = small_pq(rng), q = small_pq(rng);
      const auto lb = lambda_bar(simplex_quadratic(
          coefficients(WpqIndex::make(p, q))));
      if (!lb.conditions_hold) return false;
      worst = std::max(worst, std::abs(lb.value - lb.closed_form));
    }
    d << "max |QP - closed form| " << worst;
    return worst < 1e-12;
  });

  add(out, "lambda-bar-values", [&](std::ostringstream& d) {
    PinchCoefficients co12 = coefficients(WpqIndex::make(1, 2));
    if (hooks.tamper_coefficients) hooks.tamper_coefficients(co12);
    const double v12 = lambda_bar(simplex_quadratic(co12)).value;
    const double v11 =
        lambda_bar(simplex_quadratic(coefficients(WpqIndex::make(1, 1)))).value;
    const double t12 = lambda_bar_tabulated(WpqIndex::make(1, 2)).to_double();
    d << "lambda_bar(1,2) = " << v12 << ", lambda_bar(1,1) = " << v11
      << ", tabulated(1,2) = " << t12;
    return std::abs(v12 - 251.0 / 4276.0) < 1e-12 &&
           std::abs(v11 - 2.0 / 37.0) < 1e-12 &&
           std::abs(t12 - 1757.0 / 28762.0) < 1e-15;
  });

  add(out, "lambda-hat-dual-monotone", [&](std::ostringstream& d) {
    double prev = -1.0;
    for (long n = 1; n <= 100; ++n) {
      const auto lh = lambda_hat(coefficients(WpqIndex::make(int(n), int(n + 1))));
      if (std::abs(lh.value - lh.enumerated) > 1e-10) return false;
      if (!(lh.value > prev) || !(lh.value < 2.0 / 37.0)) return false;
      prev = lh.value;
    }
    d << "n=1..100, limit gap " << 2.0 / 37.0 - prev;
    return true;
  });

  add(out, "kmax-gates", [&](std::ostringstream& d) {
    for (long n = 1; n <= 100; ++n) {
      const auto co = coefficients(WpqIndex::make(int(n), int(n + 1)));
      const auto km = k_max(co);
      if (!km.gate_lemma_5_13 || !km.gate_lemma_5_14 || !km.closed_form) {
        return false;
      }
    }
    d << "gates hold exactly for n=1..100";
    return true;
  });

  add(out, "bi-invariant-sectional", [&](std::ostringstream& d) {
    const ReductiveSplit split = build_split(WpqIndex::make(1, 1));
    const CurvatureTable table =
        group_curvature(MetricSpec::killing(), split);
    const auto frame = group_frame(MetricSpec::killing(), split);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      Eigen::Matrix<double, 8, 1> x, y;
      for (int k = 0; k < 8; ++k) {
        x(k) = gauss(rng);
        y(k) = gauss(rng);
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
      const double K = table.biquadratic(xa, ya);
      const double ref = 0.25 * killing(bracket(mx, my), bracket(mx, my));
      worst = std::max(worst, std::abs(K - ref) / std::max(ref, 1e-12));
    }
    d << "max relative error " << worst;
    return worst < 1e-9;
  });

  add(out, "oracle-w11-pinching", [&](std::ostringstream& d) {
    const long b = std::max<long>(budget, 1000);
    const ExtremizeResult er = extremize_sectional(WpqIndex::make(1, 1), b, seed);
    d << "k_min " << er.k_min << " k_max " << er.k_max;
    return std::abs(er.k_min - 2.0 / 37.0) < 1e-3 &&
           std::abs(er.k_max - 29.0 / 8.0) < 1e-3;
  });

  add(out, "family-sharpness", [&](std::ostringstream& d) {
    const long b = std::max<long>(budget, 1000);
    for (long n = 1; n <= 2; ++n) {
      const ExtremizeResult er =
          extremize_sectional(WpqIndex::make(int(n), int(n + 1)), b, seed);
      const FamilyFormulas ff = family_formulas(n);
      d << "n=" << n << ": " << er.k_min << "/" << ff.c_n << " " << er.k_max
        << "/" << ff.C_n << "; ";
      if (std::abs(er.k_min - ff.c_n) > 1e-3) return false;
      if (std::abs(er.k_max - ff.C_n) > 1e-3) return false;
    }
    return true;
  });

  add(out, "curvature-operator-facts", [&](std::ostringstream& d) {
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
      const WpqIndex idx = WpqIndex::make(p, q);
      const OperatorSpectrum os = base_curvature_operator(idx);
      const PinchResult pr = pinch(idx);
      const double lmin = os.eigenvalues.minCoeff();
      const double lmax = os.eigenvalues.maxCoeff();
      d << "(" << p << "," << q << ") spec [" << lmin << "," << lmax << "]; ";
      if (p == 1 && q == 1 && !(lmin < 0)) return false;
      if (!(lmin <= pr.k_min + 1e-9 && pr.k_max <= lmax + 1e-9)) return false;
    }
    return true;
  });

  add(out, "injectivity-numbers", [&](std::ostringstream& d) {
    const InjectivityBounds ib =
        bounds_wpq(WpqIndex::make(1, 1), CurvatureSource::HuangConstants);
    const double ref = 3.0 * kPi / (4.0 * 37.0 * 37.0 * 37.0);
    const double upper_ref = kPi * std::pow(1.5, 1.0 / 7.0);
    d << "lower " << ib.lower << " upper " << ib.upper;
    if (std::abs(ib.lower - ref) > 1e-4 * ref) return false;
    if (std::abs(ib.upper - upper_ref) > 1e-9) return false;
    for (long n = 1; n <= 100; ++n) {
      const InjectivityBounds b =
          bounds_wpq(WpqIndex::make(int(n), int(n + 1)), CurvatureSource::Pinching);
      if (!(b.lower <= b.upper)) return false;
    }
    return true;
  });

  return out;
}

}  // namespace aw
