#include "aw/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace aw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

CurvatureTable::CurvatureTable(int dim)
    : dim_(dim), m_(std::size_t(dim) * dim * dim * dim, 0.0) {}

double CurvatureTable::biquadratic(std::span<const double> x,
                                   std::span<const double> y) const {
  // Rm(X,Y,Y,X) = sum Rm_abcd x_a y_b y_c x_d
  double s = 0.0;
  for (int a = 0; a < dim_; ++a) {
    if (x[a] == 0.0) continue;
    for (int b = 0; b < dim_; ++b) {
      if (y[b] == 0.0) continue;
      const double xy = x[a] * y[b];
      for (int c = 0; c < dim_; ++c) {
        double inner = 0.0;
        for (int d = 0; d < dim_; ++d) {
          inner += at(a, b, c, d) * x[d];
        }
        s += xy * y[c] * inner;
      }
    }
  }
  return s;
}

double CurvatureTable::sectional(std::span<const double> x,
                                 std::span<const double> y) const {
  double xx = 0.0, yy = 0.0, xy = 0.0;
  for (int i = 0; i < dim_; ++i) {
    xx += x[i] * x[i];
    yy += y[i] * y[i];
    xy += x[i] * y[i];
  }
  const double den = xx * yy - xy * xy;
  if (den < 1e-12) {
    throw std::invalid_argument("sectional: degenerate plane");
  }
  return biquadratic(x, y) / den;
}

CurvatureTable::SymmetryResiduals CurvatureTable::symmetry_residuals() const {
  SymmetryResiduals r;
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        for (int d = 0; d < dim_; ++d) {
          r.antisym_first = std::max(r.antisym_first,
                                     std::abs(at(a, b, c, d) + at(b, a, c, d)));
          r.antisym_second = std::max(
              r.antisym_second, std::abs(at(a, b, c, d) + at(a, b, d, c)));
          r.pair_symmetry = std::max(r.pair_symmetry,
                                     std::abs(at(a, b, c, d) - at(c, d, a, b)));
          r.first_bianchi = std::max(
              r.first_bianchi, std::abs(at(a, b, c, d) + at(b, c, a, d) +
                                        at(c, a, b, d)));
        }
  return r;
}

std::array<Mat3, 8> group_frame(const MetricSpec& spec,
                                const ReductiveSplit& split) {
  std::array<Mat3, 8> f;
  f[0] = split.t / std::sqrt(spec.coeff_t);
  for (int i = 0; i < 3; ++i) f[1 + i] = split.v1[i] / std::sqrt(spec.coeff_v1);
  for (int i = 0; i < 4; ++i) f[4 + i] = split.v2[i] / std::sqrt(spec.coeff_v2);
  return f;
}

std::array<Mat3, 7> base_frame(const ReductiveSplit& split) {
  std::array<Mat3, 7> h;
  const double s2 = std::sqrt(2.0);
  for (int i = 0; i < 3; ++i) h[i] = s2 * split.v1[i];
  for (int i = 0; i < 4; ++i) h[3 + i] = split.v2[i];
  return h;
}

namespace {

// Frame bracket coefficients N_abe = w([f_a,f_b], f_e). The adapted frame
// elements are pure-block, so the w-inner product against f_e reduces to the
// block coefficient times the Killing product.
using Coeffs8 = std::array<std::array<std::array<double, 8>, 8>, 8>;

Coeffs8 frame_brackets(const MetricSpec& spec, const ReductiveSplit& split,
                       const std::array<Mat3, 8>& f) {
  std::array<double, 8> block_coeff;
  block_coeff[0] = spec.coeff_t;
  for (int i = 1; i < 4; ++i) block_coeff[i] = spec.coeff_v1;
  for (int i = 4; i < 8; ++i) block_coeff[i] = spec.coeff_v2;
  (void)split;
  Coeffs8 n{};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const Mat3 br = bracket(f[a], f[b]);
      for (int e = 0; e < 8; ++e) {
        n[a][b][e] = block_coeff[e] * killing(br, f[e]);
      }
    }
  }
  return n;
}

}  // namespace

CurvatureTable group_curvature(const MetricSpec& spec,
                               const ReductiveSplit& split) {
  const auto f = group_frame(spec, split);
  const auto n = frame_brackets(spec, split, f);
  // Koszul: Gamma_abc = <nabla_{f_a} f_b, f_c>
  Coeffs8 gamma{};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        gamma[a][b][c] = 0.5 * (n[a][b][c] - n[b][c][a] + n[c][a][b]);

  CurvatureTable table(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        for (int d = 0; d < 8; ++d) {
          double s = 0.0;
          for (int e = 0; e < 8; ++e) {
            s += gamma[b][c][e] * gamma[a][e][d] -
                 gamma[a][c][e] * gamma[b][e][d] - n[a][b][e] * gamma[e][c][d];
          }
          table.at(a, b, c, d) = s;
        }
  return table;
}

namespace {

// Everything sectional_wpq and base_curvature need for one index.
struct WpqContext {
  ReductiveSplit split;
  std::array<Mat3, 8> gframe;
  std::array<Mat3, 7> hframe;
  CurvatureTable group;  // metric w

  explicit WpqContext(const WpqIndex& idx)
      : split(build_split(idx)),
        gframe(group_frame(MetricSpec::wallach_w(), split)),
        hframe(base_frame(split)),
        group(group_curvature(MetricSpec::wallach_w(), split)) {}

  // Submersion biquadratic Q(X,Y) = Rm_G(X,Y,Y,X) + (3/4)|[X,Y]_T|^2 for
  // horizontal arguments in base-frame coordinates.
  double biquadratic(const Eigen::Matrix<double, 7, 1>& x,
                     const Eigen::Matrix<double, 7, 1>& y,
                     const Eigen::Matrix<double, 7, 7>& vert) const {
    std::array<double, 8> ex{}, ey{};
    for (int i = 0; i < 7; ++i) {
      ex[1 + i] = x(i);
      ey[1 + i] = y(i);
    }
    const double v = x.dot(vert * y);
    return group.biquadratic(ex, ey) + 0.75 * v * v;
  }

  Eigen::Matrix<double, 7, 7> vertical_coeffs() const {
    Eigen::Matrix<double, 7, 7> vert;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        vert(i, j) = killing(bracket(hframe[i], hframe[j]), split.t);
    return vert;
  }
};

}  // namespace

double sectional_wpq(const WpqIndex& idx, const TwoPlane& plane) {
  if (!idx.positively_curvable()) {
    throw std::domain_error(
        "sectional_wpq: index is degenerate (one of p, q, p+q is zero)");
  }
  const WpqContext ctx(idx);
  const MetricSpec w = MetricSpec::wallach_w();
  // Horizontality check.
  const double tcomp =
      std::max(std::abs(killing(plane.X, ctx.split.t)),
               std::abs(killing(plane.Y, ctx.split.t)));
  if (tcomp > 1e-8 * std::max(knorm(plane.X), 1.0)) {
    throw std::invalid_argument("sectional_wpq: plane not in T-perp");
  }
  const double gxx = metric_eval(w, ctx.split, plane.X, plane.X);
  const double gyy = metric_eval(w, ctx.split, plane.Y, plane.Y);
  const double gxy = metric_eval(w, ctx.split, plane.X, plane.Y);
  const double den = gxx * gyy - gxy * gxy;
  if (den < 1e-10) {
    throw std::invalid_argument("sectional_wpq: degenerate plane");
  }
  std::array<double, 8> x{}, y{};
  for (int a = 0; a < 8; ++a) {
    x[a] = metric_eval(w, ctx.split, plane.X, ctx.gframe[a]);
    y[a] = metric_eval(w, ctx.split, plane.Y, ctx.gframe[a]);
  }
  const Mat3 vb = project(bracket(plane.X, plane.Y), ctx.split, Block::T);
  const double kg = ctx.group.biquadratic(x, y);
  return (kg + 0.75 * killing(vb, vb)) / den;
}

CurvatureTable base_curvature(const WpqIndex& idx) {
  if (!idx.positively_curvable()) {
    throw std::domain_error("base_curvature: index is degenerate");
  }
  const WpqContext ctx(idx);
  const Eigen::Matrix<double, 7, 7> vert = ctx.vertical_coeffs();

  using V7 = Eigen::Matrix<double, 7, 1>;
  auto q = [&](const V7& x, const V7& y) { return ctx.biquadratic(x, y, vert); };
  // Rm(X,Y,Z,W) = (1/6) d_s d_t [Q(X+sW, Y+tZ) - Q(X+sZ, Y+tW)], with the
  // mixed derivative taken exactly by the four-point rule (Q is biquadratic).
  auto rm = [&](const V7& X, const V7& Y, const V7& Z, const V7& W) {
    const double plus =
        q(X + W, Y + Z) - q(X + W, Y - Z) - q(X - W, Y + Z) + q(X - W, Y - Z);
    const double minus =
        q(X + Z, Y + W) - q(X + Z, Y - W) - q(X - Z, Y + W) + q(X - Z, Y - W);
    return (plus - minus) / 24.0;
  };

  std::array<V7, 7> e;
  for (int i = 0; i < 7; ++i) e[i] = V7::Unit(i);

  CurvatureTable table(7);
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = c + 1; d < 7; ++d) {
          if (c * 7 + d < a * 7 + b) continue;
          const double v = rm(e[a], e[b], e[c], e[d]);
          table.at(a, b, c, d) = v;
          table.at(b, a, c, d) = -v;
          table.at(a, b, d, c) = -v;
          table.at(b, a, d, c) = v;
          table.at(c, d, a, b) = v;
          table.at(d, c, a, b) = -v;
          table.at(c, d, b, a) = -v;
          table.at(d, c, b, a) = v;
        }
  return table;
}

OperatorSpectrum base_curvature_operator(const WpqIndex& idx) {
  const CurvatureTable rm = base_curvature(idx);
  // Bivector index map: (a,b) with a < b.
  std::array<std::pair<int, int>, 21> pairs;
  int n = 0;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) pairs[n++] = {a, b};

  OperatorSpectrum spec;
  spec.op.resize(21, 21);
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j < 21; ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      // Rmhat(ea^eb, ec^ed) = Rm(ea, eb, ed, ec)
      spec.op(i, j) = rm.at(a, b, d, c);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spec.op);
  spec.eigenvalues = es.eigenvalues();
  return spec;
}

namespace {

using Plane = Eigen::Matrix<double, 7, 2>;

double plane_biquadratic(const CurvatureTable& rm, const Plane& p) {
  std::array<double, 7> x{}, y{};
  for (int i = 0; i < 7; ++i) {
    x[i] = p(i, 0);
    y[i] = p(i, 1);
  }
  return rm.biquadratic(x, y);
}

// Exact best rotation of plane column `col` toward complement direction n:
// K(t) = (c s) M (c s)^T with M from three biquadratic evaluations.
// Returns the extreme value and updates (u, n) by the optimal rotation.
double rotate_extreme(const CurvatureTable& rm, Plane& p,
                      Eigen::Matrix<double, 7, 1>& n, int col, bool maximize) {
  const Eigen::Matrix<double, 7, 1> u = p.col(col);
  const Eigen::Matrix<double, 7, 1> v = p.col(1 - col);
  std::array<double, 7> va{};
  for (int i = 0; i < 7; ++i) va[i] = v(i);
  auto bq = [&](const Eigen::Matrix<double, 7, 1>& w) {
    std::array<double, 7> wa{};
    for (int i = 0; i < 7; ++i) wa[i] = w(i);
    return rm.biquadratic(wa, va);
  };
  const double quu = bq(u);
  const double qnn = bq(n);
  const double qun = 0.5 * (bq(u + n) - quu - qnn);
  Eigen::Matrix2d m;
  m << quu, qun, qun, qnn;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  const int which = maximize ? 1 : 0;
  const double value = es.eigenvalues()(which);
  Eigen::Vector2d dir = es.eigenvectors().col(which);
  if (dir(0) < 0) dir = -dir;  // fixed orientation, determinism
  const Eigen::Matrix<double, 7, 1> new_u = dir(0) * u + dir(1) * n;
  const Eigen::Matrix<double, 7, 1> new_n = -dir(1) * u + dir(0) * n;
  p.col(col) = new_u;
  n = new_n;
  return value;
}

// Gram-Schmidt complement of the plane columns inside R^7 (5 directions).
std::array<Eigen::Matrix<double, 7, 1>, 5> complement(const Plane& p) {
  std::array<Eigen::Matrix<double, 7, 1>, 5> out;
  int kept = 0;
  for (int i = 0; i < 7 && kept < 5; ++i) {
    Eigen::Matrix<double, 7, 1> w = Eigen::Matrix<double, 7, 1>::Unit(i);
    w -= w.dot(p.col(0)) * p.col(0);
    w -= w.dot(p.col(1)) * p.col(1);
    for (int j = 0; j < kept; ++j) w -= w.dot(out[j]) * out[j];
    const double nn = w.norm();
    if (nn > 1e-6) out[kept++] = w / nn;
  }
  if (kept != 5) throw std::logic_error("complement: rank defect");
  return out;
}

struct RefineOutcome {
  double value;
  Plane plane;
  bool converged;
};

// Restore exact orthonormality of the plane columns after rotations.
void orthonormalize(Plane& p) {
  p.col(0).normalize();
  p.col(1) -= p.col(1).dot(p.col(0)) * p.col(0);
  p.col(1).normalize();
}

RefineOutcome refine(const CurvatureTable& rm, Plane p, bool maximize,
                     int max_sweeps = 200) {
  double value = plane_biquadratic(rm, p);
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = value;
    for (int col = 0; col < 2; ++col) {
      // The complement must be rebuilt after every rotation: updating a
      // column invalidates the orthogonality of the remaining directions,
      // and rotating against a stale direction would shrink the column.
      for (int k = 0; k < 5; ++k) {
        orthonormalize(p);
        auto comp = complement(p);
        auto n = comp[k];
        value = rotate_extreme(rm, p, n, col, maximize);
      }
    }
    if (std::abs(before - value) < 1e-10) {
      converged = true;
      break;
    }
  }
  return {value, p, converged};
}

Plane random_plane(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Plane p;
  for (;;) {
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 2; ++j) p(i, j) = gauss(rng);
    p.col(0).normalize();
    p.col(1) -= p.col(1).dot(p.col(0)) * p.col(0);
    const double nn = p.col(1).norm();
    if (nn > 1e-6) {
      p.col(1) /= nn;
      return p;
    }
  }
}

}  // namespace

ExtremizeResult extremize_sectional(const WpqIndex& idx, long budget,
                                    std::uint64_t seed) {
  if (!idx.positively_curvable()) {
    throw std::domain_error("extremize_sectional: index is degenerate");
  }
  if (budget < 1) {
    throw std::invalid_argument("extremize_sectional: budget must be >= 1");
  }
  const CurvatureTable rm = base_curvature(idx);

  std::mt19937_64 rng(splitmix64(seed));
  std::vector<std::pair<double, Plane>> starts;
  starts.reserve(budget);
  for (long i = 0; i < budget; ++i) {
    Plane p = random_plane(rng);
    starts.emplace_back(plane_biquadratic(rm, p), p);
  }
  std::sort(starts.begin(), starts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const long restarts = std::min<long>(200, budget);
  ExtremizeResult res;
  res.converged = true;

  auto run_side = [&](bool maximize, double& best, Plane& best_plane,
                      double& spread) {
    std::vector<double> refined;
    refined.reserve(restarts);
    best = maximize ? -1e300 : 1e300;
    bool best_converged = false;
    for (long r = 0; r < restarts; ++r) {
      const auto& start =
          maximize ? starts[starts.size() - 1 - r] : starts[r];
      const RefineOutcome out = refine(rm, start.second, maximize);
      refined.push_back(out.value);
      if ((maximize && out.value > best) || (!maximize && out.value < best)) {
        best = out.value;
        best_plane = out.plane;
        best_converged = out.converged;
      }
    }
    // Only the restart that produced the extreme value needs to have
    // settled; stray slow restarts land at non-extremal saddles.
    if (!best_converged) res.converged = false;
    std::sort(refined.begin(), refined.end());
    if (maximize) std::reverse(refined.begin(), refined.end());
    const std::size_t k = std::min<std::size_t>(4, refined.size() - 1);
    spread = std::abs(refined[k] - refined[0]);
  };

  run_side(false, res.k_min, res.argmin_plane, res.spread_min);
  run_side(true, res.k_max, res.argmax_plane, res.spread_max);
  return res;
}

}  // namespace aw
