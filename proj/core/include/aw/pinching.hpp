#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "aw/wpq.hpp"

namespace aw {

/// Exact rational scalar used for the gate checks; the coefficient formulas
/// are rational in (p,q) with small denominators, so __int128 never
/// overflows at the index ranges this library accepts.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return make(-num_, den_); }

  bool operator==(const Rational& o) const;
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  double to_double() const;
  std::string to_string() const;

 private:
  static Rational make(__int128 n, __int128 d);
  __int128 num_ = 0;
  __int128 den_ = 1;
};

/// The a_j, b_j, c_j, d_j, xi_j coefficient table for one index, with the
/// exact-rational path for everything square-root free. xi_j carries the
/// common irrational factor sqrt(3)/(8 sqrt(dd)): xi_j = that * wi[j].
struct PinchCoefficients {
  std::array<double, 3> a{}, b{}, c{}, d{}, xi{};
  std::array<Rational, 3> ra, rb, rc, rd;
  std::array<long long, 3> wi{};
  long long dd = 1;  // p^2 + pq + q^2

  /// Exact (xi_j - xi_i)^2 = 3 (wi_j - wi_i)^2 / (64 dd).
  Rational xi_diff_sq(int j, int i) const;
};

/// Throws std::domain_error for degenerate indices.
PinchCoefficients coefficients(const WpqIndex& idx);

/// Lower hyperbola branch
/// lambda_j(x) = (c_j+d_j)/2 - sqrt(((c_j-d_j)/2)^2 + (xi_j-x)^2).
double lambda_branch(const PinchCoefficients& coeffs, int j, double x);

struct LambdaHatResult {
  double value = 0.0;        // ternary search on the concave min
  double enumerated = 0.0;   // candidate-enumeration cross-check
  double argmax_x = 0.0;
};

/// max_x min_j lambda_j(x).
LambdaHatResult lambda_hat(const PinchCoefficients& coeffs);

struct SimplexQuadratic {
  Eigen::Matrix3d A;             // [[a0,b2,b1],[b2,a1,b0],[b1,b0,a2]]
  std::array<double, 3> D{};     // adjugate(A) * (1,1,1)
  std::array<Rational, 3> rA_row0, rA_row1, rA_row2;
  std::array<Rational, 3> rD;
  Rational det_A;
  bool sum_gate = false;  // sum(a_j - b_j) >= 0
  bool d_gate = false;    // all D_j > 0
};

SimplexQuadratic simplex_quadratic(const PinchCoefficients& coeffs);

struct LambdaBarResult {
  double value = 0.0;        // simplex QP minimum
  double closed_form = 0.0;  // det A / (D1 + D2 + D3)
  bool conditions_hold = false;
};

/// min x^T A x over the probability simplex, by candidate enumeration
/// (interior stationary point, clamped edge minimizers, vertices).
LambdaBarResult lambda_bar(const SimplexQuadratic& sq);

/// Tabulated rational closed form for the simplex lower bound,
///   (p^2+pq+q^2)(59p^2-22pq+59q^2)
///   / (772p^4+1127p^3q+1776p^2q^2+977pq^3+676q^4).
/// It reproduces the published general-(p,q) expression, whose derivation
/// assembles the third cofactor row sum with b1*b0 + b1*b2 cross terms
/// instead of the adjugate's b0*b2 + b1*b2. It therefore agrees with
/// lambda_bar() at p == q but differs off the diagonal and is not symmetric
/// in (p, q); it is retained as a regression anchor, not used in k_min.
Rational lambda_bar_tabulated(const WpqIndex& idx);

struct KmaxResult {
  double capital_lambda0 = 0.0;  // max{a0,a1,a2,c0}
  double nu1 = 0.0;
  double nu2 = 0.0;
  bool gate_lemma_5_13 = false;  // a1 > 2 d0 - b0
  bool gate_lemma_5_14 = false;  // Lambda0 >= max{b_j, c0, nu1, nu2}
  /// Lambda0 when both gates pass; NaN otherwise (caller falls back to the
  /// extremization oracle).
  double value = 0.0;
  bool closed_form = false;
  Rational exact_lambda0;
};

KmaxResult k_max(const PinchCoefficients& coeffs);

/// Strict exact comparison t > nu_j (largest eigenvalue of the printed 2x2
/// block), done entirely in rationals.
bool exceeds_nu(const PinchCoefficients& coeffs, int j, const Rational& t);

struct FamilyFormulas {
  double c_n = 0.0;
  double C_n = 0.0;
};

/// The closed-form family bounds c(n) <= K(W(n,n+1)) <= C(n).
FamilyFormulas family_formulas(long n);

struct PinchResult {
  double lambda_hat = 0.0;
  double lambda_bar = 0.0;
  double capital_lambda0 = 0.0;
  double nu1 = 0.0;
  double nu2 = 0.0;
  double k_min = 0.0;
  double k_max = 0.0;
  bool lambda_hat_cross_checked = false;
  bool lambda_bar_closed_form_ok = false;
  bool k_max_closed_form = false;  // false => k_max came from the oracle
};

/// Assembles the pinching quantities. When the K_max lemma gates fail the
/// extremization oracle is consulted (oracle_budget > 0) instead of
/// guessing; with oracle_budget = 0, k_max is NaN in that case.
PinchResult pinch(const WpqIndex& idx, long oracle_budget = 2000,
                  std::uint64_t seed = 1);

}  // namespace aw
