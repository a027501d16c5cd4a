#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aw/injectivity.hpp"
#include "aw/pinching.hpp"

namespace aw {

struct ReportOptions {
  long oracle_budget = 2000;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
  /// Also run the extremization oracle and record both routes.
  bool with_oracle = false;
};

/// Aggregated per-space report; serializes to a fixed-order key-value
/// document that round-trips byte-identically.
struct BoundsReport {
  int p = 0;
  int q = 0;
  VolumeBounds volume;
  bool curvature_available = false;
  double k_min = 0.0;
  double k_max = 0.0;
  std::string k_min_exact;  // rational string when the closed form applies
  std::string k_max_exact;
  std::string curvature_method;  // closed-form | oracle | both
  bool injectivity_available = false;
  InjectivityBounds injectivity;
  std::uint64_t seed = 0;
  double tol = 0.0;
};

BoundsReport make_report(int p, int q, const ReportOptions& opts = {});
std::string serialize(const BoundsReport& report);
BoundsReport parse_report(const std::string& text);

struct FamilyRow {
  long n = 0;
  double lambda_hat = 0.0;
  double lambda_bar = 0.0;
  double c_n = 0.0;
  double C_n = 0.0;
  double inj_lower = 0.0;
  double inj_upper = 0.0;
};

/// Rows for W(n,n+1), n = 1..n_max; the asymptote columns 2/37 and 29/8 are
/// emitted by family_csv.
std::vector<FamilyRow> family_table(long n_max);
std::string family_csv(const std::vector<FamilyRow>& rows);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Test hooks for fault injection; normal callers leave these empty.
struct VerifyHooks {
  std::function<void(PinchCoefficients&)> tamper_coefficients;
};

/// The oracle-vs-closed-form verification battery behind `verify`.
std::vector<CheckResult> run_verification(long budget, std::uint64_t seed,
                                          double tol,
                                          const VerifyHooks& hooks = {});

}  // namespace aw
