/// Command-line front end: per-space bound reports, the W(n,n+1) family
/// table, and the closed-form-vs-oracle verification battery.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aw/report.hpp"

namespace {

// Exit codes: 0 success, 2 invalid input, 3 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

int cmd_report(int p, int q, long budget, std::uint64_t seed) {
  aw::ReportOptions opts;
  opts.oracle_budget = budget;
  opts.seed = seed;
  const aw::BoundsReport rep = aw::make_report(p, q, opts);
  std::cout << aw::serialize(rep);
  if (!rep.curvature_available) {
    std::cerr << "note: W(" << p << "," << q
              << ") is not positively curvable; curvature and injectivity "
                 "sections omitted\n";
  }
  return kExitOk;
}

int cmd_family(long n_max, const std::string& csv_path) {
  const auto rows = aw::family_table(n_max);
  const std::string csv = aw::family_csv(rows);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "error: cannot open " << csv_path << " for writing\n";
      return kExitInput;
    }
    out << csv;
  } else {
    std::cout << csv;
  }
  return kExitOk;
}

int cmd_verify(long budget, std::uint64_t seed, double tol) {
  const auto checks = aw::run_verification(budget, seed, tol);
  bool all_pass = true;
  for (const auto& c : checks) {
    std::printf("%-28s %s  %s\n", c.name.c_str(), c.pass ? "PASS" : "FAIL",
                c.detail.c_str());
    all_pass = all_pass && c.pass;
  }
  std::printf("%zu checks, %s\n", checks.size(),
              all_pass ? "all passed" : "FAILURES PRESENT");
  return all_pass ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volume, curvature-pinching and injectivity-radius bounds for "
               "Aloff-Wallach spaces W(p,q) = SU(3)/T(p,q)"};
  app.require_subcommand(1);

  int p = 0, q = 0;
  long budget = 10000;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  long n_max = 0;
  std::string csv_path;

  CLI::App* rep = app.add_subcommand("report", "Bounds report for one space");
  rep->add_option("--p", p, "First index")->required();
  rep->add_option("--q", q, "Second index")->required();
  rep->add_option("--oracle-budget", budget, "Random starts for the oracle");
  rep->add_option("--seed", seed, "RNG seed");

  CLI::App* fam = app.add_subcommand("family", "W(n,n+1) family table");
  fam->add_option("--n-max", n_max, "Largest n")->required();
  fam->add_option("--csv", csv_path, "Write CSV here instead of stdout");

  CLI::App* ver = app.add_subcommand("verify", "Run the verification battery");
  ver->add_option("--budget", budget, "Sample/start budget per check");
  ver->add_option("--seed", seed, "RNG seed");
  ver->add_option("--tol", tol, "Base tolerance for exact identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (rep->parsed()) return cmd_report(p, q, budget, seed);
    if (fam->parsed()) return cmd_family(n_max, csv_path);
    return cmd_verify(budget, seed, tol);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
}
