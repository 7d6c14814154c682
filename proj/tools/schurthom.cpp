// Command-line front end: compute, verify, series.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurthom/render.hpp"
#include "schurthom/thom.hpp"
#include "schurthom/verify.hpp"

namespace {

using namespace schurthom;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ComputeArgs {
  int i = 0;
  int j = 0;
  int r = 0;
  std::string route = "auto";
  std::string format = "text";
};

struct VerifyArgs {
  bool golden = false;
  bool restriction = false;
  bool lr = false;
  bool factorization = false;
  bool lascoux = false;
  bool series = false;
  bool all = false;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<int> r;
  int max_weight = 8;
  std::string format = "text";
};

struct SeriesArgs {
  int i = 0;
  int witness = 3;
  bool check = false;
};

int run_compute(const ComputeArgs& a) {
  const SingularityParams params{a.i, a.j, a.r};
  Route route;
  try {
    route = resolve_route(params, parse_route(a.route));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const SchurExpr x = thom_polynomial(params, route);
  if (a.format == "json") {
    std::cout << render_json(OutputDocument::make(x, params, route));
  } else if (a.format == "latex") {
    std::cout << render_latex(x) << "\n";
  } else {
    std::cout << render_text(x) << "\n";
  }
  return 0;
}

int run_verify(const VerifyArgs& a) {
  const bool any = a.golden || a.restriction || a.lr || a.factorization || a.lascoux || a.series || a.all;
  if (!any) {
    std::cerr << "error: select at least one suite (--golden, --restriction, --lr, --factorization, "
                 "--lascoux, --series, --all)\n";
    return kExitUsage;
  }
  std::vector<VerificationReport> reports;
  auto append = [&](std::vector<VerificationReport> more) {
    reports.insert(reports.end(), more.begin(), more.end());
  };

  if (a.restriction) {
    if (!a.i || !a.j || !a.r) {
      std::cerr << "error: --restriction needs --i, --j and --r\n";
      return kExitUsage;
    }
    const SingularityParams params{*a.i, *a.j, *a.r};
    try {
      (void)resolve_route(params, Route::automatic);
      if (params.j == 0 && params.h() != 1) throw std::invalid_argument("j = 0 is only supported at r = -i+1");
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    append(verify_singularity(params));
  }
  if (a.golden || a.all) append(golden_examples());
  if (a.lr || a.all) reports.push_back(check_lr_suite(a.max_weight));
  if (a.factorization || a.all) append(check_factorization_suite(3, 3, 10));
  if (a.lascoux || a.all) append(check_lascoux_suite(3, 3, 6));
  if (a.series || a.all) {
    for (int i = 1; i <= 3; ++i) reports.push_back(check_series(i, {0, 1, 2, 3}));
  }
  if (a.all) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= i; ++j) {
        for (int r = -i + 1; r <= 2; ++r) {
          if (j > 1 && r != -i + 1) continue;
          append(verify_singularity({i, j, r}));
        }
      }
    }
  }

  std::cout << (a.format == "json" ? render_reports_json(reports) : render_reports_text(reports));
  return all_passed(reports) ? 0 : kExitFailure;
}

int run_series(const SeriesArgs& a) {
  if (a.i < 1) {
    std::cerr << "error: i must be at least 1\n";
    return kExitUsage;
  }
  if (a.witness < 0) {
    std::cerr << "error: witness must be nonnegative\n";
    return kExitUsage;
  }
  std::cout << render_series_text(thom_series(a.i, a.witness));
  if (a.check) {
    const VerificationReport report = check_series(a.i, {0, 1, 2, 3});
    if (!report.passed) {
      std::cout << "inconsistent: " << *report.witness << "\n";
      return kExitFailure;
    }
    std::cout << "consistent across r=0..3\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thom polynomials of second-order Thom-Boardman singularities in the Schur basis"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Thom polynomial of Sigma^{i,j}(r)");
  c->add_option("--i", compute.i, "first-order corank")->required();
  c->add_option("--j", compute.j, "second-order corank")->required();
  c->add_option("--r", compute.r, "relative codimension")->required();
  c->add_option("--route", compute.route, "auto, main1, main2, main2nice or general")
      ->check(CLI::IsMember({"auto", "main1", "main2", "main2nice", "general"}));
  c->add_option("--format", compute.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run verification suites");
  v->add_flag("--golden", verify.golden, "known closed forms");
  v->add_flag("--restriction", verify.restriction, "restriction, vanishing and sign checks for --i --j --r");
  v->add_flag("--lr", verify.lr, "tableau LR coefficients against the alternant oracle");
  v->add_flag("--factorization", verify.factorization, "kernel and factorization of rho_{n,p}, n,p <= 3");
  v->add_flag("--lascoux", verify.lascoux, "tensor-product expansions against root evaluation");
  v->add_flag("--series", verify.series, "Thom series r-independence for i <= 3");
  v->add_flag("--all", verify.all, "everything above plus the restriction grid");
  v->add_option("--i", verify.i);
  v->add_option("--j", verify.j);
  v->add_option("--r", verify.r);
  v->add_option("--max-weight", verify.max_weight, "weight bound for --lr");
  v->add_option("--format", verify.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  SeriesArgs series;
  auto* s = app.add_subcommand("series", "Thom series coefficients of Sigma^{i,1}");
  s->add_option("--i", series.i, "first-order corank")->required();
  s->add_option("--witness", series.witness, "relative codimension the coefficients are read from");
  s->add_flag("--check-r-independence", series.check, "compare the coefficients for r = 0..3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c) return run_compute(compute);
    if (*v) return run_verify(verify);
    if (*s) return run_series(series);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
