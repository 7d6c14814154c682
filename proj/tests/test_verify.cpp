#include <doctest.h>

#include "schurthom/verify.hpp"

using namespace schurthom;

TEST_CASE("reports") {
  const auto ok = VerificationReport::pass("x", "p");
  const auto bad = VerificationReport::fail("y", "p", "why");
  CHECK(ok.passed);
  CHECK(!ok.witness);
  CHECK(*bad.witness == "why");
  CHECK(all_passed({ok}));
  CHECK(!all_passed({ok, bad}));
}

TEST_CASE("restriction checks accept true classes and reject perturbed ones") {
  for (const SingularityParams p : {SingularityParams{1, 1, 0}, {2, 1, 0}, {2, 2, -1}, {2, 1, 1}}) {
    const SchurExpr x = thom_polynomial(p);
    const auto bullet = bullet_class(p);
    for (auto mode : {RestrictionMode::bischur, RestrictionMode::roots}) {
      CHECK(check_restriction_1(x, p, mode).passed);
      CHECK(check_restriction_2(x, p, bullet, mode).passed);
      const SchurExpr wrong = x + SchurExpr::basis(x.terms().begin()->first);
      CHECK(!check_restriction_2(wrong, p, bullet, mode).passed);
    }
  }
  // s_1 survives rho_{1,1}
  CHECK(!check_restriction_1(SchurExpr::basis({1}), {2, 1, 0}).passed);
}

TEST_CASE("vanishing and sign checks flag witnesses") {
  const SingularityParams p{2, 1, 0};
  CHECK(check_vanishing(thom_polynomial(p), p).passed);
  const auto r = check_vanishing(SchurExpr::basis({1}), p);
  CHECK(!r.passed);
  CHECK(r.witness->find("(1)") != std::string::npos);
  CHECK(!check_nonnegative(SchurExpr::basis({1}, -1), "n", "p").passed);
}

TEST_CASE("verification suites pass") {
  CHECK(all_passed(golden_examples()));
  CHECK(check_lr_suite(6).passed);
  CHECK(all_passed(check_factorization_suite(2, 2, 7)));
  CHECK(all_passed(check_lascoux_suite(2, 2, 5)));
  CHECK(check_series(2, {0, 1, 2}).passed);
  CHECK(lr_bruteforce({2, 1}, {2, 1}, {3, 2, 1}) == 2);
}

TEST_CASE("restriction beyond the closed-form overlap") {
  for (const SingularityParams p : {SingularityParams{2, 2, 0}, {3, 2, -1}, {3, 3, -1}}) {
    const auto reports = verify_singularity(p);
    CHECK(reports.size() == 4);
    CHECK(all_passed(reports));
  }
}
