// Acceptance suite: one PASS/FAIL line per criterion, each under a wall-clock
// limit. Expected values come from tests/oracles.hpp or from literal tables.

#include <chrono>
#include <deque>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schurthom/detforms.hpp"
#include "schurthom/thom.hpp"
#include "schurthom/verify.hpp"
#include "support.hpp"

using namespace schurthom;
using oracle::Expansion;
using oracle::Parts;
using oracle::Q;

namespace {

struct Outcome {
  std::optional<std::string> witness;  // empty on success
};

// Every polynomial produced along the way, for the vanishing and sign checks.
struct Produced {
  SingularityParams params;
  std::string origin;
  Expansion x;
};
std::deque<Produced> produced;  // stable references

const Expansion& keep(const SingularityParams& params, const std::string& origin, const SchurExpr& x) {
  produced.push_back({params, origin, support::to_expansion(x)});
  return produced.back().x;
}

std::string where(const std::string& origin, const SingularityParams& params) {
  return origin + " " + params.to_string();
}

Outcome fail(std::string w) { return {std::move(w)}; }

Outcome first_failure(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return fail(r.name + " " + r.params + ": " + r.witness.value_or("?"));
  return {};
}

// ---------------------------------------------------------------------------

Outcome criterion_golden_lowest() {
  for (int i = 1; i <= 5; ++i) {
    for (int j = 0; j <= std::min(i, 2); ++j) {
      const SingularityParams p{i, j, -i + 1};
      const auto& got = keep(p, "main1", tp_main1(i, j));
      const std::string diff = support::first_difference(got, oracle::sigma_lowest(i, j));
      if (!diff.empty()) return fail(where("main1", p) + " " + diff);
    }
  }
  return {};
}

Outcome criterion_golden_morin() {
  for (int r = 0; r <= 4; ++r) {
    const SingularityParams p{1, 1, r};
    const auto& got = keep(p, "main2nice", tp_main2nice(1, r));
    const std::string diff = support::first_difference(got, oracle::morin(r));
    if (!diff.empty()) return fail(where("main2nice", p) + " " + diff);
  }
  for (int r = -1; r >= -4; --r) {
    const SingularityParams p{1 - r, 1, r};
    const auto& got = keep(p, "main2nice", tp_main2nice(1 - r, r));
    const std::string diff = support::first_difference(got, oracle::morin(r));
    if (!diff.empty()) return fail(where("main2nice", p) + " " + diff);
  }
  return {};
}

Outcome criterion_golden_sigma21() {
  for (int r = 0; r <= 3; ++r) {
    const SingularityParams p{2, 1, r};
    const auto& got = keep(p, "main2nice", tp_main2nice(2, r));
    const std::string diff = support::first_difference(got, oracle::sigma21(r));
    if (!diff.empty()) return fail(where("main2nice", p) + " " + diff);
  }
  return {};
}

Outcome criterion_routes_main2() {
  for (int i = 1; i <= 4; ++i) {
    for (int r = -i + 1; r <= 3; ++r) {
      const SingularityParams p{i, 1, r};
      const auto& a = keep(p, "main2", tp_main2(i, r));
      const auto& b = keep(p, "main2nice", tp_main2nice(i, r));
      const std::string diff = support::first_difference(a, b);
      if (!diff.empty()) return fail(where("main2 vs main2nice", p) + " " + diff);
    }
  }
  return {};
}

Outcome criterion_routes_lift() {
  for (int i = 1; i <= 3; ++i) {
    for (int h = 1; h <= i + 3; ++h) {
      const SingularityParams p{i, 1, h - i};
      const auto& a = keep(p, "lift(porteous)", lift_to_universal(sigma_porteous(i, h), i, h));
      const auto b = support::to_expansion(tp_main2nice(i, h - i));
      const std::string diff = support::first_difference(a, b);
      if (!diff.empty()) return fail(where("lift(porteous) vs main2nice", p) + " " + diff);
    }
    for (int j = 0; j <= i; ++j) {
      const SingularityParams p{i, j, -i + 1};
      const auto& a = keep(p, "lift(ht)", lift_to_universal(sigma_ht(i, j), i, 1));
      const auto b = support::to_expansion(tp_main1(i, j));
      const std::string diff = support::first_difference(a, b);
      if (!diff.empty()) return fail(where("lift(ht) vs main1", p) + " " + diff);
    }
  }
  return {};
}

// The overlap of the pushforward engine with the closed forms.
std::vector<SingularityParams> overlap_grid() {
  std::vector<SingularityParams> grid;
  for (int i = 1; i <= 3; ++i) {
    for (int r = -i + 1; r <= 2; ++r) grid.push_back({i, 1, r});
    for (int j = 2; j <= i; ++j) grid.push_back({i, j, -i + 1});
  }
  return grid;
}

Outcome criterion_routes_general() {
  for (const auto& p : overlap_grid()) {
    const auto& a = keep(p, "general", tp_general(p.i, p.j, p.r));
    const auto b = support::to_expansion(p.j == 1 ? tp_main2nice(p.i, p.r) : tp_main1(p.i, p.j));
    const std::string diff = support::first_difference(a, b);
    if (!diff.empty()) return fail(where("general vs closed form", p) + " " + diff);
  }
  return {};
}

Outcome criterion_restriction() {
  std::mt19937 rng(20240611);
  for (const auto& p : overlap_grid()) {
    const SchurExpr x = tp_general(p.i, p.j, p.r);
    const BivariateSchurExpr bullet = bullet_class(p);
    if (auto r = check_restriction_1(x, p); !r.passed) return fail(r.name + " " + r.params + ": " + *r.witness);
    if (auto r = check_restriction_2(x, p, bullet); !r.passed) return fail(r.name + " " + r.params + ": " + *r.witness);

    // The same two identities at random rational points.
    const Expansion ex = support::to_expansion(x);
    const int h = p.h();
    for (int trial = 0; trial < 2; ++trial) {
      const auto a1 = oracle::distinct_points(rng, static_cast<std::size_t>(p.i - 1), 40);
      const auto b1 = oracle::distinct_points(rng, static_cast<std::size_t>(h - 1), 40);
      if (support::eval_super(ex, b1, a1) != 0) return fail("restriction 1 at a point " + p.to_string());
      const auto a = oracle::distinct_points(rng, static_cast<std::size_t>(p.i), 40);
      const auto b = oracle::distinct_points(rng, static_cast<std::size_t>(h), 40);
      const Q lhs = support::eval_super(ex, b, a);
      const Q rhs = support::euler_hom(a, b) * support::eval_bivariate(bullet, a, b);
      if (lhs != rhs) return fail("restriction 2 at a point " + p.to_string());
    }
  }
  return {};
}

Outcome criterion_vanishing() {
  for (const auto& pr : produced) {
    const int i = pr.params.i, h = pr.params.h(), k = pr.params.k();
    for (const auto& [lambda, c] : pr.x) {
      const bool a = oracle::contains(lambda, oracle::block(i, h));
      const bool b = oracle::contains(lambda, oracle::block(i + 1, h + 1));
      const bool cc = oracle::at(lambda, 0) > i + k;
      if (!a || b || cc) {
        return fail(where(pr.origin, pr.params) + " has s" + support::show(lambda) + " with coefficient " + c.get_str());
      }
    }
    SchurExpr x;
    for (const auto& [lambda, c] : pr.x) x.add_term(Partition(lambda), c);
    if (auto r = check_vanishing(x, pr.params); !r.passed) return fail(r.name + " " + r.params + ": " + *r.witness);
  }
  return {};
}

Outcome criterion_supersymmetric() {
  if (auto o = first_failure(check_factorization_suite(3, 3, 10)); o.witness) return o;
  std::mt19937 rng(7);
  for (int n = 1; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      const std::string np = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      for (int w = 0; w <= 10; ++w) {
        const auto lambdas = oracle::partitions(w);
        // factorization at a random point
        for (const Parts& lambda : lambdas) {
          if (!oracle::contains(lambda, oracle::block(n, p))) continue;
          const auto a = oracle::distinct_points(rng, static_cast<std::size_t>(n), 30);
          const auto b = oracle::distinct_points(rng, static_cast<std::size_t>(p), 30);
          const Q got = oracle::super_schur_at(lambda, b, a);
          Q want = 0;
          if (!oracle::contains(lambda, oracle::block(n + 1, p + 1))) {
            Parts beta, alpha;
            for (std::size_t r = 0; r < lambda.size(); ++r) {
              if (r < static_cast<std::size_t>(p)) beta.push_back(lambda[r] - n);
              else alpha.push_back(lambda[r]);
            }
            want = support::euler_hom(a, b) * oracle::schur_at(oracle::conj(alpha), a) *
                   oracle::schur_at(oracle::trim(beta), b);
            if (oracle::weight(alpha) % 2) want = -want;
          }
          if (got != want) return fail("factorization " + np + " s" + support::show(lambda));
        }
        // kernel of rho_{n-1,p-1}: the block-containing s_lambda vanish and
        // the others stay linearly independent
        std::vector<Parts> outside;
        for (const Parts& lambda : lambdas) {
          if (!oracle::contains(lambda, oracle::block(n, p))) {
            outside.push_back(lambda);
            continue;
          }
          const auto a = oracle::distinct_points(rng, static_cast<std::size_t>(n - 1), 30);
          const auto b = oracle::distinct_points(rng, static_cast<std::size_t>(p - 1), 30);
          if (oracle::super_schur_at(lambda, b, a) != 0) return fail("kernel " + np + " s" + support::show(lambda));
        }
        oracle::Matrix m;
        for (std::size_t t = 0; t < outside.size() + 3; ++t) {
          const auto a = oracle::distinct_points(rng, static_cast<std::size_t>(n - 1), 60);
          const auto b = oracle::distinct_points(rng, static_cast<std::size_t>(p - 1), 60);
          std::vector<Q> row;
          for (const Parts& lambda : outside) row.push_back(oracle::super_schur_at(lambda, b, a));
          m.push_back(std::move(row));
        }
        if (oracle::rank(m) != outside.size()) return fail("kernel " + np + " is larger than the block ideal in degree " + std::to_string(w));
      }
    }
  }
  return {};
}

Outcome criterion_combinatorial() {
  // Littlewood-Richardson against Kostka inversion.
  oracle::Kostka K;
  for (int w = 0; w <= 8; ++w) {
    for (int wm = 0; wm <= w; ++wm) {
      for (const Parts& mu : oracle::partitions(wm)) {
        for (const Parts& nu : oracle::partitions(w - wm)) {
          const auto expected = oracle::lr_product(mu, nu, K);
          for (const Parts& lambda : oracle::partitions(w)) {
            const oracle::Z want = expected.count(lambda) ? expected.at(lambda) : oracle::Z(0);
            const Integer got = lr_coefficient(Partition(mu), Partition(nu), Partition(lambda));
            if (got != want) {
              return fail("c^" + support::show(lambda) + "_{" + support::show(mu) + "," + support::show(nu) + "} = " +
                          got.get_str() + ", expected " + want.get_str());
            }
          }
        }
      }
    }
  }
  if (auto r = check_lr_suite(8); !r.passed) return fail(r.name + ": " + *r.witness);

  // Tensor-product lemma, both parts, at random points.
  std::mt19937 rng(11);
  for (int n = 1; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      const BivariateSchurExpr lemma = lascoux_tensor_expand(n, p);
      for (int trial = 0; trial < 3; ++trial) {
        const auto a = oracle::distinct_points(rng, static_cast<std::size_t>(n), 25);
        const auto b = oracle::distinct_points(rng, static_cast<std::size_t>(p), 25);
        Q total = 1;
        for (const auto& x : a)
          for (const auto& y : b) total *= 1 + x + y;
        if (total != support::eval_bivariate(lemma, a, b)) {
          return fail("tensor lemma n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int w = 0; w <= 6; ++w) {
      for (const Parts& lambda : oracle::partitions(w, -1, n)) {
        const auto terms = lascoux_line_expand(Partition(lambda), n);
        for (int trial = 0; trial < 2; ++trial) {
          const auto a = oracle::distinct_points(rng, static_cast<std::size_t>(n), 25);
          const Q t = std::uniform_int_distribution<int>(-9, 9)(rng);
          std::vector<Q> shifted;
          for (const auto& x : a) shifted.push_back(x + t);
          Q rhs = 0;
          for (const auto& term : terms) rhs += Q(term.coeff) * oracle::power(t, term.power) * oracle::schur_at(term.mu.parts(), a);
          if (oracle::schur_at(lambda, shifted) != rhs) return fail("line lemma n=" + std::to_string(n) + " s" + support::show(lambda));
        }
      }
    }
  }
  if (auto o = first_failure(check_lascoux_suite(3, 3, 6)); o.witness) return o;

  // Rows 0..5 of the partial binomial sum triangle.
  const std::vector<std::vector<int>> triangle = {
      {1}, {1, 2}, {1, 3, 4}, {1, 4, 7, 8}, {1, 5, 11, 15, 16}, {1, 6, 16, 26, 31, 32}};
  for (std::size_t row = 0; row < triangle.size(); ++row) {
    for (std::size_t k = 0; k < triangle[row].size(); ++k) {
      if (gbinom(static_cast<int>(row), static_cast<int>(k)) != triangle[row][k]) {
        return fail("gbinom(" + std::to_string(row) + "," + std::to_string(k) + ")");
      }
    }
  }

  // E determinants: diagonal, sign, support.
  for (int n = 1; n <= 4; ++n) {
    std::vector<Parts> shapes;
    for (int w = 0; w <= 5 * n; ++w)
      for (const Parts& p : oracle::partitions(w, 5, n)) shapes.push_back(p);
    for (const Parts& lambda : shapes) {
      const Partition L(lambda);
      if (E(L, L, n) != 1) return fail("E_{l/l} != 1 for " + support::show(lambda));
      for (const Parts& mu : shapes) {
        const Integer e = E(L, Partition(mu), n);
        if (e < 0) return fail("E < 0 for " + support::show(lambda) + "/" + support::show(mu));
        if (!oracle::contains(lambda, mu) && e != 0) return fail("E != 0 for " + support::show(mu) + " not in " + support::show(lambda));
        oracle::Matrix m(static_cast<std::size_t>(n), std::vector<Q>(static_cast<std::size_t>(n)));
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            m[r][c] = oracle::binomial(oracle::at(lambda, r) + n - 1 - r, oracle::at(mu, c) + n - 1 - c);
        if (Q(e) != oracle::det(m)) return fail("E determinant for " + support::show(lambda) + "/" + support::show(mu));
      }
    }
  }
  return {};
}

Outcome criterion_series() {
  for (int i = 1; i <= 3; ++i) {
    if (auto r = check_series(i, {0, 1, 2, 3}); !r.passed) return fail(r.name + " " + r.params + ": " + *r.witness);
    // c_gamma read off directly: gamma = conj(lambda) - h, padded to 2i.
    std::vector<std::map<std::vector<int>, oracle::Z>> per_r;
    for (int r = 0; r <= 3; ++r) {
      const int h = r + i;
      std::map<std::vector<int>, oracle::Z> gammas;
      for (const auto& [lambda, c] : support::to_expansion(tp_main2nice(i, r))) {
        const Parts cl = oracle::conj(lambda);
        if (static_cast<int>(cl.size()) > 2 * i) return fail("term s" + support::show(lambda) + " too wide");
        std::vector<int> g;
        for (int l = 0; l < 2 * i; ++l) g.push_back(oracle::at(cl, static_cast<std::size_t>(l)) - h);
        for (int l = 0; l < 2 * i; ++l) {
          if ((l < i && g[l] < 0) || (l >= i && g[l] > 0)) return fail("sign pattern at i=" + std::to_string(i));
        }
        gammas[g] = c;
      }
      per_r.push_back(std::move(gammas));
    }
    auto visible = [&](const std::vector<int>& g, int h) { return h + g.back() >= 0; };
    for (int r1 = 0; r1 <= 3; ++r1) {
      for (int r2 = r1 + 1; r2 <= 3; ++r2) {
        for (const auto* src : {&per_r[r1], &per_r[r2]}) {
          for (const auto& [g, c] : *src) {
            if (!visible(g, r1 + i) || !visible(g, r2 + i)) continue;
            const oracle::Z c1 = per_r[r1].count(g) ? per_r[r1].at(g) : oracle::Z(0);
            const oracle::Z c2 = per_r[r2].count(g) ? per_r[r2].at(g) : oracle::Z(0);
            if (c1 != c2) {
              return fail("i=" + std::to_string(i) + " gamma " + support::show(g) + " differs between r=" + std::to_string(r1) +
                          " and r=" + std::to_string(r2));
            }
          }
        }
      }
    }
  }
  return {};
}

Outcome criterion_nonnegative() {
  for (const auto& pr : produced) {
    for (const auto& [lambda, c] : pr.x) {
      if (c < 0) return fail(where(pr.origin, pr.params) + " has s" + support::show(lambda) + " with coefficient " + c.get_str());
    }
  }
  return {};
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden lowest-codimension forms, i <= 5", 1, criterion_golden_lowest},
      {2, "Morin family", 1, criterion_golden_morin},
      {3, "Sigma^{2,1} closed form, r <= 3", 5, criterion_golden_sigma21},
      {4, "route main2 = main2nice, i <= 4, r <= 3", 30, criterion_routes_main2},
      {5, "lifted bivariate classes = closed forms, i <= 3", 60, criterion_routes_lift},
      {6, "pushforward engine = closed forms on the overlap", 300, criterion_routes_general},
      {7, "restriction equations on the overlap grid", 300, criterion_restriction},
      {8, "vanishing conditions on every computed polynomial", 10, criterion_vanishing},
      {9, "supersymmetric kernel and factorization, n, p <= 3, |lambda| <= 10", 60, criterion_supersymmetric},
      {10, "LR, tensor lemma, gbinom triangle, E determinants", 120, criterion_combinatorial},
      {11, "Thom series r-independence and sign pattern, i <= 3", 60, criterion_series},
      {12, "nonnegative coefficients on everything from 1-6", 1, criterion_nonnegative},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.witness && dt > c.limit_seconds) o = fail("took longer than the limit");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %gs", dt, c.limit_seconds);
    std::cout << (o.witness ? "FAIL" : "PASS") << " [" << (c.id < 10 ? " " : "") << c.id << "] " << c.name << " (" << timing
              << ")";
    if (o.witness) std::cout << ": " << *o.witness;
    std::cout << std::endl;
    if (o.witness) ++failures;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
