#include "schurthom/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schurthom/detforms.hpp"

namespace schurthom {

VerificationReport VerificationReport::pass(std::string name, std::string params) {
  return {std::move(name), std::move(params), true, std::nullopt};
}

VerificationReport VerificationReport::fail(std::string name, std::string params, std::string witness) {
  return {std::move(name), std::move(params), false, std::move(witness)};
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

namespace {

std::string first_terms(const BivariateSchurExpr& x, std::size_t limit = 3) {
  BivariateSchurExpr head;
  for (const auto& [k, c] : x.terms()) {
    if (head.size() == limit) break;
    head.add_term(k.first, k.second, c);
  }
  std::string out = head.to_string();
  if (x.size() > limit) out += " + ... (" + std::to_string(x.size()) + " terms)";
  return out;
}

std::string first_terms(const AlphabetPoly& x, const std::vector<std::string>& names) {
  std::string s = x.to_string(names);
  if (s.size() > 200) s = s.substr(0, 200) + " ...";
  return s;
}

std::string term_string(const Partition& lambda, const Integer& c) {
  return c.get_str() + "*s" + lambda.to_string();
}

}  // namespace

VerificationReport check_restriction_1(const SchurExpr& x, const SingularityParams& params, RestrictionMode mode) {
  const std::string name = "restriction-1";
  const int n = params.i - 1;
  const int p = params.h() - 1;
  if (mode == RestrictionMode::roots) {
    const AlphabetPoly image = rho(x, n, p);
    if (image.is_zero()) return VerificationReport::pass(name, params.to_string());
    return VerificationReport::fail(name, params.to_string(),
                                    "nonzero image " + first_terms(image, AlphabetPair::make(n, p).names()));
  }
  const BivariateSchurExpr image = rho_bischur(x, n, p);
  if (image.is_zero()) return VerificationReport::pass(name, params.to_string());
  return VerificationReport::fail(name, params.to_string(), "nonzero image " + first_terms(image));
}

VerificationReport check_restriction_2(const SchurExpr& x, const SingularityParams& params,
                                       const BivariateSchurExpr& bullet, RestrictionMode mode) {
  const std::string name = "restriction-2";
  const int n = params.i;
  const int p = params.h();
  if (mode == RestrictionMode::roots) {
    const auto layout = AlphabetPair::make(n, p);
    const AlphabetPoly diff = rho(x, n, p) - euler_hom(layout.A, layout.B) * eval_bischur(bullet, layout.A, layout.B);
    if (diff.is_zero()) return VerificationReport::pass(name, params.to_string());
    return VerificationReport::fail(name, params.to_string(), "difference " + first_terms(diff, layout.names()));
  }
  const BivariateSchurExpr diff = rho_bischur(x, n, p) - bischur_multiply(euler_bischur(n, p), bullet, n, p);
  if (diff.is_zero()) return VerificationReport::pass(name, params.to_string());
  return VerificationReport::fail(name, params.to_string(), "difference " + first_terms(diff));
}

VerificationReport check_vanishing(const SchurExpr& x, const SingularityParams& params) {
  const std::string name = "vanishing";
  const int i = params.i;
  const int h = params.h();
  const int k = params.k();
  for (const auto& [lambda, c] : x.terms()) {
    const std::size_t hh = static_cast<std::size_t>(h);
    if (h > 0 && lambda.part(hh - 1) < i) {
      return VerificationReport::fail(name, params.to_string(), term_string(lambda, c) + " violates (a)");
    }
    if (lambda.part(hh) >= i + 1) {
      return VerificationReport::fail(name, params.to_string(), term_string(lambda, c) + " violates (b)");
    }
    if (lambda.first() > i + k) {
      return VerificationReport::fail(name, params.to_string(), term_string(lambda, c) + " violates (c)");
    }
  }
  return VerificationReport::pass(name, params.to_string());
}

VerificationReport check_nonnegative(const SchurExpr& x, const std::string& name, const std::string& params) {
  for (const auto& [lambda, c] : x.terms()) {
    if (c < 0) return VerificationReport::fail(name, params, "negative coefficient " + term_string(lambda, c));
  }
  return VerificationReport::pass(name, params);
}

std::vector<VerificationReport> verify_singularity(const SingularityParams& params, Route route) {
  const SchurExpr x = thom_polynomial(params, route);
  const BivariateSchurExpr bullet = bullet_class(params);
  return {check_restriction_1(x, params), check_restriction_2(x, params, bullet), check_vanishing(x, params),
          check_nonnegative(x, "nonnegativity", params.to_string())};
}

// ---------------------------------------------------------------------------
// Known closed forms

SchurExpr golden_sigma_lowest(int i, int j) {
  SchurExpr out;
  switch (j) {
    case 0:
      out.add_term({i}, 1);
      break;
    case 1:
      out.add_term({i + 1}, i);
      out.add_term({i, 1}, 2);
      break;
    case 2:
      out.add_term({i + 3}, binom(i + 1, 3));
      out.add_term({i + 2, 1}, Integer(i * i - 1));
      out.add_term({i + 1, 2}, 2 * (i + 1));
      out.add_term({i + 1, 1, 1}, 2 * (i - 1));
      out.add_term({i, 2, 1}, 4);
      break;
    default:
      throw std::invalid_argument("golden_sigma_lowest: only j <= 2 has a closed form");
  }
  return out;
}

SchurExpr golden_morin(int r) {
  SchurExpr out;
  if (r >= 0) {
    for (int k = 0; k <= r + 1; ++k) {
      std::vector<int> parts(static_cast<std::size_t>(r + 1 - k), 2);
      parts.insert(parts.end(), static_cast<std::size_t>(2 * k), 1);
      out.add_term(Partition(parts), pow2(static_cast<unsigned long>(k)));
    }
  } else {
    out.add_term({1 - r, 1}, 2);
    out.add_term({2 - r}, 1 - r);
  }
  return out;
}

SchurExpr golden_sigma21(int r) {
  const int h = r + 2;
  SchurExpr out;
  for (int a = 0; a <= h; ++a) {
    for (int b = 0; b <= a; ++b) {
      const int total = a + b - 1;
      for (int c = 0; 2 * c <= total; ++c) {
        const int d = total - c;
        const Integer coeff = gbinom(a + 1, d + 1) * gbinom(b, c) - gbinom(a + 1, c) * gbinom(b, d + 1);
        if (coeff == 0) continue;
        out.add_term(Partition{h + d, h + c, h - b, h - a}.conjugate(), coeff);
      }
    }
  }
  return out;
}

std::vector<VerificationReport> golden_examples() {
  std::vector<VerificationReport> out;
  auto compare = [&](const std::string& name, const std::string& params, const SchurExpr& computed,
                     const SchurExpr& expected) {
    if (computed == expected) {
      out.push_back(VerificationReport::pass(name, params));
    } else {
      out.push_back(VerificationReport::fail(name, params,
                                             "computed " + computed.to_string() + " expected " + expected.to_string()));
    }
  };
  for (int i = 1; i <= 5; ++i) {
    for (int j = 0; j <= std::min(2, i); ++j) {
      compare("golden-lowest", SingularityParams{i, j, -i + 1}.to_string(), tp_main1(i, j), golden_sigma_lowest(i, j));
    }
  }
  for (int r = 0; r <= 4; ++r) {
    compare("golden-morin", SingularityParams{1, 1, r}.to_string(), tp_main2nice(1, r), golden_morin(r));
  }
  for (int r = -1; r >= -4; --r) {
    compare("golden-morin", SingularityParams{1 - r, 1, r}.to_string(), tp_main2nice(1 - r, r), golden_morin(r));
  }
  for (int r = 0; r <= 3; ++r) {
    compare("golden-sigma21", SingularityParams{2, 1, r}.to_string(), tp_main2nice(2, r), golden_sigma21(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson oracle

Integer lr_bruteforce(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (mu.weight() + nu.weight() != lambda.weight()) return 0;
  const int n = static_cast<int>(lambda.length()) + 1;
  if (n > Monomial::kMaxVars) throw std::invalid_argument("lr_bruteforce: too many variables");
  const Alphabet X{"x", 0, n};
  const IntPoly& sm = schur_eval_int(mu, X);
  const IntPoly& sn = schur_eval_int(nu, X);

  // s_mu s_nu is symmetric, so its coefficient at an exponent vector only
  // depends on the sorted vector.
  std::map<std::vector<int>, Integer> product_coeff;
  auto coeff_at = [&](std::vector<int> e) -> Integer {
    std::sort(e.begin(), e.end(), std::greater<int>());
    auto it = product_coeff.find(e);
    if (it != product_coeff.end()) return it->second;
    Integer total = 0;
    for (const auto& [m, c] : sm.terms()) {
      Monomial rest;
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        const int x = e[static_cast<std::size_t>(v)] - m.exponent(v);
        if (x < 0) ok = false;
        else rest.set_exponent(v, x);
      }
      if (ok) total += c * sn.coefficient(rest);
    }
    product_coeff.emplace(e, total);
    return total;
  };

  // Coefficient of x^{lambda+delta} in (s_mu s_nu) a_delta, expanding the
  // alternant over permutations of delta.
  std::vector<int> e(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  Integer result = 0;
  auto rec = [&](auto&& self, int k, int inversions) -> void {
    if (k == n) {
      const Integer c = coeff_at(e);
      if (inversions % 2) result -= c;
      else result += c;
      return;
    }
    const int target = lambda.part(static_cast<std::size_t>(k)) + (n - 1 - k);
    int smaller_used = 0;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) {
        ++smaller_used;
        continue;
      }
      if (target - v < 0) break;
      used[static_cast<std::size_t>(v)] = true;
      e[static_cast<std::size_t>(k)] = target - v;
      self(self, k + 1, inversions + smaller_used);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 0, 0);
  return result;
}

VerificationReport check_lr_suite(int max_weight) {
  const std::string params = "max_weight=" + std::to_string(max_weight);
  for (int w = 0; w <= max_weight; ++w) {
    for (const auto& lambda : partitions_of(w)) {
      for (int a = 0; a <= w; ++a) {
        for (const auto& mu : partitions_of(a)) {
          for (const auto& nu : partitions_of(w - a)) {
            const Integer fast = lr_coefficient(mu, nu, lambda);
            const Integer slow = lr_bruteforce(mu, nu, lambda);
            if (fast != slow) {
              return VerificationReport::fail("lr-oracle", params,
                                              "c(" + mu.to_string() + "," + nu.to_string() + ";" + lambda.to_string() +
                                                  "): tableau " + fast.get_str() + " oracle " + slow.get_str());
            }
          }
        }
      }
    }
  }
  return VerificationReport::pass("lr-oracle", params);
}

// ---------------------------------------------------------------------------
// Supersymmetric specialization

std::vector<VerificationReport> check_factorization_suite(int n_max, int p_max, int deg_max) {
  std::vector<VerificationReport> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int p = 1; p <= p_max; ++p) {
      const std::string params = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " deg<=" + std::to_string(deg_max);
      const auto layout = AlphabetPair::make(n, p);
      const AlphabetPoly euler = euler_hom(layout.A, layout.B);
      std::optional<std::string> kernel_witness;
      std::optional<std::string> factor_witness;
      for (int w = 0; w <= deg_max; ++w) {
        for (const auto& lambda : partitions_of(w)) {
          const SchurExpr s = SchurExpr::basis(lambda);
          const std::size_t pp = static_cast<std::size_t>(p);
          if (lambda.part(pp - 1) < n) continue;  // (n^p) ⊄ lambda
          if (!kernel_witness && !rho(s, n - 1, p - 1).is_zero()) {
            kernel_witness = "rho_{" + std::to_string(n - 1) + "," + std::to_string(p - 1) + "}(s" + lambda.to_string() +
                             ") is nonzero";
          }
          if (factor_witness) continue;
          const AlphabetPoly image = rho(s, n, p);
          if (lambda.part(pp) >= n + 1) {
            if (!image.is_zero()) factor_witness = "rho(s" + lambda.to_string() + ") is nonzero";
            continue;
          }
          std::vector<int> beta;
          for (std::size_t k = 0; k < pp; ++k) beta.push_back(lambda.part(k) - n);
          const std::vector<int> alpha(lambda.parts().begin() + std::min(pp, lambda.length()), lambda.parts().end());
          const Partition a(alpha);
          const Partition b(beta);
          AlphabetPoly expected = euler * schur_eval(a.conjugate(), layout.A) * schur_eval(b, layout.B);
          if (a.weight() % 2) expected *= Rational(-1);
          if (!(image == expected)) factor_witness = "factorization fails for s" + lambda.to_string();
        }
      }
      out.push_back(kernel_witness ? VerificationReport::fail("kernel", params, *kernel_witness)
                                   : VerificationReport::pass("kernel", params));
      out.push_back(factor_witness ? VerificationReport::fail("factorization", params, *factor_witness)
                                   : VerificationReport::pass("factorization", params));
    }
  }
  return out;
}

std::vector<VerificationReport> check_lascoux_suite(int n_max, int p_max, int deg_max) {
  std::vector<VerificationReport> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int p = 1; p <= p_max; ++p) {
      const std::string params = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      const auto layout = AlphabetPair::make(n, p);
      const AlphabetPoly total = chern_total(Bundle::of(layout.A).tensor(Bundle::of(layout.B)), n * p);
      const BivariateSchurExpr roots = to_bischur(total, layout.A, layout.B);
      const BivariateSchurExpr lemma = lascoux_tensor_expand(n, p);
      out.push_back(roots == lemma ? VerificationReport::pass("lascoux-tensor", params)
                                   : VerificationReport::fail("lascoux-tensor", params,
                                                              "difference " + first_terms(roots - lemma)));
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    const std::string params = "n=" + std::to_string(n) + " deg<=" + std::to_string(deg_max);
    const Alphabet A{"A", 0, n};
    const IntPoly t = IntPoly::variable(n);
    std::vector<IntPoly> shifted;
    for (int k = 0; k < n; ++k) shifted.push_back(IntPoly::variable(A.var(k)) + t);
    std::optional<std::string> witness;
    for (int w = 0; w <= deg_max && !witness; ++w) {
      for (const auto& lambda : partitions_of(w, n)) {
        const IntPoly lhs = schur_eval_int(lambda, A).substitute(shifted);
        IntPoly rhs;
        for (const auto& term : lascoux_line_expand(lambda, n)) {
          rhs += schur_eval_int(term.mu, A) * t.pow(term.power) * term.coeff;
        }
        if (!(lhs == rhs)) {
          witness = "s" + lambda.to_string() + "(A (x) L) differs";
          break;
        }
      }
    }
    out.push_back(witness ? VerificationReport::fail("lascoux-line", params, *witness)
                          : VerificationReport::pass("lascoux-line", params));
  }
  return out;
}

VerificationReport check_series(int i, const std::vector<int>& r_values) {
  std::string params = "i=" + std::to_string(i) + " r=";
  for (std::size_t k = 0; k < r_values.size(); ++k) params += (k ? "," : "") + std::to_string(r_values[k]);
  if (r_values.empty()) return VerificationReport::pass("series", params);
  const int witness_r = *std::max_element(r_values.begin(), r_values.end());
  const ThomSeriesExpr witness = thom_series(i, witness_r);
  if (!witness.sign_pattern_holds()) {
    return VerificationReport::fail("series", params, "sign pattern violated at r=" + std::to_string(witness_r));
  }
  for (int r : r_values) {
    const ThomSeriesExpr s = thom_series(i, r);
    if (!s.sign_pattern_holds()) {
      return VerificationReport::fail("series", params, "sign pattern violated at r=" + std::to_string(r));
    }
    if (!series_consistent(s, r + i, witness, witness_r + i)) {
      return VerificationReport::fail("series", params,
                                      "coefficients at r=" + std::to_string(r) + " differ from r=" + std::to_string(witness_r));
    }
    if (!(witness.evaluate(r + i) == tp_main2nice(i, r))) {
      return VerificationReport::fail("series", params, "reconstruction fails at r=" + std::to_string(r));
    }
  }
  return VerificationReport::pass("series", params);
}

}  // namespace schurthom
