#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurthom/alphabets.hpp"
#include "schurthom/numbers.hpp"
#include "schurthom/partitions.hpp"
#include "schurthom/schur.hpp"
#include "schurthom/thom.hpp"

namespace schurthom {

/// Outcome of one check. A failed report always carries a witness.
struct VerificationReport {
  std::string name;
  std::string params;
  bool passed = false;
  std::optional<std::string> witness;

  static VerificationReport pass(std::string name, std::string params);
  static VerificationReport fail(std::string name, std::string params, std::string witness);
};

bool all_passed(const std::vector<VerificationReport>& reports);

/// How the supersymmetric images are compared. `bischur` works in the basis
/// s_alpha(A) s_beta(B) with l(alpha) <= n, l(beta) <= p; `roots` expands
/// everything into Chern-root polynomials and is only practical for small
/// degrees. Both test the same identity.
enum class RestrictionMode { bischur, roots };

/// Passes iff x vanishes under rho_{i-1, h-1}.
VerificationReport check_restriction_1(const SchurExpr& x, const SingularityParams& params,
                                       RestrictionMode mode = RestrictionMode::bischur);

/// Passes iff rho_{i,h}(x) equals the Euler class of Hom(A, B) times bullet.
VerificationReport check_restriction_2(const SchurExpr& x, const SingularityParams& params,
                                       const BivariateSchurExpr& bullet,
                                       RestrictionMode mode = RestrictionMode::bischur);

/// Every lambda with nonzero coefficient satisfies (i^h) ⊂ lambda,
/// (i+1)^{h+1} ⊄ lambda and lambda_1 <= i + k.
VerificationReport check_vanishing(const SchurExpr& x, const SingularityParams& params);

/// All coefficients are nonnegative.
VerificationReport check_nonnegative(const SchurExpr& x, const std::string& name, const std::string& params);

/// Restriction (both), vanishing and nonnegativity for thom_polynomial(params).
std::vector<VerificationReport> verify_singularity(const SingularityParams& params,
                                                   Route route = Route::automatic);

/// Known closed forms: Sigma^{i,j}(-i+1) for j <= 2, the Morin
/// family and Sigma^{2,1}(r).
SchurExpr golden_sigma_lowest(int i, int j);
SchurExpr golden_morin(int r);
SchurExpr golden_sigma21(int r);
std::vector<VerificationReport> golden_examples();

/// c^lambda_{mu,nu} as the coefficient of x^{lambda + delta} in
/// s_mu s_nu a_delta over l(lambda) + 1 variables.
Integer lr_bruteforce(const Partition& mu, const Partition& nu, const Partition& lambda);

/// lr_coefficient against lr_bruteforce for every triple with |lambda| <= max_weight.
VerificationReport check_lr_suite(int max_weight);

/// Kernel and factorization properties of rho_{n,p} on root variables for
/// 1 <= n <= n_max, 1 <= p <= p_max and |lambda| <= deg_max.
std::vector<VerificationReport> check_factorization_suite(int n_max, int p_max, int deg_max);

/// Both parts of the tensor-product lemma against root-variable evaluation.
std::vector<VerificationReport> check_lascoux_suite(int n_max, int p_max, int deg_max);

/// c_gamma agree across the given r values, and the sign pattern holds.
VerificationReport check_series(int i, const std::vector<int>& r_values);

}  // namespace schurthom
