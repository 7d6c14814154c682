#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schurthom/alphabets.hpp"
#include "schurthom/numbers.hpp"
#include "schurthom/partitions.hpp"
#include "schurthom/schur.hpp"

namespace schurthom {

/// Parameters of the second-order singularity Sigma^{i,j}(r).
struct SingularityParams {
  int i = 1;
  int j = 0;
  int r = 0;

  int h() const { return r + i; }
  int k() const { return i * j - j * (j - 1) / 2; }

  /// Throws std::invalid_argument naming the first violated precondition:
  /// i >= 1, 0 <= j <= i, h >= 1.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const SingularityParams&, const SingularityParams&) = default;
};

/// sum over mu ⊂ delta of 2^{|mu| - j(j-1)/2} E(delta, mu, i) s_{(d - |mu|, conj mu)},
/// delta the staircase (j, ..., 1) and d = i + j(j+1)/2. Valid for r = -i+1.
SchurExpr tp_main1(int i, int j);

/// The j = 1 family as a double sum over (lambda, mu) and 0-1 vectors x.
SchurExpr tp_main2(int i, int r);

/// The j = 1 family with F-determinant coefficients.
SchurExpr tp_main2nice(int i, int r);

/// 2^j s_delta(A^* (x) sqrt(L)) for a rank-i bundle A and a line bundle L
/// with Chern root beta; sqrt(L) has root beta/2. B-partitions are single rows.
BivariateSchurExpr sigma_ht(int i, int j);

/// c_{ih-i+1}(A^* (x) B - A) for ranks i and h.
BivariateSchurExpr sigma_porteous(int i, int h);

/// pi_* c_top(B (x) (R (x) Q + Sym^2 R)^*) over Gr_j(A), A of rank i and B of rank p.
BivariateSchurExpr sigma_bullet_pushforward(int i, int p, int j);

/// Classes on Gr_r(E): keys (mu, nu) stand for s_mu(R) s_nu(Q); values are
/// coefficients in an outer alphabet pulled back from the base.
using GrassmannClass = std::map<std::pair<Partition, Partition>, SchurExpr>;

/// pi_*[s_mu(R) s_nu(Q)] = s_{(nu - r^q, mu)}(E), extended linearly over the
/// outer coefficients. Result keys are (E-partition, outer partition).
BivariateSchurExpr gysin_push(const GrassmannClass& x, int r, int q);

/// sum (-1)^{|alpha|} e_{alpha,beta} s_{(i^h + beta, conj alpha)}.
/// Throws when l(alpha) > i or l(beta) > h.
SchurExpr lift_to_universal(const BivariateSchurExpr& x, int i, int h);

/// lift_to_universal(sigma_bullet_pushforward(i, r+i, j), i, r+i).
SchurExpr tp_general(int i, int j, int r);

enum class Route { automatic, main1, main2, main2nice, general };

std::string route_name(Route route);
/// Accepts "auto", "main1", "main2", "main2nice", "general".
Route parse_route(const std::string& name);

/// Resolves `automatic` (main1 when r = -i+1, main2nice when j = 1, else
/// general) and checks that the route applies to params. Throws
/// std::invalid_argument naming the violated precondition.
Route resolve_route(const SingularityParams& params, Route route);

/// [Sigma^{i,j}(r)] by the given route (resolved first).
SchurExpr thom_polynomial(const SingularityParams& params, Route route = Route::automatic);

/// The bivariate class [Sigma^{bullet,j}(A^i, B^h)] matching params: sigma_ht
/// when h = 1, sigma_porteous when j = 1, the pushforward otherwise.
BivariateSchurExpr bullet_class(const SingularityParams& params);

/// Coefficients c_gamma of the Thom series of Sigma^{i,1}. Keys are full
/// length-2i sequences.
struct ThomSeriesExpr {
  int i = 1;
  int j = 1;
  std::map<std::vector<int>, Integer> terms;

  int length() const { return i + i * j - j * (j - 1) / 2; }

  /// sum c_gamma s_{(h^{i+k} + gamma)~}, over the gamma with h + gamma_last >= 0.
  SchurExpr evaluate(int h) const;

  /// Sign pattern gamma_l >= 0 for l <= i and gamma_l <= 0 beyond.
  bool sign_pattern_holds() const;
};

/// Reads the series off tp_main2nice(i, r_witness).
ThomSeriesExpr thom_series(int i, int r_witness);

/// Reads c_gamma off any Sigma^{i,1}(r) polynomial; throws if a term does not
/// have the expected shape.
ThomSeriesExpr extract_series(const SchurExpr& x, int i, int r);

/// True iff the two series agree on every gamma visible at both h values.
bool series_consistent(const ThomSeriesExpr& a, int ha, const ThomSeriesExpr& b, int hb);

}  // namespace schurthom
