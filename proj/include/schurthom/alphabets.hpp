#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schurthom/numbers.hpp"
#include "schurthom/partitions.hpp"
#include "schurthom/poly.hpp"
#include "schurthom/schur.hpp"

namespace schurthom {

/// Exact polynomial in Chern-root variables. Rational coefficients; final
/// Thom-polynomial data is checked for integrality before leaving the
/// engine.
using AlphabetPoly = RatPoly;

/// A named block of consecutive root variables [offset, offset + size).
struct Alphabet {
  std::string name;
  int offset = 0;
  int size = 0;

  int var(int k) const { return offset + k; }
  bool contains(int v) const { return v >= offset && v < offset + size; }
};

/// The standard layout for a pair of alphabets: A-roots are variables
/// 0..n-1 and B-roots n..n+p-1.
struct AlphabetPair {
  Alphabet A;
  Alphabet B;
  static AlphabetPair make(int n, int p) { return {{"A", 0, n}, {"B", n, p}}; }
  std::vector<std::string> names() const;
};

/// Integer linear combination of products s_alpha(A) s_beta(B). Keys are
/// (A-partition, B-partition).
class BivariateSchurExpr {
 public:
  using Key = std::pair<Partition, Partition>;
  using Terms = std::map<Key, Integer>;

  BivariateSchurExpr() = default;
  static BivariateSchurExpr basis(const Partition& a, const Partition& b, const Integer& c = 1);
  static BivariateSchurExpr one() { return basis({}, {}); }

  void add_term(const Partition& a, const Partition& b, const Integer& c);
  Integer coefficient(const Partition& a, const Partition& b) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Terms with |alpha| + |beta| == degree.
  BivariateSchurExpr homogeneous_part(int degree) const;
  int max_degree() const;

  BivariateSchurExpr& operator+=(const BivariateSchurExpr& o);
  BivariateSchurExpr& operator-=(const BivariateSchurExpr& o);
  BivariateSchurExpr& operator*=(const Integer& c);
  friend BivariateSchurExpr operator+(BivariateSchurExpr a, const BivariateSchurExpr& b) { return a += b; }
  friend BivariateSchurExpr operator-(BivariateSchurExpr a, const BivariateSchurExpr& b) { return a -= b; }
  friend BivariateSchurExpr operator*(BivariateSchurExpr a, const Integer& c) { return a *= c; }
  friend bool operator==(const BivariateSchurExpr&, const BivariateSchurExpr&) = default;

  /// e.g. "s[1](B) - 2*s[1](A)"; the empty partition prints as 1.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Product in Z[a_1..a_n, b_1..b_p]: Littlewood-Richardson in each alphabet,
/// dropping partitions longer than the rank.
BivariateSchurExpr bischur_multiply(const BivariateSchurExpr& x, const BivariateSchurExpr& y, int n,
                                    int p);

/// Elementary and complete symmetric polynomials of the roots of X.
IntPoly elementary(int k, const Alphabet& X);
IntPoly complete(int k, const Alphabet& X);

/// s_lambda on the roots of X; zero when l(lambda) > |X|. Uses the
/// branching rule over the variables and is memoized per (lambda, X).
const IntPoly& schur_eval_int(const Partition& lambda, const Alphabet& X);
AlphabetPoly schur_eval(const Partition& lambda, const Alphabet& X);

/// Evaluates sum e_{alpha,beta} s_alpha(A) s_beta(B) on roots.
AlphabetPoly eval_bischur(const BivariateSchurExpr& x, const Alphabet& A, const Alphabet& B);

/// True iff x is invariant under every adjacent transposition of X.
bool is_symmetric_in(const AlphabetPoly& x, const Alphabet& X);

/// Unique expansion sum e_{alpha,beta} s_alpha(A) s_beta(B) with
/// l(alpha) <= |A| and l(beta) <= |B|, by greedy lex-leading-term
/// extraction. The expansion is exact in the finite-rank ring.
///
/// With `require_faithful`, each alphabet must have at least deg(x)
/// variables, so that the coefficients also equal those of the universal
/// (rank-free) expansion.
///
/// Throws std::invalid_argument on non-symmetric input, non-integral
/// coefficients, variables outside A and B, or (when requested) alphabets
/// below the faithfulness bound.
BivariateSchurExpr to_bischur(const AlphabetPoly& x, const Alphabet& A, const Alphabet& B,
                              bool require_faithful = false);

/// Formal bundle: a virtual sum of line weights. `positive` weights are
/// honest summands, `negative` ones are subtracted in K-theory.
class Bundle {
 public:
  static Bundle of(const Alphabet& X);
  static Bundle line(const AlphabetPoly& weight);

  Bundle dual() const;
  Bundle operator+(const Bundle& o) const;
  Bundle operator-(const Bundle& o) const;
  /// Tensor product; both factors must be honest bundles.
  Bundle tensor(const Bundle& o) const;
  /// Second symmetric power; must be an honest bundle.
  Bundle sym2() const;

  bool is_virtual() const { return !negative_.empty(); }
  int rank() const { return static_cast<int>(positive_.size()) - static_cast<int>(negative_.size()); }
  const std::vector<AlphabetPoly>& positive() const { return positive_; }
  const std::vector<AlphabetPoly>& negative() const { return negative_; }

 private:
  std::vector<AlphabetPoly> positive_;
  std::vector<AlphabetPoly> negative_;
};

/// Total Chern class prod(1 + w) / prod(1 + w'), truncated at `degree_cap`.
AlphabetPoly chern_total(const Bundle& E, int degree_cap);

/// Euler class of Hom(A, B): prod_{i,l} (beta_l - alpha_i).
AlphabetPoly euler_hom(const Alphabet& A, const Alphabet& B);

/// Root-variable image of x under c_k -> c_k(B^p - A^n), in the layout
/// AlphabetPair::make(n, p). Goes through the c-form of x.
AlphabetPoly rho(const SchurExpr& x, int n, int p);

/// The same image expanded in s_alpha(A) s_beta(B), computed through skew
/// Littlewood-Richardson expansions: s_lambda(B - A) =
/// sum_kappa (-1)^{|kappa|} s_{conj kappa}(A) s_{lambda/kappa}(B).
BivariateSchurExpr rho_bischur(const SchurExpr& x, int n, int p);

/// Euler class of Hom(A^n, B^p) in the bivariate Schur basis.
BivariateSchurExpr euler_bischur(int n, int p);

}  // namespace schurthom
