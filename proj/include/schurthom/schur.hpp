#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "schurthom/numbers.hpp"
#include "schurthom/partitions.hpp"

namespace schurthom {

/// Integer linear combination of Schur basis elements s_lambda in the
/// universal Chern variables c_1, c_2, ...
///
/// Zero coefficients are never stored. Iteration follows the canonical
/// partition order.
class SchurExpr {
 public:
  using Terms = std::map<Partition, Integer>;

  SchurExpr() = default;
  static SchurExpr basis(const Partition& lambda, const Integer& coeff = 1);
  static SchurExpr one() { return basis(Partition{}); }

  void add_term(const Partition& lambda, const Integer& coeff);
  Integer coefficient(const Partition& lambda) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest |lambda| among the terms; -1 for the zero expression.
  int max_degree() const;
  bool is_homogeneous() const;
  SchurExpr homogeneous_part(int degree) const;

  SchurExpr& operator+=(const SchurExpr& o);
  SchurExpr& operator-=(const SchurExpr& o);
  SchurExpr& operator*=(const Integer& c);
  friend SchurExpr operator+(SchurExpr a, const SchurExpr& b) { return a += b; }
  friend SchurExpr operator-(SchurExpr a, const SchurExpr& b) { return a -= b; }
  friend SchurExpr operator-(SchurExpr a) { return a *= -1; }
  friend SchurExpr operator*(SchurExpr a, const Integer& c) { return a *= c; }
  friend SchurExpr operator*(const Integer& c, SchurExpr a) { return a *= c; }
  friend bool operator==(const SchurExpr&, const SchurExpr&) = default;

  /// Plain text, e.g. "s[2] + 2*s[1,1]".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}, counted as LR skew
/// tableaux of shape lambda/mu and content nu. Memoized.
Integer lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

/// s_mu * s_nu as a map lambda -> c^lambda_{mu,nu}, dropping every lambda
/// with more than `max_len` rows (negative: keep all). Memoized.
const std::map<Partition, Integer>& lr_product(const Partition& mu, const Partition& nu,
                                               int max_len = -1);

/// Skew Schur expansion s_{lambda/mu} = sum_nu c^lambda_{mu,nu} s_nu,
/// keeping only nu with at most `max_len` rows (negative: keep all).
/// Empty when mu is not inside lambda. Memoized.
const std::map<Partition, Integer>& skew_expand(const Partition& lambda, const Partition& mu,
                                                int max_len = -1);

/// Bilinear extension of s_mu s_nu = sum c^lambda_{mu,nu} s_lambda.
SchurExpr lr_multiply(const SchurExpr& x, const SchurExpr& y);
SchurExpr operator*(const SchurExpr& x, const SchurExpr& y);

/// Partitions lambda such that lambda/mu is a horizontal (row Pieri) or
/// vertical (column Pieri) strip of size k, with at most max_len rows.
std::vector<Partition> pieri_row(const Partition& mu, int k, int max_len = -1);
std::vector<Partition> pieri_col(const Partition& mu, int k, int max_len = -1);

/// A monomial c_{k1} c_{k2} ... c_{km} in the Chern variables, stored as
/// the partition (k1 >= k2 >= ... >= km).
using CMonomial = Partition;

/// Integer polynomial in c_1, c_2, ...
using CPolynomial = std::map<CMonomial, Integer>;

/// s_lambda = det[c_{conj(lambda)_k - k + l}], expanded.
CPolynomial jacobi_trudi(const Partition& lambda);

/// c-form of a Schur expression: sum of coefficient * jacobi_trudi(lambda).
CPolynomial to_c_polynomial(const SchurExpr& x);

/// Expands c_{k1} ... c_{km} in the Schur basis (iterated column Pieri).
SchurExpr c_monomial_to_schur(const CMonomial& m);
SchurExpr c_polynomial_to_schur(const CPolynomial& p);

struct SumTerm {
  Partition mu;
  Partition nu;
  Integer coeff;
  friend bool operator==(const SumTerm&, const SumTerm&) = default;
};

/// s_lambda(A + B) = sum c^lambda_{mu,nu} s_mu(A) s_nu(B).
std::vector<SumTerm> expand_sum(const Partition& lambda);

/// s_lambda -> (-1)^{|lambda|} s_{conj(lambda)} applied termwise.
SchurExpr negate_alphabet(const SchurExpr& x);

/// Shared memo for Littlewood-Richardson data. Readers take a shared lock;
/// a miss computes outside the lock and inserts under an exclusive one, so
/// a race only duplicates work.
class LRTable {
 public:
  static LRTable& instance();

  Integer coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);
  const std::map<Partition, Integer>& product(const Partition& mu, const Partition& nu, int max_len);
  const std::map<Partition, Integer>& skew(const Partition& lambda, const Partition& mu, int max_len);

  std::size_t cached_coefficients() const;
  void clear();

 private:
  using Key3 = std::tuple<Partition, Partition, Partition>;
  using KeyP = std::tuple<Partition, Partition, int>;
  struct Key3Hash {
    std::size_t operator()(const Key3& k) const noexcept;
  };
  struct KeyPHash {
    std::size_t operator()(const KeyP& k) const noexcept;
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key3, Integer, Key3Hash> coefficients_;
  // Node-based maps keep returned references stable across inserts.
  std::unordered_map<KeyP, std::map<Partition, Integer>, KeyPHash> products_;
  std::unordered_map<KeyP, std::map<Partition, Integer>, KeyPHash> skews_;
};

}  // namespace schurthom
