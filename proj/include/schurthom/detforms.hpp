#pragma once

#include <vector>

#include "schurthom/alphabets.hpp"
#include "schurthom/numbers.hpp"
#include "schurthom/partitions.hpp"

namespace schurthom {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t dim() const { return n_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  /// Fraction-free (Bareiss) elimination with row pivoting. det of the
  /// 0x0 matrix is 1.
  Integer determinant() const;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

/// Binomial coefficient; 0 when k < 0 or k > n. Rows are memoized.
Integer binom(int n, int k);

/// sum_{j=0}^{k} binom(n, j); 0 for k < 0 and 2^n for k >= n.
Integer gbinom(int n, int k);

/// det[ binom(lambda_k + n - k, mu_l + n - l) ]_{n x n}.
/// Throws std::invalid_argument if l(lambda) > n or l(mu) > n.
Integer E(const Partition& lambda, const Partition& mu, int n);

/// det[ gbinom(lambda_k + n - k, mu_l + n - l) ]_{n x n}, same domain as E.
Integer F(const Partition& lambda, const Partition& mu, int n);

/// Total Chern class of A^n (x) B^p in the bivariate Schur basis:
/// sum over mu ⊂ lambda ⊂ (p^n) of E_{lambda/mu}(n) s_mu(A) s_{complement(conj lambda)}(B),
/// complement taken in the block (n^p). Inhomogeneous.
BivariateSchurExpr lascoux_tensor_expand(int n, int p);

struct LineTerm {
  Partition mu;
  int power = 0;  // exponent of c_1(L)
  Integer coeff;
  friend bool operator==(const LineTerm&, const LineTerm&) = default;
};

/// s_lambda(A (x) L) = sum_{mu ⊂ lambda} E_{lambda/mu}(n) c_1(L)^{|lambda|-|mu|} s_mu(A)
/// for a rank-n bundle A and a line bundle L. Zero coefficients are dropped.
std::vector<LineTerm> lascoux_line_expand(const Partition& lambda, int n);

/// Builds B with B[k][l] = A[k][l+1] (last column zero) and tests
/// det(A + beta B) == det(A).
bool det_shift_invariance_check(const IntMatrix& A, const Integer& beta);

}  // namespace schurthom
