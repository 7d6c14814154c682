#include "schurthom/detforms.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace schurthom {

Integer IntMatrix::determinant() const {
  const std::size_t n = n_;
  if (n == 0) return 1;
  std::vector<Integer> m = data_;
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * n + c]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c));
        mpz_divexact(at(r, c).get_mpz_t(), at(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

namespace {

class BinomialRows {
 public:
  const std::vector<Integer>& row(int n) {
    {
      std::shared_lock lock(mutex_);
      auto it = rows_.find(n);
      if (it != rows_.end()) return it->second;
    }
    // Multiplicative formula: C(n, k+1) = C(n, k) * (n - k) / (k + 1).
    std::vector<Integer> r(static_cast<std::size_t>(n) + 1);
    r[0] = 1;
    for (int k = 0; k < n; ++k) {
      r[static_cast<std::size_t>(k) + 1] = r[static_cast<std::size_t>(k)] * (n - k);
      mpz_divexact_ui(r[static_cast<std::size_t>(k) + 1].get_mpz_t(),
                      r[static_cast<std::size_t>(k) + 1].get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    std::unique_lock lock(mutex_);
    return rows_.emplace(n, std::move(r)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<int, std::vector<Integer>> rows_;
};

BinomialRows& binomial_rows() {
  static BinomialRows rows;
  return rows;
}

void check_lengths(const Partition& lambda, const Partition& mu, int n, const char* what) {
  if (n < 0 || static_cast<int>(lambda.length()) > n || static_cast<int>(mu.length()) > n) {
    throw std::invalid_argument(std::string(what) + ": partitions " + lambda.to_string() + ", " +
                                mu.to_string() + " do not fit in " + std::to_string(n) + " rows");
  }
}

template <class Entry>
Integer binomial_determinant(const Partition& lambda, const Partition& mu, int n, Entry entry) {
  IntMatrix m(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      m(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) =
          entry(lambda.part(static_cast<std::size_t>(k)) + n - 1 - k, mu.part(static_cast<std::size_t>(l)) + n - 1 - l);
    }
  }
  return m.determinant();
}

}  // namespace

Integer binom(int n, int k) {
  if (n < 0) throw std::invalid_argument("binom: negative upper index");
  if (k < 0 || k > n) return 0;
  return binomial_rows().row(n)[static_cast<std::size_t>(k)];
}

Integer gbinom(int n, int k) {
  if (n < 0) throw std::invalid_argument("gbinom: negative upper index");
  if (k < 0) return 0;
  if (k >= n) return pow2(static_cast<unsigned long>(n));
  const auto& row = binomial_rows().row(n);
  Integer s = 0;
  for (int j = 0; j <= k; ++j) s += row[static_cast<std::size_t>(j)];
  return s;
}

Integer E(const Partition& lambda, const Partition& mu, int n) {
  check_lengths(lambda, mu, n, "E");
  return binomial_determinant(lambda, mu, n, [](int a, int b) { return binom(a, b); });
}

Integer F(const Partition& lambda, const Partition& mu, int n) {
  check_lengths(lambda, mu, n, "F");
  return binomial_determinant(lambda, mu, n, [](int a, int b) { return gbinom(a, b); });
}

BivariateSchurExpr lascoux_tensor_expand(int n, int p) {
  if (n < 0 || p < 0) throw std::invalid_argument("lascoux_tensor_expand: negative rank");
  BivariateSchurExpr out;
  for (const auto& lambda : partitions_in_block(p, n)) {
    const Partition b = complement(lambda.conjugate(), n, p);
    for (const auto& mu : subpartitions(lambda)) {
      out.add_term(mu, b, E(lambda, mu, n));
    }
  }
  return out;
}

std::vector<LineTerm> lascoux_line_expand(const Partition& lambda, int n) {
  if (static_cast<int>(lambda.length()) > n) {
    throw std::invalid_argument("lascoux_line_expand: l(lambda) exceeds the rank");
  }
  std::vector<LineTerm> out;
  for (const auto& mu : subpartitions(lambda)) {
    Integer c = E(lambda, mu, n);
    if (c != 0) out.push_back({mu, lambda.weight() - mu.weight(), std::move(c)});
  }
  return out;
}

bool det_shift_invariance_check(const IntMatrix& A, const Integer& beta) {
  const std::size_t n = A.dim();
  IntMatrix shifted(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const Integer b = l + 1 < n ? A(k, l + 1) : Integer(0);
      shifted(k, l) = A(k, l) + beta * b;
    }
  }
  return shifted.determinant() == A.determinant();
}

}  // namespace schurthom
