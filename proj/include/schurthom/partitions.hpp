#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schurthom {

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so two partitions compare
/// equal iff their stored parts agree. `part(k)` realizes the convention
/// that parts beyond the length are zero.
///
/// The ordering `operator<` is the canonical output order: by weight, then
/// lexicographically *descending* within one weight, so (2) sorts before
/// (1,1) and (4,2) before (4,1,1).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Builds a partition from a sequence that may contain trailing zeros.
  /// Throws std::invalid_argument on increasing or negative entries.
  static Partition from_parts(std::span<const int> parts);

  /// Parses "(3,1,1)" or "()"; whitespace is ignored.
  static Partition parse(std::string_view text);

  /// The block (n^k): k rows of length n.
  static Partition block(int n, int k);

  /// (j, j-1, ..., 1).
  static Partition staircase(int j);

  int part(std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int first() const { return part(0); }

  const std::vector<int>& parts() const { return parts_; }

  /// Parts padded with zeros up to `n` entries (n >= length()).
  std::vector<int> padded(std::size_t n) const;

  Partition conjugate() const;

  /// True iff this ⊂ other componentwise.
  bool contained_in(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b);
  friend bool operator>(const Partition& a, const Partition& b) { return b < a; }

 private:
  std::vector<int> parts_;
};

/// Conjugate (dual) partition.
Partition conjugate(const Partition& lambda);

/// Complement of lambda inside the block (n^k): entry j is n - lambda_{k+1-j}.
/// Throws std::invalid_argument when lambda is not inside the block.
Partition complement(const Partition& lambda, int n, int k);

/// Concatenation (lambda, mu). Throws if the result is not a partition.
Partition concat(const Partition& lambda, const Partition& mu);

/// Pointwise sum lambda + mu.
Partition add(const Partition& lambda, const Partition& mu);

/// All partitions of `weight` with at most `max_len` parts, each at most
/// `max_part` (negative bound means unbounded). Canonical order.
std::vector<Partition> partitions_of(int weight, int max_len = -1, int max_part = -1);

/// All partitions contained in the block (n^k), i.e. at most k parts, each
/// at most n. Canonical order.
std::vector<Partition> partitions_in_block(int n, int k);

/// All partitions mu with mu ⊂ lambda. Canonical order.
std::vector<Partition> subpartitions(const Partition& lambda);

/// Result of straightening a generalized Schur index.
struct SignedIndex {
  int sign = 0;  // -1, 0, +1
  Partition partition;

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// Rewrites an arbitrary integer sequence `a` so that the Jacobi-Trudi
/// determinant det[h_{a_k - k + l}] equals sign * s_partition.
///
/// Applies the exchange (..., a, b, ...) -> -(..., b-1, a+1, ...) on adjacent
/// increasing pairs until the sequence is weakly decreasing. A pair with
/// a == b - 1 or a negative final entry gives sign 0.
SignedIndex straighten(std::span<const int> a);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace schurthom
