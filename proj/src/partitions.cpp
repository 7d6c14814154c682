#include "schurthom/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace schurthom {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0 || (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])) {
      throw std::invalid_argument("not a partition: entries must be weakly decreasing and nonnegative");
    }
  }
}

Partition Partition::from_parts(std::span<const int> parts) {
  return Partition(std::vector<int>(parts.begin(), parts.end()));
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("partition must be written as (p1,p2,...)");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    if (tok.empty()) throw std::invalid_argument("empty entry in partition text");
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad entry in partition text: " + tok);
    parts.push_back(v);
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::block(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("block dimensions must be nonnegative");
  if (n == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(k), n));
}

Partition Partition::staircase(int j) {
  std::vector<int> parts;
  for (int v = j; v >= 1; --v) parts.push_back(v);
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(std::size_t n) const {
  std::vector<int> out(std::max(n, parts_.size()), 0);
  std::copy(parts_.begin(), parts_.end(), out.begin());
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(first()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

bool Partition::contained_in(const Partition& other) const {
  if (parts_.size() > other.parts_.size()) return false;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] > other.parts_[k]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

bool operator<(const Partition& a, const Partition& b) {
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                      a.parts_.end());
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

Partition complement(const Partition& lambda, int n, int k) {
  if (!lambda.contained_in(Partition::block(n, k)) || n < 0 || k < 0) {
    throw std::invalid_argument("complement: " + lambda.to_string() + " is not inside the block (" +
                                std::to_string(n) + "^" + std::to_string(k) + ")");
  }
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = n - lambda.part(static_cast<std::size_t>(k - 1 - j));
  return Partition(std::move(out));
}

Partition concat(const Partition& lambda, const Partition& mu) {
  std::vector<int> out = lambda.parts();
  out.insert(out.end(), mu.parts().begin(), mu.parts().end());
  return Partition(std::move(out));
}

Partition add(const Partition& lambda, const Partition& mu) {
  const std::size_t n = std::max(lambda.length(), mu.length());
  std::vector<int> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = lambda.part(k) + mu.part(k);
  return Partition(std::move(out));
}

namespace {

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_len, int max_part) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> cur;
  partitions_rec(weight, max_part < 0 ? weight : max_part, max_len < 0 ? weight : max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_in_block(int n, int k) {
  std::vector<Partition> out;
  for (int w = 0; w <= n * k; ++w) {
    auto ps = partitions_of(w, k, n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur(lambda.length(), 0);
  // Row k ranges over [0, min(lambda_k, cur_{k-1})].
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    const int hi = k == 0 ? lambda.part(0) : std::min(lambda.part(k), cur[k - 1]);
    for (int v = 0; v <= hi; ++v) {
      cur[k] = v;
      self(self, k + 1);
    }
    cur[k] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SignedIndex straighten(std::span<const int> a) {
  std::vector<int> seq(a.begin(), a.end());
  const std::size_t m = seq.size();
  int sign = 1;
  const std::size_t fuel = m * m + 1;
  std::size_t steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      const int x = seq[k];
      const int y = seq[k + 1];
      if (x >= y) continue;
      if (x == y - 1) return {};
      seq[k] = y - 1;
      seq[k + 1] = x + 1;
      sign = -sign;
      changed = true;
      if (++steps > fuel) throw std::logic_error("straighten: exchange rule exceeded its fuel bound");
    }
  }
  if (m > 0 && seq.back() < 0) return {};
  return {sign, Partition(std::move(seq))};
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace schurthom
