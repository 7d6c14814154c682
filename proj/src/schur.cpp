#include "schurthom/schur.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace schurthom {

// ---------------------------------------------------------------------------
// SchurExpr

SchurExpr SchurExpr::basis(const Partition& lambda, const Integer& coeff) {
  SchurExpr x;
  x.add_term(lambda, coeff);
  return x;
}

void SchurExpr::add_term(const Partition& lambda, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer SchurExpr::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

int SchurExpr::max_degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) d = std::max(d, p.weight());
  return d;
}

bool SchurExpr::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.weight() == d; });
}

SchurExpr SchurExpr::homogeneous_part(int degree) const {
  SchurExpr out;
  for (const auto& [p, c] : terms_) {
    if (p.weight() == degree) out.terms_.emplace(p, c);
  }
  return out;
}

SchurExpr& SchurExpr::operator+=(const SchurExpr& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SchurExpr& SchurExpr::operator-=(const SchurExpr& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

SchurExpr& SchurExpr::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

std::string SchurExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.get_str() + "*";
    out += "s[";
    for (std::size_t k = 0; k < p.length(); ++k) {
      if (k) out += ',';
      out += std::to_string(p.part(k));
    }
    out += "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson enumeration

namespace {

// Counts LR fillings of lambda/mu row by row. A row of a semistandard
// filling is weakly increasing, so reading it right to left places its
// largest letters first; the lattice condition for the whole row reduces to
// cum[t] + row[t] <= cum[t-1]. Partial fillings with the same letter counts
// and the same entries above the next row are merged.
class SkewSearch {
 public:
  SkewSearch(const Partition& lambda, const Partition& mu, int max_letter,
             const std::vector<int>* content)
      : outer_(lambda.parts()),
        inner_(mu.padded(lambda.length())),
        max_letter_(max_letter),
        content_(content) {}

  void run(std::map<Partition, Integer>& out) {
    const std::size_t letters = static_cast<std::size_t>(std::max(max_letter_, 0)) + 1;
    std::map<Key, Integer> states;
    states[{std::vector<int>{}, std::vector<int>(letters, 0)}] = 1;
    for (std::size_t r = 0; r < outer_.size() && !states.empty(); ++r) {
      std::map<Key, Integer> next;
      for (const auto& [key, mult] : states) extend(r, key, mult, next);
      states = std::move(next);
    }
    for (const auto& [key, mult] : states) {
      std::vector<int> nu;
      for (std::size_t t = 1; t < key.second.size() && key.second[t] > 0; ++t) nu.push_back(key.second[t]);
      if (content_ && nu != *content_) continue;
      out[Partition(std::move(nu))] += mult;
    }
  }

 private:
  // (entries of the last row in the columns of the next row, letter counts)
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  void extend(std::size_t r, const Key& key, const Integer& mult, std::map<Key, Integer>& next) {
    const auto& [above, cum] = key;
    const int lo_col = inner_[r];
    const int hi_col = outer_[r];
    if (lo_col > hi_col) return;
    std::vector<int> row(static_cast<std::size_t>(std::max(hi_col - lo_col, 0)));
    std::vector<int> counts(cum.size(), 0);
    auto emit = [&] {
      for (std::size_t t = 1; t < cum.size(); ++t) {
        if (t >= 2 && cum[t] + counts[t] > cum[t - 1]) return;
        if (content_ && counts[t] > 0 && (t > content_->size() || cum[t] + counts[t] > (*content_)[t - 1])) return;
      }
      std::vector<int> new_cum = cum;
      for (std::size_t t = 1; t < cum.size(); ++t) new_cum[t] += counts[t];
      // Keep only the entries that sit above cells of row r+1.
      std::vector<int> new_above;
      if (r + 1 < outer_.size()) {
        new_above.assign(static_cast<std::size_t>(outer_[r + 1]), 0);
        for (int c = std::max(lo_col, inner_[r + 1]); c < outer_[r + 1]; ++c) {
          new_above[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c - lo_col)];
        }
      }
      next[{std::move(new_above), std::move(new_cum)}] += mult;
    };
    auto rec = [&](auto&& self, int c, int min_letter) -> void {
      if (c == hi_col) {
        emit();
        return;
      }
      int lo = min_letter;
      if (static_cast<std::size_t>(c) < above.size() && above[static_cast<std::size_t>(c)] > 0) {
        lo = std::max(lo, above[static_cast<std::size_t>(c)] + 1);
      }
      for (int t = lo; t <= max_letter_; ++t) {
        row[static_cast<std::size_t>(c - lo_col)] = t;
        ++counts[static_cast<std::size_t>(t)];
        self(self, c + 1, t);
        --counts[static_cast<std::size_t>(t)];
      }
    };
    rec(rec, lo_col, 1);
  }

  std::vector<int> outer_;
  std::vector<int> inner_;
  int max_letter_;
  const std::vector<int>* content_;
};

// Adds the letters 1, 2, ... of nu to mu as successive horizontal strips,
// tracking per-row counts of the previous letter for the lattice condition.
class ProductSearch {
 public:
  ProductSearch(const Partition& mu, const Partition& nu, std::size_t cap)
      : nu_(nu.parts()), shape_(mu.padded(cap)), cap_(cap) {}

  void run(std::map<Partition, Integer>& out) {
    out_ = &out;
    std::vector<int> prev(cap_, 0);
    letter(0, prev);
  }

 private:
  void letter(std::size_t t, const std::vector<int>& prev) {
    if (t == nu_.size()) {
      (*out_)[Partition(shape_)] += 1;
      return;
    }
    std::vector<int> old = shape_;
    std::vector<int> cur(cap_, 0);
    place(t, 0, nu_[t], old, prev, cur, 0, 0);
  }

  void place(std::size_t t, std::size_t r, int remaining, const std::vector<int>& old,
             const std::vector<int>& prev, std::vector<int>& cur, int cum_cur, int cum_prev) {
    if (remaining == 0) {
      letter(t + 1, cur);
      return;
    }
    if (r >= cap_) return;
    if (r > 0 && old[r - 1] == 0) return;
    int hi = remaining;
    if (r > 0) hi = std::min(hi, old[r - 1] - old[r]);
    if (t > 0) hi = std::min(hi, cum_prev - cum_cur);
    for (int n = hi; n >= 0; --n) {
      cur[r] = n;
      shape_[r] = old[r] + n;
      place(t, r + 1, remaining - n, old, prev, cur, cum_cur + n, cum_prev + prev[r]);
    }
    cur[r] = 0;
    shape_[r] = old[r];
  }

  std::vector<int> nu_;
  std::vector<int> shape_;
  std::size_t cap_;
  std::map<Partition, Integer>* out_ = nullptr;
};

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

LRTable& LRTable::instance() {
  static LRTable table;
  return table;
}

std::size_t LRTable::Key3Hash::operator()(const Key3& k) const noexcept {
  PartitionHash h;
  return mix(mix(h(std::get<0>(k)), h(std::get<1>(k))), h(std::get<2>(k)));
}

std::size_t LRTable::KeyPHash::operator()(const KeyP& k) const noexcept {
  PartitionHash h;
  return mix(mix(h(std::get<0>(k)), h(std::get<1>(k))), static_cast<std::size_t>(std::get<2>(k) + 7));
}

Integer LRTable::coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (mu.weight() + nu.weight() != lambda.weight()) return 0;
  if (!mu.contained_in(lambda) || !nu.contained_in(lambda)) return 0;
  const bool swap = nu < mu;
  Key3 key{swap ? nu : mu, swap ? mu : nu, lambda};
  {
    std::shared_lock lock(mutex_);
    auto it = coefficients_.find(key);
    if (it != coefficients_.end()) return it->second;
  }
  std::map<Partition, Integer> found;
  const auto& inner = std::get<0>(key);
  const auto& content = std::get<1>(key);
  SkewSearch search(lambda, inner, static_cast<int>(content.length()), &content.parts());
  search.run(found);
  Integer value = 0;
  if (auto it = found.find(content); it != found.end()) value = it->second;
  std::unique_lock lock(mutex_);
  coefficients_.emplace(std::move(key), value);
  return value;
}

const std::map<Partition, Integer>& LRTable::product(const Partition& mu, const Partition& nu,
                                                     int max_len) {
  const bool swap = nu < mu;
  KeyP key{swap ? nu : mu, swap ? mu : nu, max_len < 0 ? -1 : max_len};
  {
    std::shared_lock lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  // Letters come from the lighter factor; the heavier one is the base shape.
  const Partition& base = std::get<1>(key);
  const Partition& letters = std::get<0>(key);
  std::map<Partition, Integer> result;
  const std::size_t natural = base.length() + letters.length();
  const std::size_t cap = max_len < 0 ? natural : std::min<std::size_t>(natural, static_cast<std::size_t>(max_len));
  if (base.length() <= cap) {
    ProductSearch search(base, letters, cap);
    search.run(result);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = products_.emplace(std::move(key), std::move(result));
  return it->second;
}

const std::map<Partition, Integer>& LRTable::skew(const Partition& lambda, const Partition& mu,
                                                  int max_len) {
  KeyP key{lambda, mu, max_len < 0 ? -1 : max_len};
  {
    std::shared_lock lock(mutex_);
    auto it = skews_.find(key);
    if (it != skews_.end()) return it->second;
  }
  std::map<Partition, Integer> result;
  if (mu.contained_in(lambda)) {
    const int letters = max_len < 0 ? static_cast<int>(lambda.length())
                                    : std::min(max_len, static_cast<int>(lambda.length()));
    SkewSearch search(lambda, mu, letters, nullptr);
    search.run(result);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = skews_.emplace(std::move(key), std::move(result));
  return it->second;
}

std::size_t LRTable::cached_coefficients() const {
  std::shared_lock lock(mutex_);
  return coefficients_.size();
}

void LRTable::clear() {
  std::unique_lock lock(mutex_);
  coefficients_.clear();
  products_.clear();
  skews_.clear();
}

Integer lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
  return LRTable::instance().coefficient(mu, nu, lambda);
}

const std::map<Partition, Integer>& lr_product(const Partition& mu, const Partition& nu, int max_len) {
  return LRTable::instance().product(mu, nu, max_len);
}

const std::map<Partition, Integer>& skew_expand(const Partition& lambda, const Partition& mu,
                                                int max_len) {
  return LRTable::instance().skew(lambda, mu, max_len);
}

SchurExpr lr_multiply(const SchurExpr& x, const SchurExpr& y) {
  SchurExpr out;
  for (const auto& [p, a] : x.terms()) {
    for (const auto& [q, b] : y.terms()) {
      const Integer ab = a * b;
      for (const auto& [lam, c] : lr_product(p, q)) out.add_term(lam, ab * c);
    }
  }
  return out;
}

SchurExpr operator*(const SchurExpr& x, const SchurExpr& y) { return lr_multiply(x, y); }

// ---------------------------------------------------------------------------
// Pieri rules

std::vector<Partition> pieri_row(const Partition& mu, int k, int max_len) {
  std::vector<Partition> out;
  if (k < 0) return out;
  const std::size_t rows = mu.length() + 1;
  const std::size_t cap = max_len < 0 ? rows : std::min(rows, static_cast<std::size_t>(max_len));
  if (mu.length() > cap) return out;
  std::vector<int> cur = mu.padded(rows);
  auto rec = [&](auto&& self, std::size_t r, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (r >= cap) return;
    const int hi = r == 0 ? remaining : std::min(remaining, mu.part(r - 1) - mu.part(r));
    for (int n = hi; n >= 0; --n) {
      cur[r] = mu.part(r) + n;
      self(self, r + 1, remaining - n);
    }
    cur[r] = mu.part(r);
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> pieri_col(const Partition& mu, int k, int max_len) {
  std::vector<Partition> out;
  if (k < 0) return out;
  const std::size_t rows = mu.length() + static_cast<std::size_t>(k);
  const std::size_t cap = max_len < 0 ? rows : std::min(rows, static_cast<std::size_t>(max_len));
  if (mu.length() > cap) return out;
  std::vector<int> cur = mu.padded(rows);
  auto rec = [&](auto&& self, std::size_t r, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (r >= cap) return;
    if (cap - r < static_cast<std::size_t>(remaining)) return;
    // A box goes into row r if the row above stays at least as long.
    if (r == 0 || cur[r - 1] >= mu.part(r) + 1) {
      cur[r] = mu.part(r) + 1;
      self(self, r + 1, remaining - 1);
      cur[r] = mu.part(r);
    }
    self(self, r + 1, remaining);
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Jacobi-Trudi and the c-basis

namespace {

CMonomial times_c(const CMonomial& m, int k) {
  if (k == 0) return m;
  std::vector<int> parts = m.parts();
  parts.insert(std::upper_bound(parts.begin(), parts.end(), k, std::greater<int>()), k);
  return Partition(std::move(parts));
}

}  // namespace

CPolynomial jacobi_trudi(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  const int m = static_cast<int>(conj.length());
  if (m == 0) return {{CMonomial{}, Integer(1)}};
  if (m > 30) throw std::invalid_argument("jacobi_trudi: partition too wide");
  // memo[mask] holds the minor on rows popcount(mask).. and the unused columns.
  std::unordered_map<unsigned, CPolynomial> memo;
  auto minor = [&](auto&& self, unsigned used) -> const CPolynomial& {
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    const int row = std::popcount(used);
    CPolynomial result;
    if (row == m) {
      result.emplace(CMonomial{}, 1);
    } else {
      int skipped = 0;
      for (int col = 0; col < m; ++col) {
        if (used & (1u << col)) continue;
        const int idx = conj.part(static_cast<std::size_t>(row)) - row + col;
        const int sign = (skipped % 2 == 0) ? 1 : -1;
        ++skipped;
        if (idx < 0) continue;
        const CPolynomial& sub = self(self, used | (1u << col));
        for (const auto& [mono, c] : sub) {
          auto& slot = result[times_c(mono, idx)];
          slot += sign * c;
        }
      }
      std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
    }
    return memo.emplace(used, std::move(result)).first->second;
  };
  return minor(minor, 0u);
}

CPolynomial to_c_polynomial(const SchurExpr& x) {
  CPolynomial out;
  for (const auto& [lam, c] : x.terms()) {
    for (const auto& [mono, v] : jacobi_trudi(lam)) out[mono] += c * v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SchurExpr c_monomial_to_schur(const CMonomial& m) {
  SchurExpr cur = SchurExpr::one();
  for (int k : m.parts()) {
    SchurExpr next;
    for (const auto& [lam, c] : cur.terms()) {
      for (const auto& p : pieri_col(lam, k)) next.add_term(p, c);
    }
    cur = std::move(next);
  }
  return cur;
}

SchurExpr c_polynomial_to_schur(const CPolynomial& p) {
  SchurExpr out;
  for (const auto& [mono, c] : p) out += c_monomial_to_schur(mono) * c;
  return out;
}

std::vector<SumTerm> expand_sum(const Partition& lambda) {
  std::vector<SumTerm> out;
  for (const auto& mu : subpartitions(lambda)) {
    for (const auto& [nu, c] : skew_expand(lambda, mu)) out.push_back({mu, nu, c});
  }
  return out;
}

SchurExpr negate_alphabet(const SchurExpr& x) {
  SchurExpr out;
  for (const auto& [lam, c] : x.terms()) {
    out.add_term(lam.conjugate(), lam.weight() % 2 == 0 ? c : Integer(-c));
  }
  return out;
}

}  // namespace schurthom
