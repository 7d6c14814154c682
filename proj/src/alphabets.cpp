#include "schurthom/alphabets.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace schurthom {

std::vector<std::string> AlphabetPair::names() const {
  std::vector<std::string> out(static_cast<std::size_t>(A.size + B.size));
  for (int k = 0; k < A.size; ++k) out[static_cast<std::size_t>(A.var(k))] = "a" + std::to_string(k + 1);
  for (int k = 0; k < B.size; ++k) out[static_cast<std::size_t>(B.var(k))] = "b" + std::to_string(k + 1);
  return out;
}

// ---------------------------------------------------------------------------
// BivariateSchurExpr

BivariateSchurExpr BivariateSchurExpr::basis(const Partition& a, const Partition& b, const Integer& c) {
  BivariateSchurExpr x;
  x.add_term(a, b, c);
  return x;
}

void BivariateSchurExpr::add_term(const Partition& a, const Partition& b, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BivariateSchurExpr::coefficient(const Partition& a, const Partition& b) const {
  auto it = terms_.find(Key{a, b});
  return it == terms_.end() ? Integer(0) : it->second;
}

BivariateSchurExpr BivariateSchurExpr::homogeneous_part(int degree) const {
  BivariateSchurExpr out;
  for (const auto& [k, c] : terms_) {
    if (k.first.weight() + k.second.weight() == degree) out.terms_.emplace(k, c);
  }
  return out;
}

int BivariateSchurExpr::max_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first.weight() + k.second.weight());
  return d;
}

BivariateSchurExpr& BivariateSchurExpr::operator+=(const BivariateSchurExpr& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivariateSchurExpr& BivariateSchurExpr::operator-=(const BivariateSchurExpr& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BivariateSchurExpr& BivariateSchurExpr::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string BivariateSchurExpr::to_string() const {
  if (terms_.empty()) return "0";
  auto bracket = [](const Partition& p) {
    std::string s = "s[";
    for (std::size_t k = 0; k < p.length(); ++k) {
      if (k) s += ',';
      s += std::to_string(p.part(k));
    }
    return s + "]";
  };
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const Integer mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string body;
    if (!k.first.empty()) body += bracket(k.first) + "(A)";
    if (!k.second.empty()) body += (body.empty() ? "" : "*") + bracket(k.second) + "(B)";
    if (body.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += body;
    }
  }
  return out;
}

BivariateSchurExpr bischur_multiply(const BivariateSchurExpr& x, const BivariateSchurExpr& y, int n,
                                    int p) {
  BivariateSchurExpr out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const auto& left = lr_product(kx.first, ky.first, n);
      if (left.empty()) continue;
      const auto& right = lr_product(kx.second, ky.second, p);
      const Integer c = cx * cy;
      for (const auto& [a, ca] : left) {
        for (const auto& [b, cb] : right) out.add_term(a, b, c * ca * cb);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric polynomials of roots

IntPoly elementary(int k, const Alphabet& X) {
  if (k < 0 || k > X.size) return {};
  // e_k via the recurrence over variables.
  std::vector<IntPoly> e(static_cast<std::size_t>(k) + 1);
  e[0] = IntPoly::constant(1);
  for (int v = 0; v < X.size; ++v) {
    const IntPoly x = IntPoly::variable(X.var(v));
    for (int j = std::min(k, v + 1); j >= 1; --j) e[static_cast<std::size_t>(j)] += x * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(k)];
}

IntPoly complete(int k, const Alphabet& X) {
  if (k < 0) return {};
  if (k == 0) return IntPoly::constant(1);
  if (X.size == 0) return {};
  // h_k(x_1..x_m) = sum_j x_m^j h_{k-j}(x_1..x_{m-1}).
  std::vector<IntPoly> h(static_cast<std::size_t>(k) + 1);
  h[0] = IntPoly::constant(1);
  for (int v = 0; v < X.size; ++v) {
    const IntPoly x = IntPoly::variable(X.var(v));
    for (int j = 1; j <= k; ++j) h[static_cast<std::size_t>(j)] += x * h[static_cast<std::size_t>(j - 1)];
  }
  return h[static_cast<std::size_t>(k)];
}

namespace {

struct EvalCache {
  using Key = std::tuple<Partition, int, int>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return PartitionHash{}(std::get<0>(k)) * 31 + static_cast<std::size_t>(std::get<1>(k) * 17 + std::get<2>(k));
    }
  };
  std::shared_mutex mutex;
  std::unordered_map<Key, IntPoly, KeyHash> values;
};

EvalCache& eval_cache() {
  static EvalCache cache;
  return cache;
}

IntPoly branching(const Partition& lambda, int offset, int size);

const IntPoly& cached_schur(const Partition& lambda, int offset, int size) {
  auto& cache = eval_cache();
  EvalCache::Key key{lambda, offset, size};
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;
  }
  IntPoly value = branching(lambda, offset, size);
  std::unique_lock lock(cache.mutex);
  return cache.values.emplace(std::move(key), std::move(value)).first->second;
}

// s_lambda(x_1..x_m) = sum over nu interlacing lambda of s_nu(x_1..x_{m-1}) x_m^{|lambda/nu|}.
IntPoly branching(const Partition& lambda, int offset, int size) {
  if (static_cast<int>(lambda.length()) > size) return {};
  if (size == 0) return IntPoly::constant(1);
  if (lambda.empty()) return IntPoly::constant(1);
  const int last = offset + size - 1;
  const std::size_t m = static_cast<std::size_t>(size);
  IntPoly out;
  std::vector<int> nu(m - 1, 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k + 1 >= m) {
      const Partition sub(nu);
      const int e = lambda.weight() - sub.weight();
      const IntPoly& lower = cached_schur(sub, offset, size - 1);
      out += lower * IntPoly::monomial(Monomial::var(last, e));
      return;
    }
    for (int v = lambda.part(k + 1); v <= lambda.part(k); ++v) {
      nu[k] = v;
      self(self, k + 1);
    }
  };
  if (m == 1) {
    out = IntPoly::monomial(Monomial::var(last, lambda.part(0)));
  } else {
    rec(rec, 0);
  }
  return out;
}

}  // namespace

const IntPoly& schur_eval_int(const Partition& lambda, const Alphabet& X) {
  return cached_schur(lambda, X.offset, X.size);
}

AlphabetPoly schur_eval(const Partition& lambda, const Alphabet& X) {
  return schur_eval_int(lambda, X).cast<Rational>();
}

AlphabetPoly eval_bischur(const BivariateSchurExpr& x, const Alphabet& A, const Alphabet& B) {
  IntPoly out;
  for (const auto& [k, c] : x.terms()) {
    const IntPoly& sa = schur_eval_int(k.first, A);
    if (sa.is_zero()) continue;
    const IntPoly& sb = schur_eval_int(k.second, B);
    if (sb.is_zero()) continue;
    out += (sa * sb) * c;
  }
  return out.cast<Rational>();
}

bool is_symmetric_in(const AlphabetPoly& x, const Alphabet& X) {
  for (int k = 0; k + 1 < X.size; ++k) {
    if (!(x.swap_variables(X.var(k), X.var(k + 1)) == x)) return false;
  }
  return true;
}

BivariateSchurExpr to_bischur(const AlphabetPoly& x, const Alphabet& A, const Alphabet& B,
                              bool require_faithful) {
  IntPoly residual;
  for (const auto& [m, c] : x.terms()) {
    if (!is_integral(c)) throw std::invalid_argument("to_bischur: non-integral coefficient");
    for (int v = 0; v < Monomial::kMaxVars; ++v) {
      if (m.exponent(v) != 0 && !A.contains(v) && !B.contains(v)) {
        throw std::invalid_argument("to_bischur: polynomial involves variables outside both alphabets");
      }
    }
    residual.add_term(m, c.get_num());
  }
  if (!is_symmetric_in(x, A) || !is_symmetric_in(x, B)) {
    throw std::invalid_argument("to_bischur: input is not symmetric in each alphabet");
  }
  if (require_faithful) {
    const int d = x.degree();
    if (A.size < d || B.size < d) {
      throw std::invalid_argument("to_bischur: alphabets of sizes " + std::to_string(A.size) + ", " +
                                  std::to_string(B.size) + " are below the faithfulness bound " +
                                  std::to_string(d));
    }
  }
  BivariateSchurExpr out;
  while (!residual.is_zero()) {
    const auto [m, c] = residual.leading();
    std::vector<int> a(static_cast<std::size_t>(A.size));
    std::vector<int> b(static_cast<std::size_t>(B.size));
    for (int k = 0; k < A.size; ++k) a[static_cast<std::size_t>(k)] = m.exponent(A.var(k));
    for (int k = 0; k < B.size; ++k) b[static_cast<std::size_t>(k)] = m.exponent(B.var(k));
    if (!std::is_sorted(a.begin(), a.end(), std::greater<int>()) ||
        !std::is_sorted(b.begin(), b.end(), std::greater<int>())) {
      throw std::invalid_argument("to_bischur: input is not symmetric in each alphabet");
    }
    const Partition pa(std::move(a));
    const Partition pb(std::move(b));
    out.add_term(pa, pb, c);
    residual -= (schur_eval_int(pa, A) * schur_eval_int(pb, B)) * c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bundles and characteristic classes

Bundle Bundle::of(const Alphabet& X) {
  Bundle b;
  for (int k = 0; k < X.size; ++k) b.positive_.push_back(AlphabetPoly::variable(X.var(k)));
  return b;
}

Bundle Bundle::line(const AlphabetPoly& weight) {
  Bundle b;
  b.positive_.push_back(weight);
  return b;
}

Bundle Bundle::dual() const {
  Bundle b;
  for (const auto& w : positive_) b.positive_.push_back(-w);
  for (const auto& w : negative_) b.negative_.push_back(-w);
  return b;
}

Bundle Bundle::operator+(const Bundle& o) const {
  Bundle b = *this;
  b.positive_.insert(b.positive_.end(), o.positive_.begin(), o.positive_.end());
  b.negative_.insert(b.negative_.end(), o.negative_.begin(), o.negative_.end());
  return b;
}

Bundle Bundle::operator-(const Bundle& o) const {
  Bundle b = *this;
  b.positive_.insert(b.positive_.end(), o.negative_.begin(), o.negative_.end());
  b.negative_.insert(b.negative_.end(), o.positive_.begin(), o.positive_.end());
  return b;
}

Bundle Bundle::tensor(const Bundle& o) const {
  if (is_virtual() || o.is_virtual()) {
    throw std::invalid_argument("tensor product of a formal difference has no weights");
  }
  Bundle b;
  for (const auto& x : positive_) {
    for (const auto& y : o.positive_) b.positive_.push_back(x + y);
  }
  return b;
}

Bundle Bundle::sym2() const {
  if (is_virtual()) throw std::invalid_argument("Sym^2 of a formal difference has no weights");
  Bundle b;
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    for (std::size_t l = i; l < positive_.size(); ++l) b.positive_.push_back(positive_[i] + positive_[l]);
  }
  return b;
}

AlphabetPoly chern_total(const Bundle& E, int degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("chern_total: degree cap must be nonnegative");
  const AlphabetPoly one = AlphabetPoly::constant(1);
  AlphabetPoly total = one;
  for (const auto& w : E.positive()) total = AlphabetPoly::multiply(total, one + w, degree_cap);
  for (const auto& w : E.negative()) {
    // (1 + w)^{-1} = sum_k (-w)^k
    AlphabetPoly inv = one;
    AlphabetPoly term = one;
    for (int k = 1; k <= degree_cap; ++k) {
      term = AlphabetPoly::multiply(term, -w, degree_cap);
      inv += term;
    }
    total = AlphabetPoly::multiply(total, inv, degree_cap);
  }
  return total;
}

AlphabetPoly euler_hom(const Alphabet& A, const Alphabet& B) {
  AlphabetPoly out = AlphabetPoly::constant(1);
  for (int i = 0; i < A.size; ++i) {
    for (int l = 0; l < B.size; ++l) {
      out = out * (AlphabetPoly::variable(B.var(l)) - AlphabetPoly::variable(A.var(i)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Supersymmetric specialization

AlphabetPoly rho(const SchurExpr& x, int n, int p) {
  if (n < 0 || p < 0) throw std::invalid_argument("rho: ranks must be nonnegative");
  const auto layout = AlphabetPair::make(n, p);
  const CPolynomial cform = to_c_polynomial(x);
  int top = 0;
  for (const auto& [mono, c] : cform) top = std::max(top, mono.first());
  // c_k(B - A) = sum_a e_a(B) (-1)^{k-a} h_{k-a}(A)
  std::vector<IntPoly> ck(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    IntPoly v;
    for (int a = 0; a <= std::min(k, p); ++a) {
      IntPoly t = elementary(a, layout.B) * complete(k - a, layout.A);
      if ((k - a) % 2) t *= Integer(-1);
      v += t;
    }
    ck[static_cast<std::size_t>(k)] = std::move(v);
  }
  std::map<CMonomial, IntPoly> memo;
  auto value = [&](auto&& self, const CMonomial& m) -> const IntPoly& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    IntPoly v;
    if (m.empty()) {
      v = IntPoly::constant(1);
    } else {
      std::vector<int> rest(m.parts().begin() + 1, m.parts().end());
      v = ck[static_cast<std::size_t>(m.first())] * self(self, Partition(std::move(rest)));
    }
    return memo.emplace(m, std::move(v)).first->second;
  };
  IntPoly out;
  for (const auto& [mono, c] : cform) out += value(value, mono) * c;
  return out.cast<Rational>();
}

namespace {

// Partitions kappa with lo[k] <= kappa_k <= hi[k] for k < hi.size() (zero
// beyond), visited in no particular order.
template <class Fn>
void for_each_between(const std::vector<int>& lo, const std::vector<int>& hi, Fn&& fn) {
  std::vector<int> cur(hi.size());
  auto rec = [&](auto&& self, std::size_t k, int cap) -> void {
    if (k == hi.size()) {
      fn(Partition(cur));
      return;
    }
    for (int v = lo[k]; v <= std::min(hi[k], cap); ++v) {
      cur[k] = v;
      self(self, k + 1, v);
    }
  };
  rec(rec, 0, hi.empty() ? 0 : hi[0]);
}

double power_count(int base, int exponent) {
  double v = 1;
  for (int k = 0; k < exponent; ++k) v *= base;
  return v;
}

}  // namespace

BivariateSchurExpr rho_bischur(const SchurExpr& x, int n, int p) {
  if (n < 0 || p < 0) throw std::invalid_argument("rho_bischur: ranks must be nonnegative");
  BivariateSchurExpr out;
  // Either split off the A-part kappa (kappa_1 <= n, each column of lambda/kappa
  // at most p long) or the B-part mu (l(mu) <= p, each row of lambda/mu at
  // most n long), whichever has fewer candidates.
  const bool split_a = power_count(p + 1, n) <= power_count(n + 1, p);
  for (const auto& [lambda, c] : x.terms()) {
    if (lambda.part(static_cast<std::size_t>(p)) > n) continue;  // outside the (p, n) hook
    const Partition conj = lambda.conjugate();
    if (split_a) {
      std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < hi.size(); ++k) {
        hi[k] = conj.part(k);
        lo[k] = std::max(0, conj.part(k) - p);
      }
      for_each_between(lo, hi, [&](const Partition& kappa_conj) {
        const Partition kappa = kappa_conj.conjugate();
        const Integer sign = kappa.weight() % 2 ? -1 : 1;
        for (const auto& [mu, d] : skew_expand(lambda, kappa, p)) out.add_term(kappa_conj, mu, c * sign * d);
      });
    } else {
      std::vector<int> lo(static_cast<std::size_t>(p)), hi(static_cast<std::size_t>(p));
      for (std::size_t k = 0; k < hi.size(); ++k) {
        hi[k] = lambda.part(k);
        lo[k] = std::max(0, lambda.part(k) - n);
      }
      for_each_between(lo, hi, [&](const Partition& mu) {
        const Integer sign = (lambda.weight() - mu.weight()) % 2 ? -1 : 1;
        for (const auto& [nu, d] : skew_expand(conj, mu.conjugate(), n)) out.add_term(nu, mu, c * sign * d);
      });
    }
  }
  return out;
}

BivariateSchurExpr euler_bischur(int n, int p) {
  return rho_bischur(SchurExpr::basis(Partition::block(n, p)), n, p);
}

}  // namespace schurthom
