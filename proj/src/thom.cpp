#include "schurthom/thom.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

#include "schurthom/detforms.hpp"

namespace schurthom {

namespace {

Integer sign_of(int exponent) { return exponent % 2 ? Integer(-1) : Integer(1); }

// c * 2^e for possibly negative e; the result must be an integer.
Integer scale_pow2(const Integer& c, int e, const char* where) {
  if (e >= 0) return c * pow2(static_cast<unsigned long>(e));
  Rational q(c, pow2(static_cast<unsigned long>(-e)));
  q.canonicalize();
  if (!is_integral(q)) throw std::logic_error(std::string(where) + ": non-integral coefficient " + q.get_str());
  return q.get_num();
}

Partition single_row(int n) { return n == 0 ? Partition{} : Partition{n}; }

void require_h(int h, const char* where) {
  if (h < 1) throw std::invalid_argument(std::string(where) + ": h = r + i must be at least 1");
}

void require_i(int i, const char* where) {
  if (i < 1) throw std::invalid_argument(std::string(where) + ": i must be at least 1");
}

// All 0-1 vectors x of length l(mu) with mu - x weakly decreasing and nonnegative.
template <class Fn>
void for_each_lowering(const Partition& mu, Fn&& fn) {
  const std::size_t n = mu.length();
  std::vector<int> cur(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      fn(Partition(cur));
      return;
    }
    for (int x = 0; x <= 1; ++x) {
      const int v = mu.part(k) - x;
      if (k > 0 && v > cur[k - 1]) continue;
      cur[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

// s_nu of a list of linear weights, by branching over the last weight.
class WeightSchur {
 public:
  explicit WeightSchur(std::vector<IntPoly> weights) : weights_(std::move(weights)) {}

  const IntPoly& eval(const Partition& nu) { return eval(nu, static_cast<int>(weights_.size())); }

 private:
  const IntPoly& eval(const Partition& nu, int m) {
    auto key = std::make_pair(nu, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    IntPoly out;
    if (static_cast<int>(nu.length()) > m) {
      // zero
    } else if (nu.empty()) {
      out = IntPoly::constant(1);
    } else {
      const std::size_t len = static_cast<std::size_t>(m - 1);
      std::vector<int> kappa(len, 0);
      auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == len) {
          const Partition sub(kappa);
          const IntPoly& lower = eval(sub, m - 1);
          if (!lower.is_zero()) out += lower * power(m - 1, nu.weight() - sub.weight());
          return;
        }
        for (int v = nu.part(k + 1); v <= nu.part(k); ++v) {
          kappa[k] = v;
          self(self, k + 1);
        }
      };
      rec(rec, 0);
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  const IntPoly& power(int w, int e) {
    auto& tab = powers_[w];
    if (tab.empty()) tab.push_back(IntPoly::constant(1));
    while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * weights_[static_cast<std::size_t>(w)]);
    return tab[static_cast<std::size_t>(e)];
  }

  std::vector<IntPoly> weights_;
  std::map<std::pair<Partition, int>, IntPoly> memo_;
  std::map<int, std::vector<IntPoly>> powers_;
};

// Applies fn to every index in [0, n) on a small worker pool; results are
// stored by index so the merge order does not depend on scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) out[k] = fn(k);
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < n; k += workers) out[k] = fn(k);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

}  // namespace

void SingularityParams::validate() const {
  if (i < 1) throw std::invalid_argument("i must be at least 1");
  if (j < 0) throw std::invalid_argument("j must be nonnegative");
  if (j > i) throw std::invalid_argument("j must not exceed i");
  if (h() < 1) throw std::invalid_argument("h = r + i must be at least 1");
}

std::string SingularityParams::to_string() const {
  return "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", r=" + std::to_string(r) + ")";
}

SchurExpr tp_main1(int i, int j) {
  SingularityParams{i, j, -i + 1}.validate();
  const Partition delta = Partition::staircase(j);
  const int d = i + j * (j + 1) / 2;
  const int base = j * (j - 1) / 2;
  SchurExpr out;
  for (const auto& mu : subpartitions(delta)) {
    const Integer e = E(delta, mu, i);
    if (e == 0) continue;
    const Integer c = scale_pow2(e, mu.weight() - base, "tp_main1");
    out.add_term(concat(single_row(d - mu.weight()), mu.conjugate()), c);
  }
  return out;
}

SchurExpr tp_main2(int i, int r) {
  require_i(i, "tp_main2");
  const int h = r + i;
  require_h(h, "tp_main2");
  const int deg = i * h - i + 1;
  const Partition top = Partition::block(i, h);
  SchurExpr out;
  for (const auto& lambda : partitions_in_block(i, h)) {
    const int m = deg - lambda.weight();
    if (m < 0) continue;
    const Partition comp = complement(lambda.conjugate(), h, i);
    const Partition head = add(top, lambda);
    for (const auto& mu : partitions_of(m, -1, i)) {
      Integer c = 0;
      for_each_lowering(mu, [&](const Partition& lowered) { c += E(comp, lowered.conjugate(), i); });
      if (c != 0) out.add_term(concat(head, mu), c);
    }
  }
  return out;
}

SchurExpr tp_main2nice(int i, int r) {
  require_i(i, "tp_main2nice");
  const int h = r + i;
  require_h(h, "tp_main2nice");
  const Partition top = Partition::block(i, h);
  SchurExpr out;
  for (const auto& nu : partitions_in_block(h, i)) {
    const int m = nu.weight() - i + 1;
    if (m < 0) continue;
    const Partition head = add(top, complement(nu.conjugate(), i, h));
    for (const auto& mu : partitions_of(m, i)) {
      const Integer f = F(nu, mu, i);
      if (f != 0) out.add_term(concat(head, mu.conjugate()), f);
    }
  }
  return out;
}

BivariateSchurExpr sigma_ht(int i, int j) {
  SingularityParams{i, j, -i + 1}.validate();
  BivariateSchurExpr out;
  for (const auto& t : lascoux_line_expand(Partition::staircase(j), i)) {
    // s_mu(A^*) = (-1)^{|mu|} s_mu(A); c_1(sqrt L)^e = beta^e / 2^e.
    const Integer c = scale_pow2(t.coeff, j - t.power, "sigma_ht") * sign_of(t.mu.weight());
    out.add_term(t.mu, single_row(t.power), c);
  }
  return out;
}

BivariateSchurExpr sigma_porteous(int i, int h) {
  require_i(i, "sigma_porteous");
  require_h(h, "sigma_porteous");
  const int deg = i * h - i + 1;
  const BivariateSchurExpr tensor = lascoux_tensor_expand(i, h);
  BivariateSchurExpr out;
  for (const auto& [key, c] : tensor.terms()) {
    const auto& [mu, b] = key;
    const int k = deg - mu.weight() - b.weight();
    if (k < 0) continue;
    const Integer sign = sign_of(mu.weight() + k);
    for (const auto& lam : pieri_row(mu, k, i)) out.add_term(lam, b, c * sign);
  }
  return out;
}

BivariateSchurExpr gysin_push(const GrassmannClass& x, int r, int q) {
  if (r < 0 || q < 0) throw std::invalid_argument("gysin_push: ranks must be nonnegative");
  BivariateSchurExpr out;
  std::vector<int> seq(static_cast<std::size_t>(r + q));
  for (const auto& [key, outer] : x) {
    const auto& [mu, nu] = key;
    if (static_cast<int>(mu.length()) > r || static_cast<int>(nu.length()) > q) continue;
    for (int k = 0; k < q; ++k) seq[static_cast<std::size_t>(k)] = nu.part(static_cast<std::size_t>(k)) - r;
    for (int k = 0; k < r; ++k) seq[static_cast<std::size_t>(q + k)] = mu.part(static_cast<std::size_t>(k));
    const SignedIndex s = straighten(seq);
    if (s.sign == 0) continue;
    for (const auto& [b, c] : outer.terms()) out.add_term(s.partition, b, c * s.sign);
  }
  return out;
}

BivariateSchurExpr sigma_bullet_pushforward(int i, int p, int j) {
  require_i(i, "sigma_bullet_pushforward");
  if (j < 1) throw std::invalid_argument("sigma_bullet_pushforward: j must be at least 1");
  if (j > i) throw std::invalid_argument("sigma_bullet_pushforward: j must not exceed i");
  if (p < 1) throw std::invalid_argument("sigma_bullet_pushforward: rank of B must be at least 1");
  if (i > Monomial::kMaxVars) throw std::invalid_argument("sigma_bullet_pushforward: too many root variables");

  const int q = i - j;
  const int k = i * j - j * (j - 1) / 2;
  const Alphabet R{"R", 0, j};
  const Alphabet Q{"Q", j, q};

  // Weights of R (x) Q + Sym^2 R.
  std::vector<IntPoly> weights;
  for (int a = 0; a < j; ++a) {
    for (int b = 0; b < q; ++b) weights.push_back(IntPoly::variable(R.var(a)) + IntPoly::variable(Q.var(b)));
  }
  for (int a = 0; a < j; ++a) {
    for (int b = a; b < j; ++b) weights.push_back(IntPoly::variable(R.var(a)) + IntPoly::variable(R.var(b)));
  }

  // c_top(B (x) V^*) = s_{(k^p)}(B - V)
  //   = sum_{mu ⊂ (k^p)} (-1)^{pk - |mu|} s_mu(B) s_{conj(complement mu)}(V).
  const std::vector<Partition> mus = partitions_in_block(k, p);
  std::vector<IntPoly> values;
  values.reserve(mus.size());
  WeightSchur ws(weights);
  for (const auto& mu : mus) values.push_back(ws.eval(complement(mu, k, p).conjugate()));

  const auto expansions = parallel_map<BivariateSchurExpr>(
      mus.size(), [&](std::size_t n) { return to_bischur(values[n].cast<Rational>(), R, Q); });

  GrassmannClass cls;
  for (std::size_t n = 0; n < mus.size(); ++n) {
    const Integer sign = sign_of(p * k - mus[n].weight());
    for (const auto& [key, c] : expansions[n].terms()) cls[key] += SchurExpr::basis(mus[n], c * sign);
  }
  return gysin_push(cls, j, q);
}

SchurExpr lift_to_universal(const BivariateSchurExpr& x, int i, int h) {
  require_i(i, "lift_to_universal");
  require_h(h, "lift_to_universal");
  const Partition top = Partition::block(i, h);
  SchurExpr out;
  for (const auto& [key, c] : x.terms()) {
    const auto& [alpha, beta] = key;
    if (static_cast<int>(alpha.length()) > i) {
      throw std::invalid_argument("lift_to_universal: A-partition " + alpha.to_string() + " is longer than i");
    }
    if (static_cast<int>(beta.length()) > h) {
      throw std::invalid_argument("lift_to_universal: B-partition " + beta.to_string() + " is longer than h");
    }
    out.add_term(concat(add(top, beta), alpha.conjugate()), c * sign_of(alpha.weight()));
  }
  return out;
}

SchurExpr tp_general(int i, int j, int r) {
  const SingularityParams params{i, j, r};
  params.validate();
  if (j < 1) throw std::invalid_argument("j must be at least 1 for the pushforward route");
  return lift_to_universal(sigma_bullet_pushforward(i, params.h(), j), i, params.h());
}

std::string route_name(Route route) {
  switch (route) {
    case Route::automatic: return "auto";
    case Route::main1: return "main1";
    case Route::main2: return "main2";
    case Route::main2nice: return "main2nice";
    case Route::general: return "general";
  }
  return "auto";
}

Route parse_route(const std::string& name) {
  for (Route r : {Route::automatic, Route::main1, Route::main2, Route::main2nice, Route::general}) {
    if (route_name(r) == name) return r;
  }
  throw std::invalid_argument("unknown route '" + name + "'");
}

Route resolve_route(const SingularityParams& params, Route route) {
  params.validate();
  const bool lowest = params.r == -params.i + 1;
  if (route == Route::automatic) {
    if (lowest) return Route::main1;
    if (params.j == 1) return Route::main2nice;
    route = Route::general;
  }
  switch (route) {
    case Route::main1:
      if (!lowest) throw std::invalid_argument("route main1 requires r = -i+1");
      break;
    case Route::main2:
    case Route::main2nice:
      if (params.j != 1) throw std::invalid_argument("route " + route_name(route) + " requires j = 1");
      break;
    case Route::general:
      if (params.j < 1) throw std::invalid_argument("route general requires j >= 1");
      break;
    case Route::automatic:
      break;
  }
  return route;
}

SchurExpr thom_polynomial(const SingularityParams& params, Route route) {
  switch (resolve_route(params, route)) {
    case Route::main1: return tp_main1(params.i, params.j);
    case Route::main2: return tp_main2(params.i, params.r);
    case Route::main2nice: return tp_main2nice(params.i, params.r);
    default: return tp_general(params.i, params.j, params.r);
  }
}

BivariateSchurExpr bullet_class(const SingularityParams& params) {
  params.validate();
  if (params.h() == 1) return sigma_ht(params.i, params.j);
  if (params.j == 0) throw std::invalid_argument("bullet class for j = 0 is only defined at h = 1");
  if (params.j == 1) return sigma_porteous(params.i, params.h());
  return sigma_bullet_pushforward(params.i, params.h(), params.j);
}

SchurExpr ThomSeriesExpr::evaluate(int h) const {
  SchurExpr out;
  for (const auto& [gamma, c] : terms) {
    if (gamma.empty() || h + gamma.back() < 0) continue;
    std::vector<int> parts(gamma.size());
    for (std::size_t l = 0; l < gamma.size(); ++l) parts[l] = h + gamma[l];
    out.add_term(Partition::from_parts(parts).conjugate(), c);
  }
  return out;
}

bool ThomSeriesExpr::sign_pattern_holds() const {
  for (const auto& [gamma, c] : terms) {
    for (std::size_t l = 0; l < gamma.size(); ++l) {
      if (static_cast<int>(l) < i ? gamma[l] < 0 : gamma[l] > 0) return false;
    }
  }
  return true;
}

ThomSeriesExpr extract_series(const SchurExpr& x, int i, int r) {
  const int h = r + i;
  require_h(h, "extract_series");
  ThomSeriesExpr out{i, 1, {}};
  const std::size_t len = static_cast<std::size_t>(out.length());
  for (const auto& [lambda, c] : x.terms()) {
    const Partition conj = lambda.conjugate();
    if (conj.length() > len) {
      throw std::invalid_argument("extract_series: term " + lambda.to_string() + " has first part beyond " +
                                  std::to_string(len));
    }
    std::vector<int> gamma(len);
    for (std::size_t l = 0; l < len; ++l) gamma[l] = conj.part(l) - h;
    out.terms.emplace(std::move(gamma), c);
  }
  return out;
}

ThomSeriesExpr thom_series(int i, int r_witness) {
  if (r_witness < 0) throw std::invalid_argument("thom_series: r_witness must be nonnegative");
  return extract_series(tp_main2nice(i, r_witness), i, r_witness);
}

bool series_consistent(const ThomSeriesExpr& a, int ha, const ThomSeriesExpr& b, int hb) {
  auto covered = [](const ThomSeriesExpr& x, int hx, const ThomSeriesExpr& y, int hy) {
    for (const auto& [gamma, c] : x.terms) {
      if (hx + gamma.back() < 0 || hy + gamma.back() < 0) continue;
      auto it = y.terms.find(gamma);
      if (it == y.terms.end() || it->second != c) return false;
    }
    return true;
  };
  return a.i == b.i && a.j == b.j && covered(a, ha, b, hb) && covered(b, hb, a, ha);
}

}  // namespace schurthom
