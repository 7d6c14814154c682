#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "schurthom/numbers.hpp"

namespace schurthom {

/// Exponent vector over at most 16 variables, one byte per exponent, packed
/// so that unsigned comparison of (hi, lo) is the lex order with variable 0
/// most significant. Multiplication of monomials is word addition.
struct Monomial {
  static constexpr int kMaxVars = 16;
  static constexpr int kMaxExponent = 255;

  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  static Monomial var(int v, int e = 1) {
    check_var(v);
    Monomial m;
    m.word(v) = static_cast<std::uint64_t>(e) << shift(v);
    return m;
  }

  int exponent(int v) const {
    check_var(v);
    return static_cast<int>((word(v) >> shift(v)) & 0xffU);
  }

  void set_exponent(int v, int e) {
    check_var(v);
    if (e < 0 || e > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
    word(v) = (word(v) & ~(std::uint64_t{0xff} << shift(v))) | (static_cast<std::uint64_t>(e) << shift(v));
  }

  int degree() const { return byte_sum(hi) + byte_sum(lo); }
  bool is_one() const { return hi == 0 && lo == 0; }

  friend Monomial operator*(Monomial a, Monomial b) {
    a.hi += b.hi;
    a.lo += b.lo;
    return a;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }

 private:
  static void check_var(int v) {
    if (v < 0 || v >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
  }
  static int shift(int v) { return 8 * (7 - (v % 8)); }
  std::uint64_t& word(int v) { return v < 8 ? hi : lo; }
  std::uint64_t word(int v) const { return v < 8 ? hi : lo; }
  static int byte_sum(std::uint64_t w) {
    int s = 0;
    for (int k = 0; k < 8; ++k) s += static_cast<int>((w >> (8 * k)) & 0xffU);
    return s;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.hi * 0x9e3779b97f4a7c15ULL ^ (m.lo + 0x632be59bd9b4e019ULL));
  }
};

/// Sparse multivariate polynomial with exact coefficients (Integer or
/// Rational). No zero coefficients are stored.
template <class Coeff>
class Poly {
 public:
  using Terms = std::unordered_map<Monomial, Coeff, MonomialHash>;

  Poly() = default;

  static Poly constant(const Coeff& c) {
    Poly p;
    p.add_term(Monomial{}, c);
    return p;
  }
  static Poly variable(int v) {
    Poly p;
    p.add_term(Monomial::var(v), Coeff(1));
    return p;
  }
  static Poly monomial(const Monomial& m, const Coeff& c = Coeff(1)) {
    Poly p;
    p.add_term(m, c);
    return p;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Poly homogeneous_part(int d) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      if (m.degree() == d) out.terms_.emplace(m, c);
    }
    return out;
  }

  Poly truncated(int max_degree) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      if (m.degree() <= max_degree) out.terms_.emplace(m, c);
    }
    return out;
  }

  /// Lex-largest monomial; the polynomial must be nonzero.
  std::pair<Monomial, Coeff> leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->first > best->first) best = it;
    }
    return *best;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Coeff& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Coeff(-1); }
  friend Poly operator*(Poly a, const Coeff& c) { return a *= c; }
  friend Poly operator*(const Coeff& c, Poly a) { return a *= c; }

  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b, -1); }

  /// Product keeping only monomials of total degree <= max_degree
  /// (negative: no truncation).
  static Poly multiply(const Poly& a, const Poly& b, int max_degree) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    if ((max_degree < 0 || max_degree > Monomial::kMaxExponent) &&
        a.degree() + b.degree() > Monomial::kMaxExponent) {
      throw std::overflow_error("polynomial degree exceeds monomial capacity");
    }
    out.terms_.reserve(a.size() + b.size());
    Coeff tmp;
    for (const auto& [ma, ca] : a.terms_) {
      const int da = ma.degree();
      for (const auto& [mb, cb] : b.terms_) {
        if (max_degree >= 0 && da + mb.degree() > max_degree) continue;
        tmp = ca * cb;
        out.add_term(ma * mb, tmp);
      }
    }
    return out;
  }

  Poly pow(int e) const {
    Poly r = constant(Coeff(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  /// Exchanges variables a and b.
  Poly swap_variables(int a, int b) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      Monomial n = m;
      const int ea = m.exponent(a);
      n.set_exponent(a, m.exponent(b));
      n.set_exponent(b, ea);
      out.terms_.emplace(n, c);
    }
    return out;
  }

  /// Replaces variable v by images[v] for every v < images.size(); other
  /// variables are kept.
  Poly substitute(const std::vector<Poly>& images) const {
    const int nv = static_cast<int>(images.size());
    std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(nv));
    auto power = [&](int v, int e) -> const Poly& {
      auto& tab = powers[static_cast<std::size_t>(v)];
      if (tab.empty()) tab.push_back(constant(Coeff(1)));
      while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[static_cast<std::size_t>(v)]);
      return tab[static_cast<std::size_t>(e)];
    };
    Poly out;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      Poly term = constant(c);
      for (int v = 0; v < nv; ++v) {
        const int e = m.exponent(v);
        if (e == 0) continue;
        rest.set_exponent(v, 0);
        term = term * power(v, e);
      }
      if (!rest.is_one()) term = term * monomial(rest);
      out += term;
    }
    return out;
  }

  template <class Other>
  Poly<Other> cast() const {
    Poly<Other> out;
    for (const auto& [m, c] : terms_) out.add_term(m, Other(c));
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Deterministic text form using the supplied variable names (x0, x1, ...
  /// when empty), monomials in descending lex order.
  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Coeff>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
      std::string cs = Coeff(c).get_str();
      const bool neg = c < 0;
      if (neg) cs = Coeff(-c).get_str();
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (int v = 0; v < Monomial::kMaxVars; ++v) {
        const int e = m.exponent(v);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += static_cast<std::size_t>(v) < names.size() ? names[static_cast<std::size_t>(v)] : "x" + std::to_string(v);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

}  // namespace schurthom
