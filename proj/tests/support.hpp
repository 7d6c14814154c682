#pragma once

#include <sstream>
#include <string>

#include "oracles.hpp"
#include "schurthom/alphabets.hpp"
#include "schurthom/schur.hpp"

namespace support {

inline oracle::Expansion to_expansion(const schurthom::SchurExpr& x) {
  oracle::Expansion out;
  for (const auto& [lambda, c] : x.terms()) out[lambda.parts()] = c;
  return out;
}

inline std::string show(const oracle::Parts& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s + ")";
}

inline std::string show(const oracle::Expansion& x) {
  if (x.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : x) {
    out << (first ? "" : " + ") << c << "*s" << show(p);
    first = false;
  }
  return out.str();
}

// First partition where the two expansions differ, or "" when equal.
inline std::string first_difference(const oracle::Expansion& got, const oracle::Expansion& want) {
  std::set<oracle::Parts> keys;
  for (const auto& [p, c] : got) keys.insert(p);
  for (const auto& [p, c] : want) keys.insert(p);
  for (const auto& p : keys) {
    const auto g = got.count(p) ? got.at(p) : oracle::Z(0);
    const auto w = want.count(p) ? want.at(p) : oracle::Z(0);
    if (g != w) return "s" + show(p) + ": got " + g.get_str() + ", expected " + w.get_str();
  }
  return "";
}

// sum e s_alpha(a) s_beta(b) at the given points.
inline oracle::Q eval_bivariate(const schurthom::BivariateSchurExpr& x, const std::vector<oracle::Q>& a,
                                const std::vector<oracle::Q>& b) {
  oracle::Q total = 0;
  for (const auto& [key, c] : x.terms()) {
    total += oracle::Q(c) * oracle::schur_at(key.first.parts(), a) * oracle::schur_at(key.second.parts(), b);
  }
  return total;
}

inline oracle::Q eval_super(const oracle::Expansion& x, const std::vector<oracle::Q>& b,
                            const std::vector<oracle::Q>& a) {
  oracle::Q total = 0;
  for (const auto& [lambda, c] : x) total += oracle::Q(c) * oracle::super_schur_at(lambda, b, a);
  return total;
}

inline oracle::Q euler_hom(const std::vector<oracle::Q>& a, const std::vector<oracle::Q>& b) {
  oracle::Q e = 1;
  for (const auto& x : a)
    for (const auto& y : b) e *= y - x;
  return e;
}

}  // namespace support
