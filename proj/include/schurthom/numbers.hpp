#pragma once

#include <gmpxx.h>

#include <string>

namespace schurthom {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace schurthom
