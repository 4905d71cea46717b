#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cremona/errors.hpp"

namespace cremona {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Rational qpow(const Rational& base, unsigned long exp) {
  return make_rational(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
}

/// d | x. Zero divides only zero.
inline bool divides(const Integer& d, const Integer& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Least nonnegative residue; modulus must be nonzero.
inline Integer floor_mod(const Integer& x, const Integer& m) {
  if (m == 0) throw DomainError("modulus zero");
  Integer r;
  const Integer am = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), am.get_mpz_t());
  return r;
}

inline Integer ceil_div(const Integer& x, const Integer& y) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

/// Decimal, or "p/q" in lowest terms with q > 0.
inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace cremona
