#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace etaq {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// Exact text form: "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

inline Integer to_integer(std::int64_t v) {
  Integer z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

inline Rational to_rational(std::int64_t v) { return Rational(to_integer(v)); }

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational q(to_integer(num), to_integer(den));
  q.canonicalize();
  return q;
}

/// base^e for a nonnegative exponent.
inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer ipow(std::int64_t base, unsigned long e) { return ipow(to_integer(base), e); }

}  // namespace etaq
