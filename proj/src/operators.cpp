#include "etaq/operators.hpp"

#include "etaq/arithmetic.hpp"

#include <stdexcept>

namespace etaq {

CoeffSeries op_U(const CoeffSeries& s, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("op_U: l must be positive");
  const std::int64_t t = s.truncation() / l;
  std::vector<Rational> out(static_cast<std::size_t>(t + 1));
  for (std::int64_t n = 0; n <= t; ++n) out[n] = s[l * n];
  return CoeffSeries(std::move(out));
}

CoeffSeries op_V(const CoeffSeries& s, std::int64_t l, std::optional<std::int64_t> cap) {
  if (l < 1) throw std::invalid_argument("op_V: l must be positive");
  std::int64_t t = l * s.truncation();
  if (cap) {
    if (*cap < 0) throw std::invalid_argument("op_V: negative cap");
    t = std::min(t, *cap);
  }
  std::vector<Rational> out(static_cast<std::size_t>(t + 1));
  for (std::int64_t n = 0; l * n <= t; ++n) out[l * n] = s[n];
  return CoeffSeries(std::move(out));
}

CoeffSeries op_sieve(const CoeffSeries& s, std::int64_t M, std::int64_t m) {
  if (M < 1) throw std::invalid_argument("op_sieve: M must be positive");
  const std::int64_t r = ((m % M) + M) % M;
  std::vector<Rational> out(s.size());
  for (std::int64_t n = r; n <= s.truncation(); n += M) out[n] = s[n];
  return CoeffSeries(std::move(out));
}

CoeffSeries op_twist(const CoeffSeries& s, const CharacterSpec& chi) {
  std::vector<Rational> out(s.size());
  for (std::int64_t n = 0; n <= s.truncation(); ++n) {
    const int c = chi(n);
    if (c > 0)
      out[n] = s[n];
    else if (c < 0)
      out[n] = -s[n];
  }
  return CoeffSeries(std::move(out));
}

CoeffSeries hecke_Tp(const CoeffSeries& s, std::int64_t p, unsigned k, const CharacterSpec& chi) {
  if (!is_prime(p)) throw std::invalid_argument("hecke_Tp: p must be prime");
  if (k < 1) throw std::invalid_argument("hecke_Tp: weight must be positive");
  const std::int64_t t = s.truncation() / p;
  const Rational factor = Rational(chi(p) * ipow(p, k - 1));
  std::vector<Rational> out(static_cast<std::size_t>(t + 1));
  for (std::int64_t n = 0; n <= t; ++n) {
    out[n] = s[p * n];
    if (n % p == 0) out[n] += factor * s[n / p];
  }
  return CoeffSeries(std::move(out));
}

Integer EisensteinInteger::norm() const {
  return to_integer(real) * to_integer(real) + 3 * to_integer(sqrt3) * to_integer(sqrt3);
}

namespace {

Integer deligne_square_bound(std::int64_t n, unsigned k) {
  const Integer d = to_integer(divisor_count(n));
  return d * d * ipow(n, k - 1);
}

}  // namespace

bool deligne_bound_check(const CoeffSeries& coeffs, unsigned k) {
  for (std::int64_t n = 1; n <= coeffs.truncation(); ++n) {
    const Rational sq = coeffs[n] * coeffs[n];
    if (sq > Rational(deligne_square_bound(n, k))) return false;
  }
  return true;
}

bool deligne_bound_check(std::span<const EisensteinInteger> coeffs, unsigned k) {
  for (std::size_t n = 1; n < coeffs.size(); ++n)
    if (coeffs[n].norm() > deligne_square_bound(static_cast<std::int64_t>(n), k)) return false;
  return true;
}

}  // namespace etaq
