#include "etaq/characters.hpp"

#include "etaq/arithmetic.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace etaq {

CharacterSpec::CharacterSpec(std::int64_t D) : discriminant_(D) {
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (D == 0 || (r != 0 && r != 1))
    throw std::invalid_argument("CharacterSpec: " + std::to_string(D) + " is not a discriminant");
}

std::int64_t CharacterSpec::modulus() const { return discriminant_ < 0 ? -discriminant_ : discriminant_; }

int CharacterSpec::operator()(std::int64_t n) const {
  if (is_trivial()) return 1;
  return etaq::kronecker(discriminant_, n);
}

std::string CharacterSpec::to_string() const {
  return is_trivial() ? "chi_1" : "chi_" + std::to_string(discriminant_);
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return false;
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r == 1) return factorize(D < 0 ? -D : D).squarefree();
  if (r != 0) return false;
  const std::int64_t m = D / 4;
  const std::int64_t mr = ((m % 4) + 4) % 4;
  if (mr != 2 && mr != 3) return false;
  return factorize(m < 0 ? -m : m).squarefree();
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_memo{Rational(1)};

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Rational bernoulli_number(unsigned k) {
  std::lock_guard lock(bernoulli_mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  while (bernoulli_memo.size() <= k) {
    const auto m = static_cast<unsigned>(bernoulli_memo.size());
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * bernoulli_memo[j];
    bernoulli_memo.push_back(-acc / Rational(m + 1));
  }
  return bernoulli_memo[k];
}

Rational bernoulli_poly_eval(unsigned k, const Rational& x) {
  Rational result = 0;
  Rational xpow = 1;  // x^{k-j}, built from j = k downwards
  for (unsigned j = k + 1; j-- > 0;) {
    result += Rational(binomial(k, j)) * bernoulli_number(j) * xpow;
    xpow *= x;
  }
  return result;
}

Rational l_value(unsigned k, std::int64_t D) {
  if (k < 1) throw std::invalid_argument("l_value: k must be >= 1");
  const auto chi = CharacterSpec::kronecker(D);
  const std::int64_t m = chi.modulus();
  Rational sum = 0;
  for (std::int64_t r = 1; r <= m; ++r) {
    const int c = chi(r);
    if (c == 0) continue;
    const Rational b = bernoulli_poly_eval(k, make_rational(r, m));
    if (c > 0)
      sum += b;
    else
      sum -= b;
  }
  Rational scale(ipow(m, k - 1), Integer(k));
  scale.canonicalize();
  return -scale * sum;
}

Rational l_norm_const(unsigned k, std::int64_t p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("l_norm_const: p must be an odd prime");
  const Rational l = l_value(k, signed_prime_discriminant(p));
  if (sgn(l) == 0)
    throw std::domain_error("l_norm_const: L(1-" + std::to_string(k) + ", chi) vanishes for p=" + std::to_string(p) +
                            "; k must have the parity of (p-1)/2");
  return 1 / l;
}

int predicted_l_norm_sign(unsigned k, std::int64_t p) {
  const std::int64_t exponent = static_cast<std::int64_t>(k / 2) + (p - 1) / 4;
  return (exponent % 2 == 0 ? 1 : -1) * kronecker(-2, p);
}

bool l_sign_check(unsigned k, std::int64_t p) {
  if (k < 2) throw std::invalid_argument("l_sign_check: k must be >= 2");
  if ((static_cast<std::int64_t>(k) - (p - 1) / 2) % 2 != 0)
    throw std::domain_error("l_sign_check: k must have the parity of (p-1)/2");
  return sign(l_norm_const(k, p)) == predicted_l_norm_sign(k, p);
}

}  // namespace etaq
