#include "etaq/series.hpp"

#include "etaq/arithmetic.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace etaq {

CoeffSeries CoeffSeries::zero(std::int64_t truncation) {
  if (truncation < 0) throw std::invalid_argument("CoeffSeries: negative truncation");
  return CoeffSeries(std::vector<Rational>(static_cast<std::size_t>(truncation + 1)));
}

CoeffSeries CoeffSeries::constant(const Rational& c, std::int64_t truncation) {
  auto s = zero(truncation);
  s.coeffs_[0] = c;
  return s;
}

CoeffSeries::CoeffSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("CoeffSeries: needs at least the constant term");
}

CoeffSeries::CoeffSeries(std::initializer_list<Rational> coeffs) : CoeffSeries(std::vector<Rational>(coeffs)) {}

CoeffSeries CoeffSeries::from_integers(std::span<const std::int64_t> values) {
  std::vector<Rational> c;
  c.reserve(values.size());
  for (const auto v : values) c.push_back(to_rational(v));
  return CoeffSeries(std::move(c));
}

CoeffSeries CoeffSeries::from_integers(std::span<const Integer> values) {
  std::vector<Rational> c;
  c.reserve(values.size());
  for (const auto& v : values) c.emplace_back(v);
  return CoeffSeries(std::move(c));
}

const Rational& CoeffSeries::at(std::int64_t n) const {
  if (n < 0 || n > truncation())
    throw TruncationError("coefficient q^" + std::to_string(n) + " is beyond truncation " +
                          std::to_string(truncation()));
  return coeffs_[static_cast<std::size_t>(n)];
}

CoeffSeries CoeffSeries::truncated(std::int64_t t) const {
  if (t > truncation())
    throw TruncationError("cannot extend a series truncated at " + std::to_string(truncation()) + " to " +
                          std::to_string(t));
  return CoeffSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (t + 1)));
}

bool CoeffSeries::all_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integral(c); });
}

CoeffSeries& CoeffSeries::operator+=(const CoeffSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CoeffSeries& CoeffSeries::operator-=(const CoeffSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CoeffSeries& CoeffSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CoeffSeries operator+(CoeffSeries a, const CoeffSeries& b) { return a += b; }
CoeffSeries operator-(CoeffSeries a, const CoeffSeries& b) { return a -= b; }
CoeffSeries operator-(CoeffSeries a) { return a *= Rational(-1); }
CoeffSeries operator*(const Rational& scalar, CoeffSeries a) { return a *= scalar; }

CoeffSeries series_mul(const CoeffSeries& a, const CoeffSeries& b) {
  const std::int64_t t = std::min(a.truncation(), b.truncation());
  std::vector<Rational> out(static_cast<std::size_t>(t + 1));
  Rational prod;
  for (std::int64_t i = 0; i <= t; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::int64_t j = 0; i + j <= t; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_mul(prod.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      out[i + j] += prod;
    }
  }
  return CoeffSeries(std::move(out));
}

CoeffSeries operator*(const CoeffSeries& a, const CoeffSeries& b) { return series_mul(a, b); }

CoeffSeries series_inverse(const CoeffSeries& a) {
  if (sgn(a[0]) == 0) throw std::domain_error("series_inverse: constant term is zero, series is not invertible");
  const std::int64_t t = a.truncation();
  std::vector<Rational> out(static_cast<std::size_t>(t + 1));
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::int64_t n = 1; n <= t; ++n) {
    Rational acc = 0;
    for (std::int64_t k = 1; k <= n; ++k)
      if (sgn(a[k]) != 0) acc += a[k] * out[n - k];
    out[n] = -acc * inv0;
  }
  return CoeffSeries(std::move(out));
}

CoeffSeries series_pow(const CoeffSeries& a, std::int64_t e) {
  if (e < 0) return series_pow(series_inverse(a), -e);
  CoeffSeries result = CoeffSeries::constant(1, a.truncation());
  CoeffSeries base = a;
  while (e > 0) {
    if (e & 1) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

CoeffSeries pochhammer_series(std::int64_t j, std::int64_t truncation) {
  if (j < 1) throw std::invalid_argument("pochhammer_series: j must be positive");
  auto out = std::vector<Rational>(static_cast<std::size_t>(truncation + 1));
  // sum over k in Z of (-1)^k q^{j k(3k-1)/2}; k and -k give the two pentagonal branches.
  out[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t e1 = j * (k * (3 * k - 1) / 2);
    const std::int64_t e2 = j * (k * (3 * k + 1) / 2);
    if (e1 > truncation) break;
    const int s = (k % 2 == 0) ? 1 : -1;
    out[e1] = s;
    if (e2 <= truncation) out[e2] = s;
  }
  return CoeffSeries(std::move(out));
}

EtaQuotientSpec::EtaQuotientSpec(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("EtaQuotientSpec: needs at least one factor");
  std::sort(factors_.begin(), factors_.end(),
            [](const EtaFactor& a, const EtaFactor& b) { return a.dilation < b.dilation; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].dilation < 1) throw std::invalid_argument("EtaQuotientSpec: dilations must be positive");
    if (factors_[i].exponent == 0) throw std::invalid_argument("EtaQuotientSpec: exponents must be nonzero");
    if (i > 0 && factors_[i - 1].dilation == factors_[i].dilation)
      throw std::invalid_argument("EtaQuotientSpec: repeated dilation " + std::to_string(factors_[i].dilation));
  }
}

EtaQuotientSpec::EtaQuotientSpec(std::initializer_list<EtaFactor> factors)
    : EtaQuotientSpec(std::vector<EtaFactor>(factors)) {}

EtaQuotientSpec EtaQuotientSpec::parse(std::string_view text) {
  std::vector<EtaFactor> factors;
  std::istringstream in{std::string(text)};
  std::string token;
  auto parse_int = [&](std::string_view s, std::int64_t& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("EtaQuotientSpec::parse: malformed token '" + token + "'");
  };
  while (in >> token) {
    const auto caret = token.find('^');
    std::int64_t j = 0, d = 1;
    if (caret == std::string::npos) {
      parse_int(token, j);
    } else {
      parse_int(std::string_view(token).substr(0, caret), j);
      parse_int(std::string_view(token).substr(caret + 1), d);
    }
    for (const auto& f : factors)
      if (f.dilation == j) throw std::invalid_argument("EtaQuotientSpec::parse: repeated dilation " + std::to_string(j));
    factors.push_back({j, d});
  }
  return EtaQuotientSpec(std::move(factors));
}

std::int64_t EtaQuotientSpec::weight_numerator() const {
  std::int64_t s = 0;
  for (const auto& f : factors_) s += f.exponent;
  return s;
}

std::int64_t EtaQuotientSpec::exponent24() const {
  std::int64_t s = 0;
  for (const auto& f : factors_) s += f.dilation * f.exponent;
  return s;
}

std::int64_t EtaQuotientSpec::dilation_gcd() const {
  std::int64_t g = 0;
  for (const auto& f : factors_) g = std::gcd(g, f.dilation);
  return g;
}

std::string EtaQuotientSpec::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(f.dilation) + '^' + std::to_string(f.exponent);
  }
  return out;
}

EtaQuotientSpec dilate_spec(const EtaQuotientSpec& spec, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("dilate_spec: c must be positive");
  std::vector<EtaFactor> out;
  for (const auto& f : spec.factors()) out.push_back({f.dilation * c, f.exponent});
  return EtaQuotientSpec(std::move(out));
}

std::vector<Integer> eta_product_integers(const EtaQuotientSpec& spec, std::int64_t truncation) {
  if (truncation < 0) throw std::invalid_argument("eta_product_integers: negative truncation");
  const std::int64_t g = spec.dilation_gcd();
  if (g > 1) {
    std::vector<EtaFactor> reduced;
    for (const auto& f : spec.factors()) reduced.push_back({f.dilation / g, f.exponent});
    const auto base = eta_product_integers(EtaQuotientSpec(std::move(reduced)), truncation / g);
    std::vector<Integer> out(static_cast<std::size_t>(truncation + 1));
    for (std::size_t i = 0; i < base.size(); ++i) out[i * g] = base[i];
    return out;
  }

  // F = prod (q^j;q^j)^{delta_j} has q F'/F = sum_k a(k) q^k with
  // a(k) = -sum_{j | k} delta_j j sigma(k/j), so n C(n) = sum_{k=1}^n a(k) C(n-k).
  const auto sig = sigma_table(truncation);
  std::vector<long> a(static_cast<std::size_t>(truncation + 1), 0);
  for (const auto& [j, delta] : spec.factors())
    for (std::int64_t m = 1; j * m <= truncation; ++m) a[j * m] -= static_cast<long>(delta * j * sig[m]);

  std::vector<Integer> c(static_cast<std::size_t>(truncation + 1));
  c[0] = 1;
  Integer acc;
  for (std::int64_t n = 1; n <= truncation; ++n) {
    acc = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      const long ak = a[k];
      if (ak > 0)
        mpz_addmul_ui(acc.get_mpz_t(), c[n - k].get_mpz_t(), static_cast<unsigned long>(ak));
      else if (ak < 0)
        mpz_submul_ui(acc.get_mpz_t(), c[n - k].get_mpz_t(), static_cast<unsigned long>(-ak));
    }
    mpz_divexact_ui(c[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return c;
}

EtaExpansion eta_quotient_series(const EtaQuotientSpec& spec, std::int64_t truncation) {
  return {spec.exponent24(), CoeffSeries::from_integers(eta_product_integers(spec, truncation))};
}

CoeffSeries eta_quotient_fourier(const EtaQuotientSpec& spec, std::int64_t truncation) {
  const std::int64_t e24 = spec.exponent24();
  if (e24 < 0 || e24 % 24 != 0)
    throw std::invalid_argument("eta_quotient_fourier: q-power " + std::to_string(e24) +
                                "/24 is not a nonnegative integer for " + spec.to_string());
  const std::int64_t shift = e24 / 24;
  if (truncation < 0) throw std::invalid_argument("eta_quotient_fourier: negative truncation");
  std::vector<Rational> c(static_cast<std::size_t>(truncation + 1));
  if (truncation >= shift) {
    const auto body = eta_product_integers(spec, truncation - shift);
    for (std::size_t i = 0; i < body.size(); ++i) c[i + shift] = body[i];
  }
  return CoeffSeries(std::move(c));
}

}  // namespace etaq
