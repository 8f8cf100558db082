#include "etaq/eisenstein.hpp"

#include "etaq/arithmetic.hpp"

#include <stdexcept>

namespace etaq {

EisensteinSpec::EisensteinSpec(unsigned weight, CharacterSpec chi, CharacterSpec psi)
    : weight(weight), chi(chi), psi(psi) {
  if (weight < 2) throw std::invalid_argument("EisensteinSpec: weight must be >= 2");
  if (weight == 2 && chi.is_trivial() && psi.is_trivial())
    throw std::invalid_argument("EisensteinSpec: weight 2 needs a nontrivial character; use e2_coeffs for E_2");
}

std::string EisensteinSpec::to_string() const {
  return "E_{" + std::to_string(weight) + "," + chi.to_string() + "," + psi.to_string() + "}";
}

CoeffSeries eisenstein_coeffs(const EisensteinSpec& spec, std::int64_t truncation) {
  if (truncation < 0) throw std::invalid_argument("eisenstein_coeffs: negative truncation");
  std::vector<Integer> sums(static_cast<std::size_t>(truncation + 1));
  for (std::int64_t d = 1; d <= truncation; ++d) {
    const int psi_d = spec.psi(d);
    if (psi_d == 0) continue;
    const Integer dk = ipow(d, spec.weight - 1);
    for (std::int64_t m = 1; d * m <= truncation; ++m) {
      const int c = psi_d * spec.chi(m);
      if (c > 0)
        sums[d * m] += dk;
      else if (c < 0)
        sums[d * m] -= dk;
    }
  }
  std::vector<Rational> out(static_cast<std::size_t>(truncation + 1));
  if (spec.chi.is_trivial()) out[0] = l_value(spec.weight, spec.psi.discriminant());
  for (std::int64_t n = 1; n <= truncation; ++n) out[n] = Rational(2 * sums[n]);
  return CoeffSeries(std::move(out));
}

CoeffSeries e2_coeffs(std::int64_t truncation) {
  if (truncation < 0) throw std::invalid_argument("e2_coeffs: negative truncation");
  const auto sig = sigma_table(truncation);
  std::vector<Rational> out(static_cast<std::size_t>(truncation + 1));
  out[0] = 1;
  for (std::int64_t n = 1; n <= truncation; ++n) out[n] = to_rational(-24 * sig[n]);
  return CoeffSeries(std::move(out));
}

CoeffSeries normalized_eisenstein(unsigned k, std::int64_t p, std::int64_t truncation) {
  const Rational norm = l_norm_const(k, p);
  const EisensteinSpec spec(k, CharacterSpec::trivial(), CharacterSpec::kronecker(signed_prime_discriminant(p)));
  return norm * eisenstein_coeffs(spec, truncation);
}

}  // namespace etaq
