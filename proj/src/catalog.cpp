#include "etaq/catalog.hpp"

#include "etaq/arithmetic.hpp"
#include "etaq/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace etaq {

namespace {

using Pair = std::pair<IdentityPipeline, IdentityPipeline>;

Integer character_divisor_sum(std::int64_t n, std::int64_t D, unsigned power) {
  return n < 1 ? Integer(0) : twisted_divisor_sum(n, D, power);
}

bool is_square(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

std::int64_t isqrt_exact(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

IdentityPipeline closed(std::string label, std::function<Rational(std::int64_t)> f) {
  return IdentityPipeline::generator(std::move(f), std::move(label));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;

  c.push_back({"theta", "eta(16z)^2/eta(8z) = sum q^{(2n+1)^2}", 1000, [](std::int64_t) {
                 return Pair{IdentityPipeline::eta({{8, -1}, {16, 2}}), closed("odd squares", [](std::int64_t n) {
                               return Rational(n % 2 == 1 && is_square(n) ? 1 : 0);
                             })};
               }});

  c.push_back({"triangular", "C_{1^-2 2^3 4^2}(n) = representations as a sum of three triangular numbers", 1000,
               [](std::int64_t bound) {
                 const auto t = triangular_rep_table(bound);
                 return Pair{IdentityPipeline::eta_product({{1, -2}, {2, 3}, {4, 2}}),
                             IdentityPipeline::fixed(CoeffSeries::from_integers(t), "triangular counts")};
               }});

  c.push_back({"Q2", "eta^4/eta(2z)^2 = 1 - 4 sum (-1)^{n+1} sum_{d|n} (-1/d) q^n", 1000, [](std::int64_t) {
                 return Pair{IdentityPipeline::eta({{1, 4}, {2, -2}}), closed("Q2 closed form", [](std::int64_t n) {
                               if (n == 0) return Rational(1);
                               const int s = n % 2 == 1 ? 1 : -1;
                               return Rational(-4 * s * character_divisor_sum(n, -4, 0));
                             })};
               }});

  c.push_back({"P2", "eta^2/eta(2z) = sum_{n in Z} (-1)^n q^{n^2}", 1000, [](std::int64_t) {
                 return Pair{IdentityPipeline::eta({{1, 2}, {2, -1}}), closed("P2 closed form", [](std::int64_t n) {
                               if (n == 0) return Rational(1);
                               if (!is_square(n)) return Rational(0);
                               return Rational(isqrt_exact(n) % 2 == 0 ? 2 : -2);
                             })};
               }});

  c.push_back({"P3", "eta^3/eta(3z) = 1 - 3 sum sum (d/3) q^n + 9 sum sum (d/3) q^{3n}", 1000, [](std::int64_t) {
                 return Pair{IdentityPipeline::eta({{1, 3}, {3, -1}}), closed("P3 closed form", [](std::int64_t n) {
                               if (n == 0) return Rational(1);
                               Integer v = -3 * character_divisor_sum(n, -3, 0);
                               if (n % 3 == 0) v += 9 * character_divisor_sum(n / 3, -3, 0);
                               return Rational(v);
                             })};
               }});

  c.push_back({"P5", "eta^5/eta(5z) = 1 - 5 sum sum (d/5) d q^n", 1000, [](std::int64_t) {
                 return Pair{IdentityPipeline::eta({{1, 5}, {5, -1}}), closed("P5 closed form", [](std::int64_t n) {
                               if (n == 0) return Rational(1);
                               return Rational(-5 * character_divisor_sum(n, 5, 1));
                             })};
               }});

  c.push_back({"Q3", "eta^9/eta(3z)^3 = 1 - 9 sum sum (d/3) d^2 q^n", 1000, [](std::int64_t) {
                 return Pair{IdentityPipeline::eta({{1, 9}, {3, -3}}), closed("Q3 closed form", [](std::int64_t n) {
                               if (n == 0) return Rational(1);
                               return Rational(-9 * character_divisor_sum(n, -3, 2));
                             })};
               }});

  c.push_back({"Q3-eisenstein", "eta^9/eta(3z)^3 = normalized E_{3, 1, chi_-3}", 1000, [](std::int64_t) {
                 return Pair{IdentityPipeline::eta({{1, 9}, {3, -3}}), IdentityPipeline::normalized_eisenstein(3, 3)};
               }});

  c.push_back({"P5-eisenstein", "eta^5/eta(5z) = normalized E_{2, 1, chi_5}", 1000, [](std::int64_t) {
                 return Pair{IdentityPipeline::eta({{1, 5}, {5, -1}}), IdentityPipeline::normalized_eisenstein(2, 5)};
               }});

  c.push_back({"sigma-16",
               "eta^4 eta(2z)^2/eta(4z)^2 = 1 - 4 sum (-4/n) sigma(n) q^n + 8 sum (-1)^n sigma(n) q^{4n} - 32 sum "
               "sigma(n) q^{16n}",
               1000, [](std::int64_t) {
                 return Pair{IdentityPipeline::eta({{1, 4}, {2, 2}, {4, -2}}),
                             closed("sigma closed form", [](std::int64_t n) {
                               if (n == 0) return Rational(1);
                               Integer v = -4 * kronecker(-4, n) * to_integer(sigma(n));
                               if (n % 4 == 0) v += 8 * ((n / 4) % 2 == 0 ? 1 : -1) * to_integer(sigma(n / 4));
                               if (n % 16 == 0) v -= 32 * to_integer(sigma(n / 16));
                               return Rational(v);
                             })};
               }});

  c.push_back({"sigma-16-e2",
               "eta^4 eta(2z)^2/eta(4z)^2 = -2 E_{2,chi_-4,chi_-4} + 1/3 E2|V4 - 2/3 E2|U2|V8 + 4/3 E2|V16", 1000,
               [](std::int64_t) {
                 const auto chi = CharacterSpec::kronecker(-4);
                 const auto E2 = IdentityPipeline::e2();
                 return Pair{IdentityPipeline::eta({{1, 4}, {2, 2}, {4, -2}}),
                             Rational(-2) * IdentityPipeline::eisenstein({2, chi, chi}) +
                                 make_rational(1, 3) * E2.V(4) - make_rational(2, 3) * E2.U(2).V(8) +
                                 make_rational(4, 3) * E2.V(16)};
               }});

  c.push_back({"b2-eisenstein",
               "eta(3z)^3 eta(9z)^3/eta(6z)^2 = 1/2 E|S12,1 - 1/6 E|S12,7 - 1/6 E|S6,4 - 1/3 E'|S6,4, E = "
               "E_{2,1,chi_12}, E' = E_{2,chi_12,1}",
               1000, [](std::int64_t) {
                 const auto E = IdentityPipeline::eisenstein({2, CharacterSpec::trivial(), CharacterSpec::kronecker(12)});
                 const auto Ebar =
                     IdentityPipeline::eisenstein({2, CharacterSpec::kronecker(12), CharacterSpec::trivial()});
                 return Pair{IdentityPipeline::eta({{3, 3}, {6, -2}, {9, 3}}),
                             make_rational(1, 2) * E.sieve(12, 1) - make_rational(1, 6) * E.sieve(12, 7) -
                                 make_rational(1, 6) * E.sieve(6, 4) - make_rational(1, 3) * Ebar.sieve(6, 4)};
               }});

  c.push_back({"classnum-hurwitz",
               "eta(8z)^2 eta(16z)^2/eta(24z) = (H43 - H13)|S24,1 - 1/2 (H43 - H13)|S24,17 - (H43 + 2 H13)|S24,9", 2000,
               [](std::int64_t bound) {
                 auto cache = std::make_shared<HurwitzCache>();
                 cache->tabulate(12 * bound);
                 const auto H43 = IdentityPipeline::hurwitz_sieved(4, 3, cache);
                 const auto H13 = IdentityPipeline::hurwitz_sieved(1, 3, cache);
                 return Pair{IdentityPipeline::eta({{8, 2}, {16, 2}, {24, -1}}),
                             (H43 - H13).sieve(24, 1) - make_rational(1, 2) * (H43 - H13).sieve(24, 17) -
                                 (H43 + Rational(2) * H13).sieve(24, 9)};
               }});

  return c;
}

}  // namespace

const std::vector<CatalogEntry>& identity_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : identity_catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

VerificationReport verify_catalog_identity(std::string_view name, std::int64_t bound) {
  const auto& entry = catalog_entry(name);
  const auto [lhs, rhs] = entry.build(bound);
  return verify_identity(lhs, rhs, bound, entry.name);
}

}  // namespace etaq
