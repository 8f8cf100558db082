#include "etaq/arithmetic.hpp"
#include "etaq/characters.hpp"
#include "etaq/hurwitz.hpp"
#include "etaq/operators.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <thread>

using namespace etaq;

TEST_SUITE("hurwitz") {

TEST_CASE("H(D) examples") {
  CHECK(hurwitz(0) == Rational(-1, 12));
  CHECK(hurwitz(3) == Rational(1, 3));
  CHECK(hurwitz(4) == Rational(1, 2));
  CHECK(hurwitz(23) == 3);
  CHECK(hurwitz(7) == 1);
  CHECK(hurwitz(12) == Rational(4, 3));
  CHECK(hurwitz(1) == 0);
  CHECK(hurwitz(2) == 0);
  CHECK_THROWS(hurwitz(-3));
}

TEST_CASE("H vanishes off discriminants and is positive on them") {
  for (std::int64_t D = 1; D <= 3000; ++D) {
    const auto h = hurwitz(D);
    if (D % 4 == 1 || D % 4 == 2)
      CHECK(h == 0);
    else
      CHECK(sign(h) > 0);
  }
}

TEST_CASE("class number formula at fundamental discriminants") {
  for (std::int64_t D = 3; D <= 400; ++D) {
    if (!is_fundamental_discriminant(-D)) continue;
    const auto chi = [D](std::int64_t r) { return kronecker(-D, r); };
    CHECK(hurwitz(D) == oracle::class_number_formula(D, chi));
  }
}

TEST_CASE("Kronecker-Hurwitz relation") {
  // sum_{t in Z} H(4n - t^2) = 2 sigma(n) - sum_{d | n} min(d, n/d)
  for (std::int64_t n = 1; n <= 400; ++n) {
    Rational lhs = 0;
    for (std::int64_t t = -2 * n; t <= 2 * n; ++t)
      if (t * t <= 4 * n) lhs += hurwitz(4 * n - t * t);
    std::int64_t rhs = 2 * oracle::brute_sigma(n);
    for (const auto d : divisors(n)) rhs -= std::min(d, n / d);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("H(D f^2) = H(D) S_D(f)") {
  for (std::int64_t D = 3; D <= 100; ++D) {
    if (!is_fundamental_discriminant(-D)) continue;
    for (std::int64_t f = 1; f <= 10; ++f) CHECK(hurwitz(D * f * f) == hurwitz(D) * Rational(s_d_factor(D, f)));
  }
}

TEST_CASE("S_D(f)") {
  CHECK(s_d_factor(7, 1) == 1);
  CHECK(s_d_factor(3, 2) == 4);
  for (std::int64_t D : {3, 11, 19, 35, 43, 51}) CHECK(s_d_factor(D, 2) == 4);  // D = 3 (mod 8)
  CHECK(hurwitz(12) == hurwitz(3) * Rational(s_d_factor(3, 2)));
  CHECK_THROWS(s_d_factor(12, 2));
  CHECK_THROWS(s_d_factor(1, 2));
  CHECK_THROWS(s_d_factor(3, 0));
  for (std::int64_t D : {3, 4, 7, 20, 23})
    for (std::int64_t a = 1; a <= 30; ++a)
      for (std::int64_t b = 1; b <= 30; ++b)
        if (std::gcd(a, b) == 1) CHECK(s_d_factor(D, a * b) == s_d_factor(D, a) * s_d_factor(D, b));
}

TEST_CASE("cache tabulation matches single enumeration") {
  HurwitzCache cache;
  cache.tabulate(5000);
  CHECK(cache.tabulated_limit() == 5000);
  for (std::int64_t D = 0; D <= 5000; ++D) CHECK(cache(D) == hurwitz(D));
  CHECK(cache(6007) == hurwitz(6007));
  CHECK(cache.at_ratio(12, 4) == hurwitz(3));
  CHECK(cache.at_ratio(13, 4) == 0);
  CHECK_THROWS(cache.at_ratio(1, 0));
  cache.tabulate(100);
  CHECK(cache.tabulated_limit() == 5000);
}

TEST_CASE("cache is consistent under concurrent reads") {
  HurwitzCache cache;
  cache.tabulate(1000);
  std::vector<std::vector<Rational>> seen(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (std::int64_t D = 900 + t; D <= 3000; D += 3) seen[t].push_back(cache(D));
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t) {
    std::size_t i = 0;
    for (std::int64_t D = 900 + t; D <= 3000; D += 3) CHECK(seen[t][i++] == hurwitz(D));
  }
}

TEST_CASE("Hurwitz series") {
  const auto h = hurwitz_series(50);
  CHECK(h[0] == Rational(-1, 12));
  CHECK(h[1] == 0);
  CHECK(h[7] == 1);
  CHECK_THROWS(hurwitz_series(-1));
}

TEST_CASE("sieved Hurwitz examples") {
  const auto h13 = hurwitz_sieved(1, 3, 10);
  CHECK(h13[1] == Rational(1, 3));
  CHECK(h13[3] == 0);
  CHECK(hurwitz_sieved(4, 3, 2)[0] == Rational(1, 6));
  CHECK_THROWS(hurwitz_sieved(3, 3, 10));
  CHECK_THROWS(hurwitz_sieved(1, 4, 10));
  CHECK_THROWS(hurwitz_sieved(0, 3, 10));
}

TEST_CASE("sieved Hurwitz equals the operator composition") {
  const std::int64_t T = 300;
  for (const auto& [l1, l2] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 3}, {4, 3}, {1, 2}, {5, 6}}) {
    const auto H = hurwitz_series(l1 * l2 * T);
    const auto direct = hurwitz_sieved(l1, l2, T);
    const auto composed = op_U(H, l1 * l2) - Rational(l2) * op_V(op_U(H, l1), l2, T);
    CHECK(direct == composed);
  }
}

}  // TEST_SUITE
