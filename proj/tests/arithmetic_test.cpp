#include "etaq/arithmetic.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace etaq;

TEST_SUITE("arithmetic") {

TEST_CASE("factorize small values") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12).terms() == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(9991).terms() == std::vector<PrimePower>{{97, 1}, {103, 1}});
  CHECK(factorize(2).terms() == std::vector<PrimePower>{{2, 1}});
  CHECK(factorize(1 << 20).terms() == std::vector<PrimePower>{{2, 20}});
  CHECK(factorize(999999937).terms() == std::vector<PrimePower>{{999999937, 1}});
}

TEST_CASE("factorize rejects nonpositive input") {
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-6), std::invalid_argument);
}

TEST_CASE("factorization invariants up to 5000") {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    const auto f = factorize(n);
    CHECK(f.value() == n);
    std::int64_t last = 1;
    for (const auto& t : f) {
      CHECK(t.prime > last);
      CHECK(t.exponent >= 1);
      CHECK(is_prime(t.prime));
      last = t.prime;
    }
  }
}

TEST_CASE("Factorization constructor validates terms") {
  CHECK_THROWS(Factorization({{3, 1}, {2, 1}}));
  CHECK_THROWS(Factorization({{2, 0}}));
  CHECK_THROWS(Factorization({{4, 1}}));
}

TEST_CASE("radical, ord and squarefree") {
  const auto f = factorize(360);
  CHECK(f.radical() == 30);
  CHECK(f.ord(2) == 3);
  CHECK(f.ord(7) == 0);
  CHECK_FALSE(f.squarefree());
  CHECK(factorize(30).squarefree());
  CHECK(ord(162, 3) == 4);
  CHECK(remove_factor(162, 3) == 2);
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(12, 1) == 1);
  CHECK(kronecker(12, 5) == -1);
  CHECK(kronecker(-3, 2) == -1);
}

TEST_CASE("kronecker edge cases") {
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
  CHECK(kronecker(4, 2) == 0);
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(3, 2) == -1);
  CHECK(kronecker(-1, -1) == -1);
  CHECK(kronecker(1, -1) == 1);
}

TEST_CASE("kronecker agrees with Euler's criterion at odd primes") {
  for (std::int64_t p = 3; p < 200; p += 2) {
    if (!is_prime(p)) continue;
    for (std::int64_t a = -60; a <= 60; ++a) CHECK(kronecker(a, p) == oracle::euler_legendre(a, p));
  }
}

TEST_CASE("kronecker is completely multiplicative and periodic for fundamental D") {
  for (const std::int64_t D : {-4, -3, -8, 8, 12, -24, 5, -7, 13, 24, -20}) {
    const std::int64_t period = D < 0 ? -D : D;
    for (std::int64_t n = 1; n <= 1000; ++n) {
      CHECK(kronecker(D, n) == kronecker(D, n + period));
      for (std::int64_t m = 1; m <= 20; ++m) CHECK(kronecker(D, n * m) == kronecker(D, n) * kronecker(D, m));
    }
  }
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  // sum_{d|n} mu(d) = [n = 1]
  for (std::int64_t n = 1; n <= 500; ++n) {
    int s = 0;
    for (const auto d : divisors(n)) s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("divisor functions against brute force") {
  const auto table = sigma_table(300);
  CHECK(table[0] == 0);
  for (std::int64_t n = 1; n <= 300; ++n) {
    CHECK(sigma(n) == oracle::brute_sigma(n));
    CHECK(table[n] == sigma(n));
    CHECK(divisor_count(n) == oracle::brute_sigma(n, 0));
    const auto ds = divisors(n);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    CHECK(static_cast<std::int64_t>(ds.size()) == divisor_count(n));
  }
}

TEST_CASE("twisted divisor sum examples") {
  CHECK(twisted_divisor_sum(6, 1, 1) == 12);
  CHECK(twisted_divisor_sum(1, -4, 5) == 1);
  CHECK(twisted_divisor_sum(1, 12, 0) == 1);
  CHECK(twisted_divisor_sum(5, 12, 1) == -4);
  CHECK(twisted_divisor_sum(12, 1, 0) == 6);
}

TEST_CASE("twisted divisor sum is multiplicative") {
  for (const std::int64_t D : {1, -4, -3, 12, 5}) {
    for (std::int64_t m = 1; m <= 100; ++m)
      for (std::int64_t n = 1; m * n <= 10000 && n <= 100; ++n) {
        if (std::gcd(m, n) != 1) continue;
        CHECK(twisted_divisor_sum(m * n, D, 2) == twisted_divisor_sum(m, D, 2) * twisted_divisor_sum(n, D, 2));
      }
  }
}

TEST_CASE("sign of twisted sum examples") {
  CHECK(sign_of_twisted_sum(5, 3, 2) == -1);
  CHECK(sign_of_twisted_sum(9, 3, 2) == 1);
  CHECK(sign_of_twisted_sum(4, 3, 2) == 1);
}

TEST_CASE("sign of twisted sum equals (m/p)") {
  for (const std::int64_t p : {3, 5, 7, 11, 13})
    for (unsigned k = 1; k <= 3; ++k)
      for (std::int64_t n = 1; n <= 10000; ++n) CHECK(sign_of_twisted_sum(n, p, k) == kronecker(remove_factor(n, p), p));
}

TEST_CASE("representation counts") {
  const std::vector<std::int64_t> five = {1, 1, 2, 2, 2};
  const std::vector<std::int64_t> four = {1, 1, 2, 2};
  CHECK(rep_count_quadratic(five, 0) == 1);
  CHECK(rep_count_quadratic(five, 1) == 4);
  CHECK(rep_count_quadratic(four, 1) == 4);
  CHECK(rep_count_quadratic(four, -1) == 0);
  const std::vector<std::int64_t> empty;
  CHECK_THROWS(rep_count_quadratic(empty, 1));
  // r_4(n) = 8 sum_{d | n, 4 !| d} d
  const std::vector<std::int64_t> squares = {1, 1, 1, 1};
  const auto table = rep_count_table(squares, 200);
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t s = 0;
    for (const auto d : divisors(n))
      if (d % 4 != 0) s += d;
    CHECK(table[n] == 8 * s);
  }
  const auto t5 = rep_count_table(five, 150);
  for (std::int64_t n = 0; n <= 150; ++n) CHECK(t5[n] == rep_count_quadratic(five, n));
}

TEST_CASE("r_(1,1,2,2) is positive") {
  const std::vector<std::int64_t> four = {1, 1, 2, 2};
  const auto t = rep_count_table(four, 5000);
  for (std::int64_t n = 1; n <= 5000; ++n) CHECK(t[n] > 0);
}

TEST_CASE("triangular representation counts") {
  CHECK(triangular_rep_count(0) == 1);
  CHECK(triangular_rep_count(1) == 2);
  CHECK(triangular_rep_count(2) == 2);
  const auto t = triangular_rep_table(5000);
  for (std::int64_t n = 0; n <= 5000; ++n) CHECK(t[n] > 0);
  for (std::int64_t n = 0; n <= 300; ++n) CHECK(t[n] == triangular_rep_count(n));
}

}  // TEST_SUITE
