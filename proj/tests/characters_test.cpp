#include "etaq/arithmetic.hpp"
#include "etaq/characters.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace etaq;

TEST_SUITE("characters") {

TEST_CASE("CharacterSpec") {
  const auto chi = CharacterSpec::kronecker(-4);
  CHECK(chi(3) == -1);
  CHECK(chi(2) == 0);
  CHECK(chi.parity() == -1);
  CHECK(chi.modulus() == 4);
  CHECK(CharacterSpec::trivial().is_trivial());
  CHECK(CharacterSpec::trivial()(12) == 1);
  CHECK(CharacterSpec::kronecker(12).parity() == 1);
  CHECK_THROWS(CharacterSpec::kronecker(3));
  CHECK_THROWS(CharacterSpec::kronecker(-2));
}

TEST_CASE("fundamental discriminants") {
  for (const std::int64_t D : {-3, -4, -7, -8, -11, -15, -20, -24, 5, 8, 12, 13, 24})
    CHECK(is_fundamental_discriminant(D));
  for (const std::int64_t D : {-12, -16, -27, 1, 0, 9, 4, -1, 3, 20})
    CHECK_FALSE(is_fundamental_discriminant(D));
}

TEST_CASE("Bernoulli numbers") {
  const std::vector<Rational> known = {1,  Rational(-1, 2), Rational(1, 6),   0, Rational(-1, 30), 0,
                                       Rational(1, 42), 0,  Rational(-1, 30), 0, Rational(5, 66),  0,
                                       Rational(-691, 2730)};
  for (unsigned k = 0; k < known.size(); ++k) CHECK(bernoulli_number(k) == known[k]);
  CHECK(bernoulli_number(21) == 0);
}

TEST_CASE("Bernoulli polynomial examples") {
  CHECK(bernoulli_poly_eval(1, 0) == Rational(-1, 2));
  CHECK(bernoulli_poly_eval(2, Rational(1, 4)) == Rational(-1, 48));
  CHECK(bernoulli_poly_eval(3, Rational(3, 4)) == Rational(-3, 64));
  CHECK(bernoulli_poly_eval(0, Rational(7, 3)) == 1);
}

TEST_CASE("Bernoulli polynomial identities") {
  for (unsigned k = 0; k <= 14; ++k) {
    CHECK(bernoulli_poly_eval(k, 0) == bernoulli_number(k));
    const Rational diff = bernoulli_poly_eval(k, 1) - bernoulli_poly_eval(k, 0);
    CHECK(diff == (k == 1 ? 1 : 0));
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 40; ++trial) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    for (unsigned k = 0; k <= 12; ++k) {
      const Rational lhs = bernoulli_poly_eval(k, 1 - x);
      const Rational rhs = (k % 2 == 0 ? 1 : -1) * bernoulli_poly_eval(k, x);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("L-value examples") {
  CHECK(l_value(3, -4) == Rational(-1, 2));
  CHECK(l_value(2, -3) == 0);
  CHECK(l_value(2, 12) == -2);
  CHECK(l_value(2, 5) == Rational(-2, 5));
  CHECK(l_value(3, -3) == Rational(-2, 9));
  CHECK(l_value(2, 1) == Rational(-1, 12));  // zeta(-1)
  CHECK(l_value(4, 1) == Rational(1, 120));  // zeta(-3)
}

TEST_CASE("L-values from class numbers") {
  // L(0, chi_D) = 2 h(D) / w(D) = H(-D) for fundamental D < 0.
  for (const std::int64_t D : {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24}) {
    const auto chi = [D](std::int64_t r) { return kronecker(D, r); };
    CHECK(l_value(1, D) == oracle::class_number_formula(-D, chi));
  }
}

TEST_CASE("L-value vanishes exactly on parity mismatch") {
  for (std::int64_t D = -24; D <= 24; ++D) {
    if (!is_fundamental_discriminant(D)) continue;
    const int parity = kronecker(D, -1);
    for (unsigned k = 1; k <= 12; ++k) {
      const bool mismatch = parity != (k % 2 == 0 ? 1 : -1);
      CHECK((l_value(k, D) == 0) == mismatch);
    }
  }
}

TEST_CASE("normalizing constants") {
  CHECK(sign(l_norm_const(2, 5)) == -1);
  CHECK(sign(l_norm_const(3, 3)) == -1);
  CHECK(l_norm_const(3, 3) == Rational(-9, 2));
  CHECK_THROWS_AS(l_norm_const(2, 3), std::domain_error);
}

TEST_CASE("L-sign examples") {
  CHECK(l_sign_check(2, 5));
  CHECK(l_sign_check(3, 3));
  CHECK(l_sign_check(5, 11));
  CHECK_THROWS(l_sign_check(2, 3));
  CHECK_THROWS(l_sign_check(1, 3));
}

TEST_CASE("L-sign closed form for p <= 13 and k <= 20") {
  for (const std::int64_t p : {3, 5, 7, 11, 13}) {
    const unsigned kp = static_cast<unsigned>((p - 1) / 2);
    for (unsigned k = 2; k <= 20; ++k) {
      if (k % 2 != kp % 2) continue;
      CHECK(l_sign_check(k, p));
    }
    // the two corollary cases
    if (kp >= 2) CHECK(sign(l_norm_const(kp, p)) == kronecker(-8, p));
    CHECK(sign(l_norm_const(static_cast<unsigned>(p) * kp, p)) == kronecker(8, p));
  }
}

}  // TEST_SUITE
