#include "etaq/pipeline.hpp"

#include <doctest.h>

using namespace etaq;

namespace {

CoeffSeries ints(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (const auto x : v) c.emplace_back(x);
  return CoeffSeries(std::move(c));
}

IdentityPipeline counter() {
  return IdentityPipeline::generator([](std::int64_t n) { return Rational(n); }, "n");
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("leaves evaluate to the requested bound") {
  CHECK(counter().evaluate(4) == ints({0, 1, 2, 3, 4}));
  CHECK(IdentityPipeline::eta({{1, 24}}).evaluate(3) == ints({0, 1, -24, 252}));
  CHECK(IdentityPipeline::eta_product({{1, 2}, {2, -1}}).evaluate(4) == ints({1, -2, 0, 0, 2}));
  CHECK(IdentityPipeline::e2().evaluate(1) == ints({1, -24}));
}

TEST_CASE("operators pull the needed truncation through") {
  const auto p = counter().U(3);
  CHECK(p.required_truncation(10) == 30);
  CHECK(p.evaluate(3) == ints({0, 3, 6, 9}));
  const auto v = counter().V(4);
  CHECK(v.required_truncation(10) == 2);
  CHECK(v.evaluate(10) == ints({0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0}));
  const auto uv = counter().U(2).V(8);
  CHECK(uv.required_truncation(100) == 24);
  const auto t = counter().hecke(5, 2, CharacterSpec::trivial());
  CHECK(t.required_truncation(7) == 35);
  const auto demands = (counter().U(2) + counter().V(3)).leaf_demands(12);
  REQUIRE(demands.size() == 2);
  CHECK(demands[0].truncation == 24);
  CHECK(demands[1].truncation == 4);
}

TEST_CASE("linear combinations") {
  const auto a = counter();
  const auto b = IdentityPipeline::generator([](std::int64_t) { return Rational(1); }, "1");
  CHECK((a + b).evaluate(2) == ints({1, 2, 3}));
  CHECK((a - b).evaluate(2) == ints({-1, 0, 1}));
  CHECK((-a).evaluate(2) == ints({0, -1, -2}));
  CHECK((Rational(1, 2) * a).evaluate(2) == CoeffSeries({0, Rational(1, 2), 1}));
  CHECK((a.sieve(2, 1) + a.sieve(2, 0)).evaluate(5) == a.evaluate(5));
  CHECK((a.twist(CharacterSpec::kronecker(-4))).evaluate(3) == ints({0, 1, 0, -3}));
}

TEST_CASE("a fixed leaf that is too short is an error, never zero-filled") {
  const auto f = IdentityPipeline::fixed(ints({1, 2, 3}), "short");
  CHECK(f.evaluate(2) == ints({1, 2, 3}));
  CHECK_THROWS_AS(f.evaluate(3), TruncationError);
  CHECK_THROWS_AS(f.U(2).evaluate(2), TruncationError);
  CHECK(f.V(2).evaluate(5) == ints({1, 0, 2, 0, 3, 0}));
}

TEST_CASE("describe") {
  const auto d = (Rational(1, 2) * counter().sieve(12, 1) - counter().V(3)).describe();
  CHECK(d == "1/2*(n|S12,1) - (n|V3)");
}

TEST_CASE("constructor argument checks") {
  CHECK_THROWS(counter().U(0));
  CHECK_THROWS(counter().V(0));
  CHECK_THROWS(counter().sieve(0, 1));
  CHECK_THROWS(counter().hecke(6, 2, CharacterSpec::trivial()));
  CHECK_THROWS(counter().evaluate(-1));
  CHECK_THROWS(IdentityPipeline::hurwitz(nullptr));
}

}  // TEST_SUITE
