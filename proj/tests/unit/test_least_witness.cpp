#include <doctest.h>

#include <random>

#include "primerep/error.hpp"
#include "primerep/least_witness.hpp"
#include "../corpus.hpp"

using namespace primerep;

TEST_CASE("s_f") {
  const auto r = s_f(parse_function("2^x-1"), BigInt(82677));
  CHECK(r.conclusive);
  CHECK(r.point == Point{11});
  CHECK(r.values == std::vector<BigInt>{2047});
  CHECK(s_f(parse_function("x"), BigInt(6)).point == Point{5});
  const auto fermat = s_f(parse_function("2^(2^x)+1"), BigInt(7));
  CHECK(fermat.point == Point{1});
  CHECK(fermat.values == std::vector<BigInt>{5});
}

TEST_CASE("s_system") {
  const auto r = s_system(parse_system("x; 2*x+1"), BigInt(9));
  CHECK(r.point == Point{2});
  CHECK(r.values == std::vector<BigInt>{2, 5});
  CHECK(s_system(parse_system("x"), BigInt(2)).point == Point{3});
  // x = 2 gives (2, 4): both exceed 1 and neither shares a factor with 105.
  const auto twins = s_system(parse_system("x; x+2"), BigInt(105));
  CHECK(twins.point == Point{2});
  CHECK(twins.values == std::vector<BigInt>{2, 4});
}

TEST_CASE("verify_bound") {
  const auto small = verify_bound(parse_function("x"), BoundKind::Sqrt, 2, 30);
  bool six = false;
  for (const auto& v : small.violations) six = six || (v.m == 6 && v.s == 5);
  CHECK(six);
  REQUIRE_FALSE(small.violations.empty());
  CHECK(small.violations.back().m == 30);
  CHECK(verify_bound(parse_function("x"), BoundKind::Sqrt, 31, 20'000).violations.empty());
  CHECK(verify_bound(parse_function("2^x-1"), BoundKind::Log2, 22, 20'000).violations.empty());
  CHECK(verify_bound(parse_function("2^(2^x)+1"), BoundKind::LinearFermat, 2, 5'000).violations.empty());
  CHECK_THROWS_AS(verify_bound(parse_function("x^2"), BoundKind::Sqrt, 31, 100), BoundFunctionMismatch);
  CHECK_THROWS_AS(verify_bound(parse_function("x"), BoundKind::Log2, 31, 100), BoundFunctionMismatch);
  const auto poly = verify_bound(parse_function("x^2+1"), BoundKind::Poly, 2, 5'000);
  REQUIRE(poly.threshold);
  for (const auto& v : poly.violations) CHECK(to_big_signed(v.m) <= *poly.threshold);
}

TEST_CASE("root bound reports an empirical threshold") {
  BoundOptions o;
  o.root_k = 3;
  const auto c = verify_bound(parse_function("x"), BoundKind::Root, 2, 20'000, o);
  REQUIRE(c.empirical_threshold);
  for (const auto& v : c.violations) CHECK(v.m <= *c.empirical_threshold);
}

TEST_CASE("exponent identity") {
  CHECK(exponent_identity_check(9, 9).empty());
  CHECK(exponent_identity_check(12, 12).empty());
  CHECK(exponent_identity_check(1, 10'000).empty());
}

TEST_CASE("property: s_f of the identity is the least coprime exceeding one") {
  const auto id = parse_function("x");
  for (std::uint64_t m = 2; m <= 100'000; ++m) {
    const auto r = s_f(id, to_big(m));
    REQUIRE(r.conclusive);
    REQUIRE(static_cast<std::uint64_t>((*r.point)[0]) == least_coprime_exceeding_one(m));
  }
}

TEST_CASE("property: s_system of one member equals s_f") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto text = primerep_tests::kPolynomialCorpus[rng() % primerep_tests::kPolynomialCorpus.size()];
    const auto f = parse_function(text);
    const BigInt m(static_cast<long>(2 + rng() % 5000));
    const auto a = s_f(f, m, 10'000);
    const auto b = s_system(FunctionSystem{f}, m, 10'000);
    REQUIRE(a.point == b.point);
    REQUIRE(a.conclusive == b.conclusive);
    if (a.point) {
      REQUIRE(a.values[0] > 1);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), a.values[0].get_mpz_t(), m.get_mpz_t());
      REQUIRE(g == 1);
    }
  }
}

TEST_CASE("property: order-based S for 2^x-1 matches the scan for odd m") {
  const auto f = parse_function("2^x-1");
  for (std::uint64_t m = 3; m <= 20'000; m += 2) {
    const auto scan = s_f(f, to_big(m));
    REQUIRE(scan.conclusive);
    const std::uint64_t s = s_mersenne_by_order(m);
    REQUIRE(static_cast<std::uint64_t>((*scan.point)[0]) == s);
    const Point p{static_cast<std::int64_t>(s)};
    BigInt g;
    const BigInt r = evaluate_mod(f, std::span<const std::int64_t>(p), to_big(m));
    const BigInt bm = to_big(m);
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), bm.get_mpz_t());
    REQUIRE(g == 1);
  }
}
