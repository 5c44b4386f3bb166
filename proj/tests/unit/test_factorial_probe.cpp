#include <doctest.h>

#include "primerep/factorial_probe.hpp"

using namespace primerep;

TEST_CASE("coprimality and size against l!") {
  CHECK(coprime_to_factorial(BigInt(187), 6));
  CHECK_FALSE(coprime_to_factorial(BigInt(187), 11));
  CHECK(coprime_to_factorial(BigInt(7), 6));
  CHECK(below_factorial(BigInt(719), 6));
  CHECK_FALSE(below_factorial(BigInt(720), 6));
  BigInt f30 = 1;
  for (long i = 2; i <= 30; ++i) f30 *= i;
  CHECK_FALSE(below_factorial(f30, 30));
  CHECK(below_factorial(f30 - 1, 30));
  CHECK(below_factorial(f30 / 31, 30));
}

TEST_CASE("(x, x+180) least witnesses by l") {
  const auto fs = parse_system("x; x+180");
  const std::vector<std::pair<std::uint64_t, std::int64_t>> expected = {
      {6, 7}, {7, 11}, {10, 11}, {11, 13}, {12, 13}, {13, 17}, {16, 17}, {17, 19}, {18, 19}, {19, 31}, {30, 31}};
  for (auto [l, x] : expected) {
    const auto s = least_factorial_witness(fs, l);
    REQUIRE(s.value_least);
    CHECK(s.value_least->point == Point{x});
    CHECK(s.conclusive);
  }
  const auto six = least_factorial_witness(fs, 6);
  CHECK(six.value_least->values == std::vector<BigInt>{7, 187});
  CHECK_FALSE(six.value_least->all_prime);
  CHECK(six.value_least->least_value_prime);
}

TEST_CASE("(x, x+2) least witnesses by l") {
  const auto fs = parse_system("x; x+2");
  const auto three = least_factorial_witness(fs, 3);
  CHECK_FALSE(three.value_least);
  CHECK(three.conclusive);
  FactorialOptions loose;
  loose.require_below_factorial = false;
  REQUIRE(least_factorial_witness(fs, 3, 1000, loose).value_least);
  CHECK(least_factorial_witness(fs, 4).value_least->point == Point{5});
  for (std::uint64_t l = 5; l <= 10; ++l) CHECK(least_factorial_witness(fs, l).value_least->point == Point{11});
  for (std::uint64_t l = 11; l <= 15; ++l) CHECK(least_factorial_witness(fs, l).value_least->point == Point{17});
  CHECK(least_factorial_witness(FunctionSystem{parse_function("x")}, 4).value_least->point == Point{5});
}

TEST_CASE("short horizons are inconclusive") {
  const auto s = least_factorial_witness(parse_system("x; x+2"), 30, 5);
  CHECK_FALSE(s.conclusive);
}

TEST_CASE("least value scan") {
  const auto id = prop3_scan(parse_function("x"), 3, 3000);
  CHECK(id.violations.empty());
  CHECK(id.prime_fraction() == 1.0);
  const auto mer = prop3_scan(parse_function("2^x-1"), 82677, 82677);
  REQUIRE(mer.entries.size() == 1);
  CHECK(mer.entries[0].values[0] == 2047);
  CHECK(mer.violations == std::vector<std::uint64_t>{82677});
}

TEST_CASE("probe reports are deterministic across threads") {
  const auto fs = parse_system("x; x+180");
  const auto a = conjecture3_probe(fs, 6, 25, 100'000, 1);
  const auto b = conjecture3_probe(fs, 6, 25, 100'000, 4);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].point == b.entries[i].point);
  CHECK(a.violations == b.violations);
  CHECK(a.violations == std::vector<std::uint64_t>{6});
  CHECK(a.r_estimate == 6u);
}

TEST_CASE("modulus probe") {
  const auto id = modulus_probe(FunctionSystem{parse_function("x")}, 3, 10);
  const std::vector<std::int64_t> expected = {5, 5, 7, 7, 11, 11, 11, 11};
  REQUIRE(id.entries.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    REQUIRE(id.entries[i].member);
    CHECK(id.entries[i].member->point == Point{expected[i]});
    CHECK(id.entries[i].factorial_index == id.entries[i].m);
  }
  const auto twins = modulus_probe(parse_system("x; x+2"), 4, 4);
  CHECK(twins.entries[0].member->point == Point{5});
  const auto fermat = modulus_probe(FunctionSystem{parse_function("2^(2^x)+1")}, 5, 5);
  CHECK(fermat.entries[0].member->point == Point{2});
  CHECK(fermat.entries[0].member->values[0] == 17);
  const auto hooked = modulus_probe(FunctionSystem{parse_function("x")}, 3, 3, 1000,
                                    [](std::uint64_t m) { return m + 2; });
  CHECK(hooked.entries[0].factorial_index == 5);
  CHECK(hooked.entries[0].member->point == Point{7});
}
