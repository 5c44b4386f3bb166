#include <doctest.h>

#include "primerep/counting.hpp"
#include "primerep/error.hpp"

using namespace primerep;

TEST_CASE("Phi of the identity is Euler's totient") {
  const FunctionSystem id{parse_function("x")};
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    const auto r = phi_general(id, to_big(n));
    REQUIRE(r.exact);
    REQUIRE(r.count == euler_phi(n));
  }
}

TEST_CASE("Phi of x^2 at 10 counts the values 1 and 9") {
  const auto r = phi_general(FunctionSystem{parse_function("x^2")}, BigInt(10));
  CHECK(r.exact);
  CHECK(r.count == 2);
}

TEST_CASE("Phi of x^3+1 at 90 is zero") {
  const auto r = phi_general(FunctionSystem{parse_function("x^3+1")}, BigInt(90));
  CHECK(r.exact);
  CHECK(r.count == 0);
}

TEST_CASE("Pi of the identity is the prime count") {
  const auto id = parse_function("x");
  for (auto [x, pi] : {std::pair<long, std::uint64_t>{2, 1}, {10, 4}, {30, 10}, {100, 25}, {1000, 168}}) {
    const auto r = pi_general_exact(id, BigInt(x));
    CHECK(r.value == pi);
    CHECK(r.complete_domain);
  }
}

TEST_CASE("Pi of x^2 counts squares of primes") {
  const auto r = pi_general_exact(parse_function("x^2"), BigInt(100));
  CHECK(r.value == 4);
}

TEST_CASE("greedy never beats the exact maximum") {
  for (auto text : {"x", "x^2+1", "2*x+1", "x^2+x+1", "x^3+1"}) {
    const auto f = parse_function(text);
    for (long x : {50L, 200L, 1000L}) {
      const auto g = pi_general_greedy(f, BigInt(x));
      const auto e = pi_general_exact(f, BigInt(x));
      CHECK(g.method == PiMethod::GreedyLowerBound);
      CHECK(g.value <= e.value);
      CHECK(e.members.size() == e.value);
    }
  }
}

TEST_CASE("exact members are pairwise coprime values of f") {
  const auto r = pi_general_exact(parse_function("x^2+1"), BigInt(2000));
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    CHECK(r.members[i] > 1);
    CHECK(r.members[i] <= 2000);
    for (std::size_t j = i + 1; j < r.members.size(); ++j) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), r.members[i].get_mpz_t(), r.members[j].get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("a tiny cap raises CapExceeded") {
  CHECK_THROWS_AS(pi_general_exact(parse_function("x^2+x+1"), BigInt(100'000), 1), CapExceeded);
}

TEST_CASE("system Pi uses products of member values") {
  const auto r = pi_system_product(parse_system("x; x+2"), BigInt(100));
  CHECK(r.value >= 1);
  for (std::size_t i = 0; i < r.members.size(); ++i) CHECK(r.members[i] <= 100);
}

TEST_CASE("property: Pi > omega implies Phi >= 1") {
  for (auto text : {"x", "x^2+1", "2^x-1", "x^3+1", "2*x+1", "x^2+x+41"}) {
    const auto c = implication_check(parse_function(text), 2, 300, 10'000);
    CHECK(c.violations.empty());
    CHECK(c.undecided.empty());
    CHECK(c.premise_count > 0);
  }
}
