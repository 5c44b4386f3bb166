#include <doctest.h>

#include <cmath>

#include "primerep/density.hpp"
#include "primerep/error.hpp"

using namespace primerep;

TEST_CASE("local root counts") {
  const auto twins = parse_system("x; x+2");
  CHECK(omega_p(twins, 2) == 1);
  CHECK(omega_p(twins, 3) == 2);
  CHECK(omega_p(twins, 5) == 2);
  CHECK(omega_p(FunctionSystem{parse_function("x^2+1")}, 5) == 2);
  CHECK(omega_p(FunctionSystem{parse_function("x^2+1")}, 7) == 0);
  CHECK_THROWS_AS(omega_p(FunctionSystem{parse_function("2^x-1")}, 3), NotUnivariatePolynomial);
}

TEST_CASE("twin prime constant") {
  const auto c = bateman_horn_constant(parse_system("x; x+2"), 1'000'000);
  // Independent oracle: 1.3203237211802865.
  CHECK(static_cast<double>(c.value) == doctest::Approx(1.3203237211802865).epsilon(1e-9));
  CHECK(c.primes_used == 78498);
  CHECK(std::fabs(static_cast<double>(c.last_decade_change)) < 1e-5);
  CHECK(c.omega_table.at(3) == 2);
  CHECK_FALSE(c.obstruction_prime);
}

TEST_CASE("constant does not depend on the thread count") {
  const auto fs = parse_system("x; x+2; x+6");
  const auto a = bateman_horn_constant(fs, 200'000, 1);
  const auto b = bateman_horn_constant(fs, 200'000, 4);
  CHECK(a.value == b.value);
}

TEST_CASE("an obstruction prime zeroes the constant") {
  const auto c = bateman_horn_constant(parse_system("x; x+1"), 1000);
  CHECK(c.value == 0);
  CHECK(c.obstruction_prime == 2u);
}

TEST_CASE("predicted and actual counts") {
  const auto twins = parse_system("x; x+2");
  const auto p = predicted_count(twins, 10'000, 1.3203237211802865L);
  CHECK(static_cast<double>(p.sum_form) == doctest::Approx(215.88639519369386).epsilon(1e-9));
  CHECK(static_cast<double>(p.closed_form) == doctest::Approx(155.64281103531422).epsilon(1e-9));
  CHECK(actual_count(twins, 10'000) == 205);
  const FunctionSystem id{parse_function("x")};
  CHECK(static_cast<double>(predicted_count(id, 100'000, 1.0L).sum_form) ==
        doctest::Approx(9629.609192149765).epsilon(1e-9));
  CHECK(actual_count(id, 100'000) == 9592);
}

TEST_CASE("Dirichlet ratios") {
  CHECK(static_cast<double>(dlvp_ratio(1, 4, 10'000)) == doctest::Approx(1.1218194573066993).epsilon(1e-12));
  CHECK(static_cast<double>(dlvp_ratio(1, 4, 1'000'000)) == doctest::Approx(1.082445252216501).epsilon(1e-12));
  CHECK(static_cast<double>(dlvp_ratio(3, 4, 100'000)) == doctest::Approx(1.1070829127115371).epsilon(1e-12));
  CHECK_THROWS_AS(dlvp_ratio(2, 4, 1000), NotCoprime);
}

TEST_CASE("least primes in progressions") {
  const auto t3 = least_prime_ap(3);
  CHECK(t3.entries == std::map<std::uint64_t, std::uint64_t>{{1, 7}, {2, 2}});
  CHECK(least_prime_ap(3, true).entries == std::map<std::uint64_t, std::uint64_t>{{1, 7}, {2, 5}});
  CHECK(least_prime_ap(4, true).entries == std::map<std::uint64_t, std::uint64_t>{{1, 5}, {3, 7}});
  const auto t10 = least_prime_ap(10);
  CHECK(t10.entries == std::map<std::uint64_t, std::uint64_t>{{1, 11}, {3, 3}, {7, 7}, {9, 19}});
  CHECK(t10.p_k == 19);
  CHECK(least_prime_ap(30).p_k == 31);
  CHECK(least_prime_ap(30, true).p_k == 79);
}

TEST_CASE("progression product inequality") {
  for (auto [a, b] : {std::pair<std::int64_t, std::uint64_t>{1, 1}, {1, 4}, {3, 4}, {1, 2}}) {
    const auto r = ap_product_inequality(a, b, 30);
    CHECK(r.violations == std::vector<std::uint64_t>{1});
    CHECK(r.threshold == 1);
    CHECK(r.primes.size() == 31);
  }
  CHECK(ap_product_inequality(1, 4, 3).primes == std::vector<std::uint64_t>{5, 13, 17, 29});
}

TEST_CASE("a small sieve cap falls back to primality tests for counts") {
  CHECK(actual_count(parse_system("x; x+2"), 10'000, 1024) == 205);
  CHECK_THROWS_AS(dlvp_ratio(1, 4, 1'000'000, 1024), MemoryBudgetExceeded);
}
