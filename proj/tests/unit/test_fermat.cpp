#include <doctest.h>

#include "primerep/error.hpp"
#include "primerep/fermat.hpp"

using namespace primerep;

TEST_CASE("Fermat numbers") {
  CHECK(fermat_number(0) == 3);
  CHECK(fermat_number(1) == 5);
  CHECK(fermat_number(4) == 65537);
  CHECK(fermat_number(5) == BigInt("4294967297"));
  CHECK_THROWS_AS(fermat_number(40, 1024), EvaluationBudgetExceeded);
}

TEST_CASE("divides_fermat") {
  CHECK(divides_fermat(BigInt(641), 5));
  CHECK(divides_fermat(BigInt(274177), 6));
  CHECK_FALSE(divides_fermat(BigInt(641), 6));
  CHECK(divides_fermat(BigInt(65537), 4));
}

TEST_CASE("divisor-form search") {
  const auto f5 = euler_lucas_search(5, 16);
  REQUIRE(f5.size() == 1);
  CHECK(f5[0].factor == 641);
  CHECK(f5[0].k == 5);
  CHECK(f5[0].euler_k == 10u);
  const auto f6 = euler_lucas_search(6, 2000);
  REQUIRE_FALSE(f6.empty());
  CHECK(f6[0].factor == 274177);
  CHECK(f6[0].k == 1071);
  CHECK(euler_lucas_search(4, 10'000).empty());
  CHECK(euler_lucas_search(3, 100).empty());
}

TEST_CASE("divisor-form search does not depend on the thread count") {
  const auto a = euler_lucas_search(12, 20'000, 1);
  const auto b = euler_lucas_search(12, 20'000, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].factor == b[i].factor);
}

TEST_CASE("factorization checks") {
  CHECK(verify_factorization(5, {BigInt(641), BigInt(6700417)}).ok());
  CHECK(verify_factorization(6, {BigInt(274177), BigInt("67280421310721")}).ok());
  CHECK_FALSE(verify_factorization(5, {BigInt(641), BigInt(6700418)}).product_matches);
  const auto c = verify_factorization(5, {BigInt("4294967297")});
  CHECK(c.product_matches);
  CHECK(c.composite_factors.size() == 1);
}

TEST_CASE("small published factors divide and have divisor form") {
  for (const auto& entry : small_factor_corpus()) {
    for (const auto& check : verify_small_factors(entry)) {
      CHECK(check.divides);
      CHECK(check.prime);
      CHECK(check.divisor_form);
    }
  }
}

TEST_CASE("gcd(m, F(m)) = 1") {
  CHECK(fermat_coprime_check(1, 20'000).empty());
  CHECK(fermat_coprime_check(1, 5'000, 4).empty());
}

TEST_CASE("Fermat numbers in Z_m^*") {
  CHECK(fermat_in_zm(BigInt(51)).value == BigInt(5));
  CHECK(fermat_in_zm(BigInt(1285)).value == BigInt(17));
  CHECK_FALSE(fermat_in_zm(BigInt(65535)).x);
  CHECK(fermat_in_zm(BigInt(51), 0).value == BigInt(5));
  CHECK(fermat_in_zm(BigInt(7), 0).value == BigInt(3));
}

TEST_CASE("finiteness steps") {
  const auto steps = finiteness_argument_check(1, 6);
  REQUIRE(steps.size() == 6);
  for (const auto& s : steps) {
    CHECK(s.telescoping);
    CHECK(s.confirmed());
  }
  CHECK(steps[3].m == 65535);
}

TEST_CASE("records") {
  CHECK(fermat_record(4, 100).status == FermatStatus::Prime);
  const auto f5 = fermat_record(5, 100);
  CHECK(f5.status == FermatStatus::Composite);
  REQUIRE_FALSE(f5.known_factors.empty());
  CHECK(f5.known_factors[0] == 641);
  CHECK(fermat_record(30, 10, 4096).status == FermatStatus::Unknown);
}
