#include <doctest.h>

#include "primerep/crt_analogy.hpp"
#include "primerep/error.hpp"

using namespace primerep;

namespace {

FunctionSystem sys(std::string_view text) { return FunctionSystem{parse_function(text)}; }

}  // namespace

TEST_CASE("x^3+1 lifts to neither 90 nor from 9 and 10") {
  const auto r = check_crt_analogy(sys("x^3+1"), BigInt(9), BigInt(10));
  CHECK(r.status == AnalogyStatus::FailsToLift);
  REQUIRE(r.witness_a());
  CHECK(r.witness_a()->point == Point{1});
  REQUIRE(r.witness_b());
  CHECK(r.witness_b()->values[0] == 9);
  CHECK_FALSE(r.witness_ab());
}

TEST_CASE("Fermat numbers at 51 and 1285") {
  const auto r = check_crt_analogy(sys("2^(2^x)+1"), BigInt(51), BigInt(1285));
  CHECK(r.status == AnalogyStatus::FailsToLift);
  CHECK(r.witness_a()->values[0] == 5);
  CHECK(r.witness_b()->values[0] == 17);
}

TEST_CASE("piecewise counterexample") {
  const auto r = check_piecewise_counterexample();
  CHECK(r.status == AnalogyStatus::FailsToLift);
  CHECK(r.a == 3);
  CHECK(r.b == 4);
  CHECK(r.witness_a()->values[0] == 2);
  CHECK(r.witness_b()->values[0] == 3);
}

TEST_CASE("the identity lifts") {
  const auto r = check_crt_analogy(sys("x"), BigInt(3), BigInt(4));
  CHECK(r.status == AnalogyStatus::Lifts);
  CHECK(r.witness_ab()->values[0] == 5);
}

TEST_CASE("a missing side makes the analogy inapplicable") {
  CHECK(check_crt_analogy(sys("x^2"), BigInt(2), BigInt(3)).status == AnalogyStatus::Inapplicable);
}

TEST_CASE("non-coprime moduli are rejected") {
  CHECK_THROWS_AS(check_crt_analogy(sys("x"), BigInt(4), BigInt(6)), ModuliNotCoprime);
}

TEST_CASE("lift failure scans") {
  const auto failures = scan_for_lift_failures({sys("x^3+1")}, 100);
  CHECK(failures.size() == 54);
  bool nine_ten = false;
  for (const auto& f : failures) nine_ten = nine_ten || (f.result.a == 9 && f.result.b == 10);
  CHECK(nine_ten);
  CHECK(scan_for_lift_failures({sys("x")}, 50).empty());
  CHECK(scan_for_lift_failures({sys("x^2")}, 30).empty());
}

TEST_CASE("lift failure scans do not depend on the thread count") {
  const auto one = scan_for_lift_failures({sys("x^3+1"), sys("x^2+x+1")}, 60, kDefaultHorizon, 1);
  const auto four = scan_for_lift_failures({sys("x^3+1"), sys("x^2+x+1")}, 60, kDefaultHorizon, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].member == four[i].member);
    CHECK(one[i].result.a == four[i].result.a);
    CHECK(one[i].result.b == four[i].result.b);
  }
}

TEST_CASE("prime witness lifts for linear forms") {
  const auto r = prime_witness_lift(BigInt(1), BigInt(4), BigInt(6), BigInt(35));
  REQUIRE(r.witness_a());
  CHECK(r.witness_a()->point == Point{1});
  CHECK(r.witness_a()->values[0] == 5);
  CHECK(r.witness_b()->point == Point{3});
  CHECK(r.witness_b()->values[0] == 13);
  CHECK(r.witness_ab()->values[0] == 13);
  CHECK(r.status == AnalogyStatus::Lifts);

  const auto none = prime_witness_lift(BigInt(1), BigInt(2), BigInt(3), BigInt(5));
  CHECK_FALSE(none.witness_a());
  CHECK(none.status == AnalogyStatus::Inapplicable);
  CHECK_FALSE(prime_witness_lift(BigInt(1), BigInt(2), BigInt(2), BigInt(15)).witness_a());
}
