#include <doctest.h>

#include <random>

#include "primerep/error.hpp"
#include "primerep/function_model.hpp"
#include "../corpus.hpp"

using namespace primerep;

namespace {

BigInt eval1(const NtFunction& f, std::int64_t x, const EvalOptions& o = {}) {
  const Point p{x};
  return evaluate(f, std::span<const std::int64_t>(p), o);
}

// Mixed shapes: polynomials, exponentials, towers, floor division, piecewise,
// two variables.
const std::vector<std::string> kShapes = {
    "x^3+1",  "2^x-1", "2^(2^x)+1", "-x^2+6", "piecewise(x<=2: 2, x<=39: 3, else: floor(x/3))",
    "3^x+x^2", "floor(x^2/7)+1", "x*y+1", "x^2-y", "2^(x+y)+3*x", "x1^2+x2^3+1", "(x+1)*(x-1)*5",
};

}  // namespace

TEST_CASE("parse_function shapes") {
  const auto tower = parse_function("2^(2^x)+1");
  CHECK(tower.arity() == 1);
  const auto cubic = classify(parse_function("x^3+1"));
  CHECK(cubic.is_polynomial);
  CHECK(cubic.degree == 3u);
  CHECK(cubic.leading_coefficient == BigInt(1));
  const auto pw = parse_function("piecewise(x<=2: 2, x<=39: 3, else: floor(x/3))");
  CHECK(pw.root().kind == NodeKind::Piecewise);
  CHECK(pw.root().branches.size() == 2);
  CHECK(parse_function("x*y+z").arity() == 3);
  CHECK(parse_function("x").arity() == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_function("x+"), SyntaxError);
  CHECK_THROWS_AS(parse_function("(x"), SyntaxError);
  CHECK_THROWS_AS(parse_function("x*y", 1u), ArityError);
  CHECK_THROWS_AS(parse_function("piecewise(x<=2: 2)"), SyntaxError);
}

TEST_CASE("evaluate") {
  CHECK(eval1(parse_function("2^(2^x)+1"), 5) == BigInt("4294967297"));
  CHECK(eval1(parse_function("x"), 7) == 7);
  CHECK(eval1(parse_function("x^3+1"), 2) == 9);
  CHECK(eval1(parse_function("-x^2+6"), 3) == -3);
  CHECK_THROWS_AS(eval1(parse_function("x"), 0), DomainError);
  EvalOptions zero;
  zero.allow_zero = true;
  CHECK(eval1(parse_function("2^(2^x)+1"), 0, zero) == 3);
  CHECK_THROWS_AS(eval1(parse_function("2^(2^x)+1"), 30), EvaluationBudgetExceeded);
}

TEST_CASE("evaluate_mod") {
  const Point p10{10}, p9{9}, p6{6};
  CHECK(evaluate_mod(parse_function("2^(2^x)+1"), std::span<const std::int64_t>(p10), BigInt(10)) == 7);
  CHECK(evaluate_mod(parse_function("x"), std::span<const std::int64_t>(p9), BigInt(4)) == 1);
  CHECK(evaluate_mod(parse_function("x^3+1"), std::span<const std::int64_t>(p6), BigInt(90)) == 37);
  const Point p1000{1000};
  CHECK(evaluate_mod(parse_function("2^(2^x)+1"), std::span<const std::int64_t>(p1000), BigInt(641)) < 641);
}

TEST_CASE("classify") {
  const auto c = classify(parse_function("x^3+1"));
  CHECK(c.is_polynomial);
  CHECK(c.degree == 3u);
  CHECK_FALSE(classify(parse_function("2^x-1")).is_polynomial);
  CHECK_FALSE(classify(parse_function("2^x-1")).degree.has_value());
  const auto n = classify(parse_function("-x^2+6"));
  CHECK(n.leading_coefficient == BigInt(-1));
}

TEST_CASE("fixed_divisor") {
  auto fd = [](const char* text) {
    const auto f = parse_function(text);
    return fixed_divisor(f, classify(f));
  };
  CHECK(fd("x^2+x").value == 2);
  CHECK(fd("x").value == 1);
  CHECK(fd("x^2+x+2").value == 2);
  CHECK(fd("x^5-x").value == 30);
  CHECK(fd("x*(x+1)*(x+2)*(x+3)").value == 24);
  const auto zero = fd("x-x");
  CHECK(zero.value == 0);
  CHECK(zero.identically_vanishing);
  const auto exp = parse_function("2^x");
  CHECK_THROWS_AS(fixed_divisor(exp, classify(exp)), NotPolynomial);
}

TEST_CASE("point order is max-norm then lexicographic") {
  std::vector<Point> seen;
  walk_points(2, 1, 3, [&](const Point& p) {
    seen.push_back(p);
    return false;
  });
  const std::vector<Point> expected = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
  CHECK(seen == expected);
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(point_less(seen[i - 1], seen[i]));
}

TEST_CASE("escape radius and residue period") {
  const auto fermat = parse_function("2^(2^x)+1");
  const auto r = escape_radius(fermat, BigInt(2), BigInt(65535));
  REQUIRE(r);
  CHECK(eval1(fermat, *r) >= 65535);
  const auto pw = parse_function("piecewise(x<=2: 2, x<=39: 3, else: floor(x/3))");
  const auto rp = escape_radius(pw, BigInt(2), BigInt(12));
  REQUIRE(rp);
  for (std::int64_t x = *rp; x < *rp + 100; ++x) CHECK(eval1(pw, x) >= 12);
  CHECK(residue_period(parse_function("2^x-1"), BigInt(7)) == BigInt(6));
  CHECK_FALSE(escape_radius(parse_function("x^2-y"), BigInt(2), BigInt(10)).has_value());
}

TEST_CASE("property: print/parse round trip on random points") {
  std::mt19937_64 rng(11);
  std::vector<std::string> all = kShapes;
  for (auto t : primerep_tests::kPolynomialCorpus) all.emplace_back(t);
  for (const auto& text : all) {
    const auto f = parse_function(text);
    const auto g = parse_function(f.to_string(), f.arity());
    for (int i = 0; i < 100; ++i) {
      Point p(f.arity());
      for (auto& c : p) c = 1 + static_cast<std::int64_t>(rng() % 12);
      REQUIRE(evaluate(f, std::span<const std::int64_t>(p)) == evaluate(g, std::span<const std::int64_t>(p)));
    }
  }
}

TEST_CASE("property: evaluate_mod agrees with evaluate for m <= 1000") {
  std::mt19937_64 rng(13);
  for (const auto& text : kShapes) {
    const auto f = parse_function(text);
    for (int i = 0; i < 100; ++i) {
      Point p(f.arity());
      for (auto& c : p) c = 1 + static_cast<std::int64_t>(rng() % 9);
      BigInt exact;
      try {
        exact = evaluate(f, std::span<const std::int64_t>(p));
      } catch (const EvaluationBudgetExceeded&) {
        continue;
      }
      for (std::int64_t m = 2; m <= 1000; ++m) {
        const BigInt bm(static_cast<long>(m));
        BigInt want = exact % bm;
        if (want < 0) want += bm;
        REQUIRE(evaluate_mod(f, std::span<const std::int64_t>(p), bm) == want);
      }
    }
  }
}

TEST_CASE("property: fixed divisor divides every value") {
  std::mt19937_64 rng(17);
  for (auto text : primerep_tests::kPolynomialCorpus) {
    const auto f = parse_function(text);
    const auto d = fixed_divisor(f, classify(f)).value;
    if (d == 0) continue;
    for (int i = 0; i < 1000; ++i) {
      const BigInt v = eval1(f, 1 + static_cast<std::int64_t>(rng() % 100'000));
      REQUIRE(mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0);
    }
  }
}

TEST_CASE("property: degree of a product is the sum of degrees") {
  for (std::size_t i = 0; i + 1 < primerep_tests::kPolynomialCorpus.size(); ++i) {
    const auto a = parse_function(primerep_tests::kPolynomialCorpus[i]);
    const auto b = parse_function(primerep_tests::kPolynomialCorpus[i + 1]);
    const auto prod = parse_function("(" + a.to_string() + ")*(" + b.to_string() + ")");
    REQUIRE(classify(prod).degree == *classify(a).degree + *classify(b).degree);
  }
}
