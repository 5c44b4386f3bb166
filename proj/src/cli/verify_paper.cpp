#include <cmath>
#include <sstream>

#include "primerep/cli.hpp"

namespace primerep {

namespace {

class Corpus {
 public:
  // Runs one check; an exception counts as a mismatch.
  template <class Fn>
  void check(std::string name, Fn&& fn) {
    PaperCheck c;
    c.name = std::move(name);
    try {
      std::ostringstream note;
      c.passed = fn(note);
      if (!c.passed) c.detail = note.str();
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    checks_.push_back(std::move(c));
  }

  std::vector<PaperCheck> take() { return std::move(checks_); }

 private:
  std::vector<PaperCheck> checks_;
};

bool has_witness(const Verdict& v, const std::vector<std::int64_t>& point, const std::vector<long>& values) {
  if (v.status != Status::Holds || !v.witness || v.witness->point != point) return false;
  if (v.witness->values.size() != values.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (v.witness->values[i] != values[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<PaperCheck> verify_paper(const RunConfig& config) {
  Corpus corpus;
  const unsigned threads = config.threads;
  const EvalOptions eval = config.eval();

  // Arithmetic.
  corpus.check("2047 = 23 * 89 is composite", [](auto& note) {
    const auto f = factorize(BigInt(2047));
    note << "factors: " << f.factors.size();
    return !is_prime(BigInt(2047)) && f.factors.size() == 2 && f.factors[0].prime == 23 && f.factors[1].prime == 89;
  });
  corpus.check("6700417 is prime", [](auto&) { return is_prime(BigInt(6700417)); });
  corpus.check("4294967297 = 641 * 6700417", [&](auto&) {
    const auto f = factorize(BigInt("4294967297"), config.factoring());
    return f.complete() && f.factors.size() == 2 && f.factors[0].prime == 641 && f.factors[1].prime == 6700417;
  });

  // Function model.
  corpus.check("2^(2^x)+1 parses with arity 1 and F(5) = 4294967297", [&](auto& note) {
    const auto f = parse_function("2^(2^x)+1");
    const Point x{5};
    const BigInt v = evaluate(f, std::span<const std::int64_t>(x), eval);
    note << "arity " << f.arity() << ", F(5) = " << v.get_str();
    return f.arity() == 1 && v == BigInt("4294967297");
  });
  corpus.check("x^3+1 is a cubic with f(2) = 9", [&](auto&) {
    const auto f = parse_function("x^3+1");
    const auto p = classify(f);
    const Point x{2};
    return p.is_polynomial && p.degree == 3u && evaluate(f, std::span<const std::int64_t>(x), eval) == 9;
  });
  corpus.check("three-branch piecewise parses", [&](auto&) {
    const auto f = parse_function("piecewise(x<=2: 2, x<=39: 3, else: floor(x/3))");
    const Point a{1}, b{39}, c{40};
    return f.root().kind == NodeKind::Piecewise && f.root().branches.size() == 2 &&
           evaluate(f, std::span<const std::int64_t>(a)) == 2 && evaluate(f, std::span<const std::int64_t>(b)) == 3 &&
           evaluate(f, std::span<const std::int64_t>(c)) == 13;
  });
  corpus.check("-x^2+6 is a polynomial with leading coefficient -1", [](auto&) {
    const auto p = classify(parse_function("-x^2+6"));
    return p.is_polynomial && p.leading_coefficient && *p.leading_coefficient == -1;
  });

  // Conditions.
  const NtFunction cubic = parse_function("x^3+1");
  const NtFunction neg = parse_function("-x^2+6");
  corpus.check("x^3+1 has no value in Z_90^*", [&](auto& note) {
    const auto v = find_value_witness(cubic, BigInt(90), WitnessMode::Zm, config.horizon, eval);
    note << "status " << to_string(v.status);
    return v.status == Status::Fails;
  });
  corpus.check("-x^2+6 satisfies F at 7 with x = 1, value 5", [&](auto&) {
    return has_witness(find_value_witness(neg, BigInt(7), WitnessMode::F, config.horizon, eval), {1}, {5});
  });
  corpus.check("-x^2+6 satisfies G at 7", [&](auto&) {
    return find_value_witness(neg, BigInt(7), WitnessMode::G, config.horizon, eval).status == Status::Holds;
  });
  corpus.check("-x^2+6 has only two positive coprime values (5, 2)", [&](auto& note) {
    const auto s = generate_coprime_sequence(neg, 3, config.horizon, eval);
    note << "entries " << s.entries.size();
    return s.exhausted && s.entries.size() == 2 && s.entries[0].value == 5 && s.entries[1].value == 2;
  });

  // Least witnesses and bounds.
  const NtFunction mersenne = parse_function("2^x-1");
  const NtFunction identity = parse_function("x");
  corpus.check("S_{2^x-1}(82677) = 11 with composite value 2047", [&](auto& note) {
    const auto r = s_f(mersenne, BigInt(82677), config.horizon, eval);
    if (r.point) note << "S = " << (*r.point)[0];
    return r.conclusive && r.point && (*r.point)[0] == 11 && r.values.size() == 1 && r.values[0] == 2047 &&
           !is_prime(r.values[0]);
  });
  corpus.check("S_x(m) < sqrt(m) for 30 < m <= 10^4", [&](auto& note) {
    BoundOptions o;
    o.threads = threads;
    const auto c = verify_bound(identity, BoundKind::Sqrt, 31, 10'000, o);
    note << c.violations.size() << " violations";
    return c.violations.empty();
  });
  corpus.check("S_{2^x-1}(m) < log2(m) for 21 < m <= 10^4", [&](auto& note) {
    BoundOptions o;
    o.threads = threads;
    const auto c = verify_bound(mersenne, BoundKind::Log2, 22, 10'000, o);
    note << c.violations.size() << " violations";
    return c.violations.empty();
  });

  // Counting.
  corpus.check("Phi_x(n) = phi(n) for 2 <= n <= 1000", [&](auto& note) {
    const FunctionSystem fs{identity};
    for (std::uint64_t n = 2; n <= 1000; ++n) {
      const auto r = phi_general(fs, to_big(n), std::nullopt, eval);
      if (!r.exact || r.count != euler_phi(n)) {
        note << "n = " << n;
        return false;
      }
    }
    return true;
  });

  // CRT analogy.
  const FunctionSystem cubic_system{cubic};
  corpus.check("x^3+1 has x = 1 (value 2) in Z_9^*", [&](auto&) {
    return has_witness(find_zm_witness(cubic_system, BigInt(9), config.horizon, eval), {1}, {2});
  });
  corpus.check("x^3+1 fails to lift from Z_9^*, Z_10^* to Z_90^*", [&](auto& note) {
    const auto r = check_crt_analogy(cubic_system, BigInt(9), BigInt(10), config.horizon, eval);
    note << to_string(r.status);
    return r.status == AnalogyStatus::FailsToLift;
  });
  corpus.check("Fermat numbers fail to lift from Z_51^*, Z_1285^* to Z_65535^*", [&](auto& note) {
    const FunctionSystem fermat{parse_function("2^(2^x)+1")};
    const auto r = check_crt_analogy(fermat, BigInt(51), BigInt(1285), config.horizon, eval);
    note << to_string(r.status);
    return r.status == AnalogyStatus::FailsToLift && r.witness_a() && r.witness_a()->values[0] == 5 &&
           r.witness_b() && r.witness_b()->values[0] == 17;
  });
  corpus.check("piecewise function fails to lift from Z_3^*, Z_4^* to Z_12^*", [&](auto& note) {
    const auto r = check_piecewise_counterexample();
    note << to_string(r.status);
    return r.status == AnalogyStatus::FailsToLift && has_witness(r.side_a, {1}, {2}) &&
           has_witness(r.side_b, {3}, {3});
  });
  corpus.check("lift failures of x^3+1 up to 100 include (9, 10)", [&](auto& note) {
    const auto failures = scan_for_lift_failures({cubic_system}, 100, config.horizon, threads, eval);
    note << failures.size() << " failures";
    for (const auto& f : failures) {
      if (f.result.a == 9 && f.result.b == 10) return true;
    }
    return false;
  });

  // Fermat numbers.
  corpus.check("F(0) = 3, F(4) = 65537, F(5) = 4294967297", [](auto&) {
    return fermat_number(0) == 3 && fermat_number(4) == 65537 && fermat_number(5) == BigInt("4294967297");
  });
  corpus.check("641 divides F(5) in the form 64k + 1 with k = 10", [&](auto& note) {
    const auto hits = euler_lucas_search(5, 16, threads);
    note << hits.size() << " hits";
    return hits.size() == 1 && hits[0].factor == 641 && hits[0].euler_k == 10u && hits[0].k == 5;
  });
  corpus.check("274177 divides F(6) in divisor form", [&](auto&) {
    const auto hits = euler_lucas_search(6, 2000, threads);
    return !hits.empty() && hits[0].factor == 274177;
  });
  corpus.check("F(4) has no proper divisor-form factor", [&](auto& note) {
    const auto hits = euler_lucas_search(4, 10'000, threads);
    note << hits.size() << " hits";
    return hits.empty() && is_prime(fermat_number(4));
  });
  corpus.check("F(5) = 641 * 6700417", [](auto&) {
    return verify_factorization(5, {BigInt(641), BigInt(6700417)}).ok();
  });
  corpus.check("F(6) = 274177 * 67280421310721", [](auto&) {
    return verify_factorization(6, {BigInt(274177), BigInt("67280421310721")}).ok();
  });
  corpus.check("F(0) F(1) F(2) F(3) = 65535 = F(4) - 2 has no Fermat number in Z_m^*", [&](auto&) {
    const auto steps = finiteness_argument_check(4, 4, config.x_min);
    return steps.size() == 1 && steps[0].m == 65535 && steps[0].confirmed();
  });
  corpus.check("least Fermat numbers in Z_51^*, Z_1285^*, Z_65535^* are 5, 17, none", [&](auto&) {
    const auto a = fermat_in_zm(BigInt(51), config.x_min);
    const auto b = fermat_in_zm(BigInt(1285), config.x_min);
    const auto c = fermat_in_zm(BigInt(65535), config.x_min);
    return a.value == BigInt(5) && b.value == BigInt(17) && !c.x;
  });

  // Factorial probes.
  corpus.check("187 is coprime to 6!", [](auto&) { return coprime_to_factorial(BigInt(187), 6); });
  const FunctionSystem shifted = parse_system("x; x+180");
  corpus.check("(x, x+180) at l = 6: x = 7, values 7 and 187, 187 composite", [&](auto& note) {
    const auto s = least_factorial_witness(shifted, 6, config.horizon);
    if (!s.value_least) return false;
    const auto& w = *s.value_least;
    note << "x = " << w.point[0];
    return w.point == Point{7} && w.values[0] == 7 && w.values[1] == 187 && !w.all_prime;
  });
  corpus.check("(x, x+180) at l = 6 is a recorded prime-failure", [&](auto&) {
    const auto r = conjecture3_probe(shifted, 6, 6, config.horizon, threads);
    return r.violations == std::vector<std::uint64_t>{6};
  });
  corpus.check("least value of 2^x-1 in Z_82677^* is 2047, composite", [&](auto& note) {
    const auto r = prop3_scan(mersenne, 82677, 82677, config.horizon, threads, eval);
    if (r.entries.size() != 1 || !r.entries[0].point) return false;
    note << "value " << r.entries[0].values[0].get_str();
    return r.entries[0].values[0] == 2047 && !r.entries[0].all_prime;
  });
  corpus.check("least value of x in Z_m^* is prime for 2 < m <= 10^3", [&](auto& note) {
    const auto r = prop3_scan(identity, 3, 1000, config.horizon, threads, eval);
    note << r.violations.size() << " composite";
    return r.violations.empty() && r.entries.size() == 998 && r.prime_fraction() == 1.0;
  });

  // Density.
  corpus.check("twin prime pairs up to 10^4: 205", [&](auto&) {
    return actual_count(parse_system("x; x+2"), 10'000) == 205;
  });

  return corpus.take();
}

}  // namespace primerep
