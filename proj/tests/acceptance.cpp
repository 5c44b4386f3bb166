// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "corpus.hpp"
#include "primerep/cli.hpp"
#include "primerep/error.hpp"

using namespace primerep;

namespace {

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

Point pt(std::int64_t x) { return Point{x}; }

// 1. Fermat factorizations and the divisor form.
void fermat_factorizations(Outcome& o) {
  o.require(verify_factorization(5, {BigInt(641), BigInt(6700417)}).ok(), "F(5) factorization");
  o.require(verify_factorization(6, {BigInt(274177), BigInt("67280421310721")}).ok(), "F(6) factorization");
  const auto h5 = euler_lucas_search(5, 16);
  o.require(!h5.empty() && h5[0].factor == 641 && h5[0].euler_k == 10u, "641 at 64k+1 with k = 10");
  const auto h6 = euler_lucas_search(6, 2000);
  o.require(!h6.empty() && h6[0].factor == 274177, "274177 for F(6)");
}

// 2. The three lifting counterexamples.
void crt_counterexamples(Outcome& o) {
  const auto cubic = check_crt_analogy(FunctionSystem{parse_function("x^3+1")}, BigInt(9), BigInt(10));
  o.require(cubic.status == AnalogyStatus::FailsToLift && cubic.side_ab && cubic.side_ab->conclusive(),
            "x^3+1 with 9, 10");
  const auto fermat = check_crt_analogy(FunctionSystem{parse_function("2^(2^x)+1")}, BigInt(51), BigInt(1285));
  o.require(fermat.status == AnalogyStatus::FailsToLift, "Fermat with 51, 1285");
  o.require(fermat.witness_a() && fermat.witness_a()->values[0] == 5, "witness 5 in Z_51^*");
  o.require(fermat.witness_b() && fermat.witness_b()->values[0] == 17, "witness 17 in Z_1285^*");
  o.require(check_piecewise_counterexample().status == AnalogyStatus::FailsToLift, "piecewise with 3, 4");
}

// 3. S_{2^x-1}(82677).
void s_function(Outcome& o) {
  const auto r = s_f(parse_function("2^x-1"), BigInt(82677));
  o.require(r.conclusive && r.point == pt(11), "S = 11");
  o.require(r.values.size() == 1 && r.values[0] == 2047 && !is_prime(r.values[0]), "value 2047 composite");
  const auto f = factorize(BigInt(2047));
  o.require(f.factors.size() == 2 && f.factors[0].prime == 23 && f.factors[1].prime == 89, "2047 = 23 * 89");
}

// 4. Factorial witnesses of (x, x+180).
void factorial_probe(Outcome& o) {
  const FunctionSystem fs = parse_system("x; x+180");
  const auto s6 = least_factorial_witness(fs, 6);
  o.require(s6.value_least && s6.value_least->point == pt(7) && s6.value_least->values[1] == 187 &&
                !is_prime(s6.value_least->values[1]),
            "l = 6 gives x = 7 with 187");
  for (std::uint64_t l = 7; l <= 30; ++l) {
    const auto s = least_factorial_witness(fs, l);
    o.require(s.argument_least.has_value(), "no witness at l = " + std::to_string(l));
  }
}

// 5. Bound suites.
void bound_suites(Outcome& o, unsigned threads) {
  BoundOptions opts;
  opts.threads = threads;
  const auto sq = verify_bound(parse_function("x"), BoundKind::Sqrt, 31, 1'000'000, opts);
  o.require(sq.violations.empty(), std::to_string(sq.violations.size()) + " sqrt violations");
  std::uint64_t composite = 0;
  for (std::uint64_t m = 3; m <= 1'000'000; ++m) {
    if (!is_prime(least_coprime_exceeding_one(m))) ++composite;
  }
  o.require(composite == 0, std::to_string(composite) + " composite least coprimes");
  const auto lg = verify_bound(parse_function("2^x-1"), BoundKind::Log2, 22, 100'000, opts);
  o.require(lg.violations.empty(), std::to_string(lg.violations.size()) + " log2 violations");
  const auto fc = fermat_coprime_check(2, 1000, threads);
  o.require(fc.empty(), std::to_string(fc.size()) + " gcd(m, F(m)) violations");
  const auto ei = exponent_identity_check(1, 10'000, threads);
  o.require(ei.empty(), std::to_string(ei.size()) + " exponent identity violations");
}

// 6. Counting identities.
void counting_identities(Outcome& o, unsigned threads) {
  const FunctionSystem id{parse_function("x")};
  std::uint64_t bad_phi = 0;
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    const auto r = phi_general(id, to_big(n));
    if (!r.exact || r.count != euler_phi(n)) ++bad_phi;
  }
  o.require(bad_phi == 0, std::to_string(bad_phi) + " Phi mismatches");
  const auto primes = sieve_primes(200);
  std::uint64_t bad_pi = 0;
  for (std::uint64_t x = 2; x <= 200; ++x) {
    const auto expected = static_cast<std::uint64_t>(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
    const auto r = pi_general_exact(id[0], to_big(x));
    if (r.method != PiMethod::Exact || r.value != expected) ++bad_pi;
  }
  o.require(bad_pi == 0, std::to_string(bad_pi) + " Pi mismatches");
  for (const char* text : {"x", "x^2+1", "2^x-1", "x^3+1", "2*x+1", "x^2+x+41"}) {
    const auto c = implication_check(parse_function(text), 2, 300, kDefaultHorizon, threads);
    o.require(c.violations.empty() && c.undecided.empty(), std::string("implication for ") + text);
  }
}

// 7. B, C, D agreement; A-witness and E; the -x^2+6 example.
void condition_equivalences(Outcome& o) {
  constexpr std::int64_t kMaxM = 10'000;
  const auto primes = sieve_primes(kMaxM);
  std::size_t disagreements = 0, holds = 0, fails = 0;
  for (const auto text : primerep_tests::kPolynomialCorpus) {
    const NtFunction f = parse_function(text);
    std::map<std::uint64_t, Status> d;
    for (const auto p : primes) d[p] = check_condition_D_at(f, p).status;
    for (std::int64_t m = 2; m <= kMaxM; ++m) {
      const BigInt bm = to_big_signed(m);
      const Status b = check_condition_B(f, bm).status;
      const Status c = check_condition_C(f, bm).status;
      Status dm = Status::Holds;
      for (const auto p : distinct_prime_factors(static_cast<std::uint64_t>(m))) {
        if (d[p] != Status::Holds) dm = d[p];
        if (dm == Status::Fails) break;
      }
      if (b == Status::Unknown || b != c || c != dm) ++disagreements;
      ++(b == Status::Holds ? holds : fails);
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " B/C/D disagreements");
  o.require(holds > 0 && fails > 0, "corpus exercises only one outcome");

  constexpr std::int64_t kEMax = 2'000;
  constexpr std::int64_t kSequenceHorizon = 10'000;
  std::size_t a_e_disagreements = 0, members = 0, with_a = 0;
  for (const auto text : primerep_tests::kPolynomialCorpus) {
    const NtFunction f = parse_function(text);
    const auto profile = classify(f);
    if (!profile.leading_coefficient || *profile.leading_coefficient <= 0) continue;
    const auto seq = generate_coprime_sequence(f, 6, kSequenceHorizon);
    ++members;
    if (seq.entries.size() >= 6) ++with_a;
    bool e_everywhere = true;
    for (std::int64_t m = 2; m <= kEMax; ++m) {
      const auto e = find_value_witness(f, to_big_signed(m), WitnessMode::E, kSequenceHorizon);
      const bool holds = e.status == Status::Holds;
      e_everywhere = e_everywhere && holds;
      const std::size_t needed = omega(static_cast<std::uint64_t>(m)) + 1;
      if (seq.entries.size() >= needed && !holds) ++a_e_disagreements;
    }
    if (e_everywhere != (seq.entries.size() >= 6)) ++a_e_disagreements;
  }
  o.require(a_e_disagreements == 0, std::to_string(a_e_disagreements) + " A/E disagreements");
  o.require(members >= 30 && with_a > 0 && with_a < members, "A/E corpus is degenerate");

  const NtFunction neg = parse_function("-x^2+6");
  o.require(find_value_witness(neg, BigInt(7), WitnessMode::F).status == Status::Holds, "-x^2+6 F");
  o.require(find_value_witness(neg, BigInt(7), WitnessMode::G).status == Status::Holds, "-x^2+6 G");
  const auto seq = generate_coprime_sequence(neg, 3);
  o.require(seq.exhausted && seq.entries.size() == 2, "-x^2+6 A-witness bounded at 2");
}

// 8. Density. Reference values come from tests/oracles/oracles.py.
void density(Outcome& o, unsigned threads) {
  constexpr long double kTwinConstant = 1.3203237211802865L;
  const FunctionSystem twins = parse_system("x; x+2");
  const auto c = bateman_horn_constant(twins, 1'000'000, threads);
  o.require(std::fabs(c.value - kTwinConstant) <= 1e-3L, "twin constant");
  const auto actual = actual_count(twins, 10'000);
  o.require(actual == 205, "twin count " + std::to_string(actual));
  const auto predicted = predicted_count(twins, 10'000, c.value);
  const long double ratio = predicted.sum_form / static_cast<long double>(actual);
  o.require(ratio >= 0.85L && ratio <= 1.15L, "predicted/actual " + std::to_string(static_cast<double>(ratio)));
  for (const std::int64_t a : {1, 3}) {
    const long double r = dlvp_ratio(a, 4, 100'000);
    o.require(r >= 0.95L && r <= 1.25L, "dlvp(" + std::to_string(a) + ", 4)");
  }
}

std::string run_verify(unsigned threads) {
  const std::string t = std::to_string(threads);
  const char* argv[] = {"primerep", "verify-paper", "--json", "--threads", t.c_str()};
  std::ostringstream out, err;
  const int code = run(5, argv, out, err);
  return std::to_string(code) + "\n" + out.str();
}

// 9. verify-paper JSON is identical for 1 and N threads.
void determinism(Outcome& o, unsigned threads) {
  const std::string one = run_verify(1);
  const std::string many = run_verify(threads);
  o.require(one.rfind("0\n", 0) == 0, "verify-paper exit code");
  o.require(one == many, "outputs differ");
}

}  // namespace

int main() {
  const unsigned threads = std::max(2u, std::thread::hardware_concurrency());
  const std::vector<Criterion> criteria = {
      {1, "Fermat factorizations and divisor-form search", 1.0, fermat_factorizations},
      {2, "CRT-analogy counterexamples", 1.0, crt_counterexamples},
      {3, "S_{2^x-1}(82677) = 11", 1.0, s_function},
      {4, "factorial witnesses of (x, x+180)", 10.0, factorial_probe},
      {5, "bound suites", 60.0, [&](Outcome& o) { bound_suites(o, threads); }},
      {6, "counting identities", 30.0, [&](Outcome& o) { counting_identities(o, threads); }},
      {7, "condition equivalences", 60.0, condition_equivalences},
      {8, "density", 60.0, [&](Outcome& o) { density(o, threads); }},
      {9, "determinism across thread counts", 0.0, [&](Outcome& o) { determinism(o, threads); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0) o.require(s < c.budget_s, "over the " + std::to_string(c.budget_s) + " s budget");
    if (!o.passed) ++failed;
    std::printf("criterion %d: %s  %s [%.2f s]%s%s\n", c.id, o.passed ? "PASS" : "FAIL", c.title.c_str(), s,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
