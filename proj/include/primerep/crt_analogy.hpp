#pragma once

// Lifting Z_a^* and Z_b^* witnesses of a function system to Z_ab^*.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "primerep/conditions.hpp"

namespace primerep {

enum class AnalogyStatus { Lifts, FailsToLift, Inapplicable, Unknown };
std::string_view to_string(AnalogyStatus s);

struct AnalogyResult {
  BigInt a;
  BigInt b;
  Verdict side_a;
  Verdict side_b;
  std::optional<Verdict> side_ab;  // only searched when both sides have witnesses
  AnalogyStatus status = AnalogyStatus::Unknown;

  const std::optional<Witness>& witness_a() const { return side_a.witness; }
  const std::optional<Witness>& witness_b() const { return side_b.witness; }
  std::optional<Witness> witness_ab() const { return side_ab ? side_ab->witness : std::nullopt; }
};

// Least point with every member value in (1, m) and coprime to m.
Verdict find_zm_witness(const FunctionSystem& fs, const BigInt& m, std::int64_t box = kDefaultHorizon,
                        const EvalOptions& options = {});

// Throws ModuliNotCoprime unless gcd(a, b) = 1; a, b >= 2.
AnalogyResult check_crt_analogy(const FunctionSystem& fs, const BigInt& a, const BigInt& b,
                                std::int64_t box = kDefaultHorizon, const EvalOptions& options = {});

// The three-branch function 2 (x <= 2), 3 (x <= 39), floor(x/3) with a = 3,
// b = 4.
NtFunction piecewise_counterexample_function();
AnalogyResult check_piecewise_counterexample();

struct LiftFailure {
  std::size_t member = 0;  // index into the family
  AnalogyResult result;
};

// Every coprime pair 2 <= a < b <= limit for which the family member fails to
// lift, ordered by member, then a, then b.
std::vector<LiftFailure> scan_for_lift_failures(const std::vector<FunctionSystem>& family, std::int64_t limit,
                                                std::int64_t box = kDefaultHorizon, unsigned threads = 1,
                                                const EvalOptions& options = {});

// The linear form a + b x with witnesses additionally required to be prime,
// lifted from Z_m^* and Z_n^* to Z_mn^*.
AnalogyResult prime_witness_lift(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n,
                                 std::int64_t box = kDefaultHorizon, const EvalOptions& options = {});

}  // namespace primerep
