#pragma once

// Checkers for the necessary conditions on a function (A to G) and on a
// system (H, I). Every scan is bounded by an explicit horizon and reports
// three-valued verdicts.
//
// Per-modulus readings used throughout:
//   B(m)  some x has gcd(f(x), m) = 1
//   C(m)  no divisor d > 1 of m divides every f(x)
//   D(p)  some x has p not dividing f(x)
//   E(m)  some x has gcd(f(x), m) = 1 and f(x) > 1
//   F(m)  some x has f(x) > 1 and m not dividing f(x)
//   G(p)  E(p) for a prime p
//   Zm    some x has 1 < f(x) < m and gcd(f(x), m) = 1
//   I(m)  some X has every f_i(X) > 1 and gcd(prod f_i(X), m) = 1

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "primerep/function_model.hpp"

namespace primerep {

enum class Status { Holds, Fails, Unknown };
std::string_view to_string(Status s);

struct Witness {
  Point point;
  std::vector<BigInt> values;  // exact values; empty entries never occur
  BigInt modulus;
};

struct Obstruction {
  enum class Kind { Divisor, ValueEnvelope };
  Kind kind = Kind::Divisor;
  // Divisor: a prime or divisor of m that divides every value.
  // ValueEnvelope: the radius past which no value can qualify.
  BigInt value;
};

struct Verdict {
  Status status = Status::Unknown;
  std::optional<Witness> witness;
  std::optional<Obstruction> obstruction;
  std::int64_t horizon = 0;

  bool conclusive() const { return status != Status::Unknown; }
};

inline constexpr std::int64_t kDefaultHorizon = 1'000'000;
inline constexpr std::int64_t kDefaultBoxSide = 1'000;

std::int64_t default_horizon(unsigned arity);

// 1 <= v < m and gcd(v, m) = 1.
bool in_reduced_residues(const BigInt& v, const BigInt& m);

// What a scan knows about f at one point. `exact` is absent when the value
// exceeds the bit budget; `huge_positive` then says whether the structural
// analysis guarantees the value is a large positive number.
struct ValueFacts {
  std::optional<BigInt> exact;
  BigInt residue;  // f mod m
  bool huge_positive = false;

  bool exceeds(const BigInt& bound) const { return exact ? *exact > bound : huge_positive; }
  bool sign_known() const { return exact.has_value() || huge_positive; }
};

ValueFacts value_facts(const NtFunction& f, const Point& point, const BigInt& m, const EvalOptions& options = {});

// ---------------------------------------------------------------------------
// B, C, D
// ---------------------------------------------------------------------------

Verdict check_condition_D_at(const NtFunction& f, std::uint64_t p, std::int64_t horizon = kDefaultHorizon,
                             const EvalOptions& options = {});
std::vector<std::pair<std::uint64_t, Verdict>> check_condition_D(const NtFunction& f, std::uint64_t prime_bound,
                                                                 std::int64_t horizon = kDefaultHorizon,
                                                                 const EvalOptions& options = {});

// Polynomials: per-prime residue witnesses joined by crt_solve, then the
// least witness below the CRT point. Other functions: bounded scan, made
// conclusive when residue_period applies.
Verdict check_condition_B(const NtFunction& f, const BigInt& m, std::int64_t horizon = kDefaultHorizon,
                          const EvalOptions& options = {});

// The status follows gcd(fixed divisor, m) for polynomials.
Verdict check_condition_C(const NtFunction& f, const BigInt& m, std::int64_t horizon = kDefaultHorizon,
                          const EvalOptions& options = {});

// ---------------------------------------------------------------------------
// E, F, G, Zm
// ---------------------------------------------------------------------------

enum class WitnessMode { E, F, G, Zm };
std::string_view to_string(WitnessMode mode);

Verdict find_value_witness(const NtFunction& f, const BigInt& m, WitnessMode mode,
                           std::int64_t horizon = kDefaultHorizon, const EvalOptions& options = {});

// Zm membership for every member of a system at one point, all values in
// (1, m) and coprime to m. Absence is conclusive when some member escapes
// [2, m) past a certified radius inside the horizon.
Verdict find_zm_system_witness(const FunctionSystem& fs, const BigInt& m, std::int64_t horizon,
                               const EvalOptions& options = {});

// ---------------------------------------------------------------------------
// A and H: coprime value sequences
// ---------------------------------------------------------------------------

struct CoprimeEntry {
  Point point;
  BigInt value;  // product of the member values for a system
};

struct CoprimeSequence {
  std::vector<CoprimeEntry> entries;
  std::int64_t horizon = 0;
  // True when the scan proved no further entry exists anywhere, not only
  // below the horizon.
  bool exhausted = false;
};

CoprimeSequence generate_coprime_sequence(const NtFunction& f, std::size_t count,
                                          std::int64_t horizon = kDefaultHorizon, const EvalOptions& options = {});
CoprimeSequence generate_coprime_sequence(const FunctionSystem& fs, std::size_t count,
                                          std::int64_t horizon = kDefaultHorizon, const EvalOptions& options = {});

// ---------------------------------------------------------------------------
// I and the aggregate reports
// ---------------------------------------------------------------------------

Verdict check_system_conditions(const FunctionSystem& fs, const BigInt& m, std::int64_t horizon,
                                const EvalOptions& options = {});

struct ConditionReport {
  BigInt modulus;
  std::size_t a_requested = 0;  // A-witness(n) asks for n pairwise coprime values
  CoprimeSequence a;
  Verdict b, c, e, f;
  std::vector<std::pair<std::uint64_t, Verdict>> d;  // primes dividing m
  std::vector<std::pair<std::uint64_t, Verdict>> g;  // primes dividing m
};

// A is requested at length omega(m) + 1.
ConditionReport check_conditions(const NtFunction& f, const BigInt& m, std::int64_t horizon = kDefaultHorizon,
                                 const EvalOptions& options = {});

struct SystemConditionReport {
  BigInt modulus;
  std::size_t h_requested = 0;
  CoprimeSequence h;
  Verdict i;
};

SystemConditionReport check_conditions(const FunctionSystem& fs, const BigInt& m, std::int64_t horizon,
                                       const EvalOptions& options = {});

}  // namespace primerep
