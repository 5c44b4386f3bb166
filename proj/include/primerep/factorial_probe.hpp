#pragma once

// Witnesses in Z_{l!}^*, decided through smallest prime factors and
// bit-length bounds so that l! is never built for l > 20.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "primerep/function_model.hpp"

namespace primerep {

// gcd(v, l!) = 1, i.e. the smallest prime factor of v exceeds l. v > 1.
bool coprime_to_factorial(const BigInt& v, std::uint64_t l);

// v < l!. Exact product for l <= 20; beyond that a bit-length bound, and
// repeated floor division by 2, 3, ..., l when the bound is too close.
bool below_factorial(const BigInt& v, std::uint64_t l);

struct FactorialWitness {
  std::uint64_t l = 0;
  Point point;
  std::vector<BigInt> values;
  bool all_prime = false;
  bool least_value_prime = false;  // the smallest member value is prime
};

struct FactorialOptions {
  // Drop to reproduce witnesses whose values are not below l!.
  bool require_below_factorial = true;
  EvalOptions eval;
};

struct FactorialSearch {
  std::optional<FactorialWitness> argument_least;
  // Least product of member values, ties broken by point order.
  std::optional<FactorialWitness> value_least;
  std::int64_t horizon = 0;
  // Absence is proven, or the value-least witness is certified.
  bool conclusive = false;

  bool orders_differ() const {
    return argument_least && value_least && argument_least->point != value_least->point;
  }
};

// Points whose member values are all > 1, coprime to l! and (by default) < l!.
FactorialSearch least_factorial_witness(const FunctionSystem& fs, std::uint64_t l,
                                        std::int64_t horizon = 1'000'000, const FactorialOptions& options = {});

struct ProbeEntry {
  std::uint64_t index = 0;  // l or m
  std::optional<Point> point;
  std::vector<BigInt> values;
  bool all_prime = false;
  bool least_value_prime = false;
  std::optional<Point> argument_point;  // argument-least, when it differs
  bool conclusive = false;
};

struct ProbeReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::int64_t horizon = 0;
  std::vector<ProbeEntry> entries;
  // Least r in the window with a witness at every scanned index >= r. Only
  // meaningful for the window; unset when the last index had none.
  std::optional<std::uint64_t> r_estimate;
  std::vector<std::uint64_t> violations;  // indices whose witness is not all prime

  double prime_fraction() const;
};

// Least value of f in Z_m^* above 1, for every m in [m_lo, m_hi].
ProbeReport prop3_scan(const NtFunction& f, std::uint64_t m_lo, std::uint64_t m_hi, std::int64_t horizon = 100'000,
                       unsigned threads = 1, const EvalOptions& options = {});

ProbeReport conjecture3_probe(const FunctionSystem& fs, std::uint64_t l_lo, std::uint64_t l_hi,
                              std::int64_t horizon = 100'000, unsigned threads = 1,
                              const FactorialOptions& options = {});

// Maps the scanned index m to the factorial index M of Z_{M!}^*.
using ModulusHook = std::function<std::uint64_t(std::uint64_t)>;

struct ModulusProbeEntry {
  std::uint64_t m = 0;
  std::uint64_t factorial_index = 0;
  std::optional<FactorialWitness> member;  // values in Z_{M!}^*
  std::optional<FactorialWitness> prime;   // values in Z_{M!}^* and all prime
};

struct ModulusProbeReport {
  std::int64_t horizon = 0;
  std::vector<ModulusProbeEntry> entries;
};

ModulusProbeReport modulus_probe(const FunctionSystem& fs, std::uint64_t m_lo, std::uint64_t m_hi,
                              std::int64_t horizon = 100'000, const ModulusHook& hook = {},
                              unsigned threads = 1, const EvalOptions& options = {});

}  // namespace primerep
