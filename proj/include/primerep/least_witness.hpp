#pragma once

// S_f(m): least x with f(x) > 1 and gcd(f(x), m) = 1, its system analogue,
// and range checks of upper bounds on it.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "primerep/conditions.hpp"

namespace primerep {

struct LeastWitnessRecord {
  BigInt m;
  std::optional<Point> point;  // absent when nothing qualifies (see conclusive)
  std::vector<BigInt> values;
  // With a point: the point is the least one. Without: no point exists at
  // all. False means the horizon ran out first.
  bool conclusive = false;
  std::int64_t horizon = 0;
};

LeastWitnessRecord s_f(const NtFunction& f, const BigInt& m, std::int64_t horizon = kDefaultHorizon,
                       const EvalOptions& options = {});
LeastWitnessRecord s_system(const FunctionSystem& fs, const BigInt& m, std::int64_t horizon = kDefaultHorizon,
                            const EvalOptions& options = {});

// S for 2^x - 1 and odd m > 1: the least n >= 2 divisible by no ord_p(2),
// p | m.
std::uint64_t s_mersenne_by_order(std::uint64_t m);

enum class BoundKind {
  Sqrt,          // S < sqrt(m), identity
  Log2,          // S < log2(m), 2^x - 1
  Poly,          // S < (m / L)^(1/d), polynomial with L > 0
  LinearFermat,  // S <= m, 2^(2^x) + 1
  Root,          // S < m^(1/k), identity, k <= 4
};
std::string_view to_string(BoundKind kind);

struct BoundOptions {
  unsigned root_k = 3;
  // Poly only: m is checked when m > threshold; default 10 * L * 2^d.
  std::optional<BigInt> poly_threshold;
  std::int64_t horizon = kDefaultHorizon;
  unsigned threads = 1;
  EvalOptions eval;
};

struct BoundViolation {
  std::int64_t m = 0;
  std::optional<std::int64_t> s;  // absent when S was not found within the horizon
};

struct BoundCheck {
  BoundKind kind = BoundKind::Sqrt;
  std::int64_t m_lo = 0;
  std::int64_t m_hi = 0;
  std::optional<BigInt> threshold;  // Poly: the threshold applied
  std::vector<BoundViolation> violations;
  // Root: least c such that no m in (c, m_hi] violates; m_lo - 1 when the
  // whole range is clean.
  std::optional<std::int64_t> empirical_threshold;
};

// Throws BoundFunctionMismatch when the bound does not belong to f.
BoundCheck verify_bound(const NtFunction& f, BoundKind kind, std::int64_t m_lo, std::int64_t m_hi,
                        const BoundOptions& options = {});

struct ExponentIdentityViolation {
  std::int64_t m = 0;
  BigInt gcd;
};

// gcd(m, 2^(phi(m)+1) - 1) = 1 for odd m and gcd(m, 2^(phi(t)+1) - 1) = 1
// for m = 2^e t, t odd. Returns the m where this fails.
std::vector<ExponentIdentityViolation> exponent_identity_check(std::int64_t m_lo, std::int64_t m_hi,
                                                               unsigned threads = 1);

}  // namespace primerep
