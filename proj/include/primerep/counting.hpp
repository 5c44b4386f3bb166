#pragma once

// Generalized totient Phi_f(n) and generalized prime counting Pi_f(x).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "primerep/conditions.hpp"

namespace primerep {

struct PhiResult {
  BigInt n;
  std::uint64_t count = 0;  // distinct value tuples with every component in Z_n^*
  std::int64_t box = 0;     // largest max-norm scanned
  bool exact = false;       // no point outside the box can contribute
};

// Box defaults to the envelope radius when one exists, else to the default
// horizon for the arity.
PhiResult phi_general(const FunctionSystem& fs, const BigInt& n, std::optional<std::int64_t> box = std::nullopt,
                      const EvalOptions& options = {});

enum class PiMethod { Exact, GreedyLowerBound };
std::string_view to_string(PiMethod method);

struct PiResult {
  BigInt x;
  std::uint64_t value = 0;
  PiMethod method = PiMethod::Exact;
  std::vector<BigInt> members;  // a pairwise coprime set realizing value
  // True when every argument whose value can be <= x was visited.
  bool complete_domain = false;
  std::int64_t horizon = 0;
  std::size_t core_size = 0;  // values left for branch and bound after reduction
};

inline constexpr std::size_t kDefaultPiCap = 64;

// Exact maximum pairwise coprime subset of the distinct values in (1, x].
// Values whose prime support contains another value's support are dropped,
// values with a support no other value touches are taken outright, and the
// remaining core is solved by branch and bound. Throws CapExceeded when the
// core has more than `cap` values.
PiResult pi_general_exact(const NtFunction& f, const BigInt& x, std::size_t cap = kDefaultPiCap,
                          std::int64_t horizon = kDefaultHorizon, const EvalOptions& options = {});

// Smallest value first greedy packing; a lower bound for the exact value.
PiResult pi_general_greedy(const NtFunction& f, const BigInt& x, std::int64_t horizon = kDefaultHorizon,
                           const EvalOptions& options = {});

// Product interpretation for systems: the largest set of points whose member
// values all exceed 1, whose value products are <= x and pairwise coprime.
PiResult pi_system_product(const FunctionSystem& fs, const BigInt& x, std::size_t cap = kDefaultPiCap,
                           std::int64_t horizon = kDefaultHorizon, const EvalOptions& options = {});

struct ImplicationViolation {
  std::int64_t m = 0;
  std::uint64_t pi = 0;
  unsigned omega = 0;
  std::uint64_t phi = 0;
  bool phi_exact = false;
};

struct ImplicationCheck {
  std::vector<ImplicationViolation> violations;
  std::vector<std::int64_t> undecided;  // Pi exceeded the exact cap and greedy was not enough
  std::uint64_t premise_count = 0;      // m where Pi_f(m) > omega(m)
};

// Whenever Pi_f(m) > omega(m), Phi_f(m) >= 1.
ImplicationCheck implication_check(const NtFunction& f, std::int64_t m_lo, std::int64_t m_hi,
                                   std::int64_t horizon = kDefaultHorizon, unsigned threads = 1,
                                   const EvalOptions& options = {});

}  // namespace primerep
