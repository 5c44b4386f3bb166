#pragma once

// Fermat numbers F(x) = 2^(2^x) + 1: divisor-form factor search, factorization
// checks and the coprimality facts gcd(m, F(m)) = 1.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "primerep/core_arith.hpp"

namespace primerep {

// Throws EvaluationBudgetExceeded when 2^x exceeds bit_budget.
BigInt fermat_number(std::uint64_t x, std::size_t bit_budget = std::size_t{1} << 24);

// d | F(x), decided by x modular squarings of 2.
bool divides_fermat(const BigInt& d, std::uint64_t x);

struct FermatFactorHit {
  BigInt factor;
  std::uint64_t k = 0;  // factor = k * 2^(x+2) + 1 (x > 1), k * 2^(x+1) + 1 otherwise
  // The same factor in the older form k' * 2^(x+1) + 1.
  std::optional<std::uint64_t> euler_k;
};

// Primes d = k * 2^(x+2) + 1 with 1 <= k <= k_limit dividing F(x), ascending.
// For x <= 1 the form k * 2^(x+1) + 1 is searched.
std::vector<FermatFactorHit> euler_lucas_search(std::uint64_t x, std::uint64_t k_limit, unsigned threads = 1);

struct FactorizationCheck {
  bool product_matches = false;
  std::vector<BigInt> composite_factors;  // claimed factors that are not prime
  bool probabilistic = false;             // some primality verdict was probabilistic

  bool ok() const { return product_matches && composite_factors.empty(); }
};

FactorizationCheck verify_factorization(std::uint64_t x, const std::vector<BigInt>& claimed);

struct SmallFactorEntry {
  std::uint64_t x = 0;
  std::vector<BigInt> factors;
};

// Published small prime factors of F(7) .. F(11); cofactors are not stored.
const std::vector<SmallFactorEntry>& small_factor_corpus();

struct SmallFactorCheck {
  std::uint64_t x = 0;
  BigInt factor;
  bool divides = false;
  bool prime = false;
  bool divisor_form = false;  // factor = 1 mod 2^(x+2)
};

std::vector<SmallFactorCheck> verify_small_factors(const SmallFactorEntry& entry);

struct FermatCoprimeViolation {
  std::int64_t m = 0;
  BigInt gcd;
};

// gcd(m, F(m)) for every m in range, through F(m) mod m.
std::vector<FermatCoprimeViolation> fermat_coprime_check(std::int64_t m_lo, std::int64_t m_hi,
                                                         unsigned threads = 1);

struct FermatInZm {
  std::optional<std::uint64_t> x;
  std::optional<BigInt> value;
  std::uint64_t scanned = 0;  // Fermat numbers examined
};

// Least F(x), x >= x_min, in Z_m^* (1 <= F(x) < m, coprime to m). Always
// conclusive: the scan stops at the first F(x) >= m.
FermatInZm fermat_in_zm(const BigInt& m, std::uint64_t x_min = 1);

struct FinitenessStep {
  std::uint64_t k = 0;
  BigInt m;                  // F(0) * ... * F(k-1)
  bool telescoping = false;  // m = F(k) - 2
  FermatInZm in_zm;          // expected empty
  bool confirmed() const { return telescoping && !in_zm.x; }
};

std::vector<FinitenessStep> finiteness_argument_check(std::uint64_t k_lo, std::uint64_t k_hi,
                                                      std::uint64_t x_min = 1);

enum class FermatStatus { Prime, Composite, Unknown };
std::string_view to_string(FermatStatus s);

struct FermatRecord {
  std::uint64_t x = 0;
  std::optional<BigInt> value;  // when 2^x fits the bit budget
  std::vector<BigInt> known_factors;
  FermatStatus status = FermatStatus::Unknown;
  bool probabilistic = false;
};

// Status comes from a divisor-form hit, or a primality test when F(x) has at
// most `primality_bits` bits.
FermatRecord fermat_record(std::uint64_t x, std::uint64_t k_limit, std::size_t primality_bits = 4096);

}  // namespace primerep
