#pragma once

// Exact integer arithmetic shared by every other module: primality,
// factorization, sieving, totients and the Chinese remainder solver.
//
// Everything here is a pure function of its arguments. The only shared state
// is a lazily built table of primes below 10^6, initialised once under the
// usual function-local-static guarantee.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace primerep {

using BigInt = mpz_class;

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

BigInt to_big(std::uint64_t v);
BigInt to_big_signed(std::int64_t v);
std::optional<std::uint64_t> to_u64(const BigInt& v);
std::optional<std::int64_t> to_i64(const BigInt& v);
std::size_t bit_length(const BigInt& v);  // of |v|; 0 for 0

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

// Strong-pseudoprime bases 2..41 are a proof of primality below this bound.
BigInt deterministic_primality_bound();

struct PrimalityResult {
  bool prime = false;
  bool probabilistic = false;  // set when n exceeds the deterministic bound
};

bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);
PrimalityResult primality(const BigInt& n);

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
};

struct Factorization {
  std::vector<PrimePower> factors;  // primes strictly increasing
  BigInt unfactored = 1;            // cofactor left when the budget ran out

  bool complete() const { return unfactored == 1; }
  BigInt product() const;
};

struct FactoringConfig {
  std::uint64_t seed = 0;
  std::uint64_t iteration_budget = 100'000'000;
  std::uint64_t trial_division_limit = 1'000'000;
};

// Canonical factorization. When a composite cofactor resists the rho stage
// the result is returned with complete() == false.
Factorization factorize(const BigInt& n, const FactoringConfig& config = {});

// Like factorize but throws FactoringBudgetExceeded instead of returning a
// partial result.
Factorization factorize_complete(const BigInt& n, const FactoringConfig& config = {});

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

// ---------------------------------------------------------------------------
// Sieving
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultSieveMemoryCap = 256u << 20;

// All primes <= limit, ascending. Segmented; throws MemoryBudgetExceeded when
// the result would not fit in memory_cap bytes.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit,
                                        std::size_t memory_cap = kDefaultSieveMemoryCap);

// Byte-per-odd-number primality table for [0, limit]. Used by counting scans
// that test many values below a known ceiling.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit, std::size_t memory_cap = kDefaultSieveMemoryCap);
  std::uint64_t limit() const { return limit_; }
  bool contains(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> odd_composite_;
};

// Primes below 10^6, computed once.
std::span<const std::uint64_t> small_primes();

// ---------------------------------------------------------------------------
// Multiplicative functions and friends
// ---------------------------------------------------------------------------

// phi(1) is 1 by convention.
BigInt euler_phi(const BigInt& n, const FactoringConfig& config = {});
std::uint64_t euler_phi(std::uint64_t n);
unsigned omega(const BigInt& n, const FactoringConfig& config = {});
unsigned omega(std::uint64_t n);
BigInt carmichael_lambda(const BigInt& n, const FactoringConfig& config = {});

// Order of a modulo the prime p; requires p not dividing a.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// ---------------------------------------------------------------------------
// Congruences
// ---------------------------------------------------------------------------

struct Congruence {
  BigInt residue;
  BigInt modulus;
};
using CongruenceSystem = std::vector<Congruence>;

struct CrtSolution {
  BigInt residue;
  BigInt modulus;
};

// Unique solution modulo the product of the moduli. Residues are reduced into
// range first. Throws ModuliNotCoprime when two moduli share a factor.
CrtSolution crt_solve(const CongruenceSystem& system);

// Smallest a > 1 with gcd(a, m) == 1. For m > 2 the result is always prime.
std::uint64_t least_coprime_exceeding_one(std::uint64_t m);
BigInt least_coprime_exceeding_one(const BigInt& m);

// Smallest prime factor of v that is <= bound, if any. v must be >= 2.
std::optional<BigInt> prime_factor_up_to(const BigInt& v, std::uint64_t bound,
                                         const FactoringConfig& config = {});

}  // namespace primerep
