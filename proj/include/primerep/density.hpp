#pragma once

// Prime density: local root counts omega(p), partial Bateman-Horn products,
// predicted and actual counts, Dirichlet ratios and least primes in
// progressions.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "primerep/function_model.hpp"

namespace primerep {

// Roots of f_1 * ... * f_s modulo p in [0, p). Members must be univariate
// polynomials (NotUnivariatePolynomial otherwise).
std::uint64_t omega_p(const FunctionSystem& fs, std::uint64_t p);

struct BatemanHornConstant {
  long double value = 0;  // partial product over p <= cutoff
  std::uint64_t cutoff = 0;
  std::uint64_t primes_used = 0;
  // Relative change contributed by primes in (cutoff / 10, cutoff].
  long double last_decade_change = 0;
  // Set when some omega(p) = p; value is then 0.
  std::optional<std::uint64_t> obstruction_prime;
  std::map<std::uint64_t, std::uint64_t> omega_table;  // primes below 100
};

BatemanHornConstant bateman_horn_constant(const FunctionSystem& fs, std::uint64_t cutoff, unsigned threads = 1,
                                          std::size_t memory_cap = kDefaultSieveMemoryCap);

struct PredictedCount {
  long double sum_form = 0;     // C / prod d_i * sum_{n=2}^{m} 1 / (log n)^s
  long double closed_form = 0;  // C / prod d_i * m / (log m)^s
  long double constant = 0;
  std::uint64_t degree_product = 1;
};

PredictedCount predicted_count(const FunctionSystem& fs, std::uint64_t m, long double constant);

// n in [1, m] with every f_i(n) prime.
std::uint64_t actual_count(const FunctionSystem& fs, std::uint64_t m, std::size_t memory_cap = kDefaultSieveMemoryCap);

// pi(x; b, a) * phi(b) * log(x) / x. Throws NotCoprime unless gcd(a, b) = 1.
// b = 1 counts every prime.
long double dlvp_ratio(std::int64_t a, std::uint64_t b, std::uint64_t x,
                       std::size_t memory_cap = kDefaultSieveMemoryCap);

struct ApLeastPrimeTable {
  std::uint64_t k = 0;
  bool strict_positive_n = false;  // p = l + n k with n >= 1 instead of n >= 0
  std::map<std::uint64_t, std::uint64_t> entries;
  std::uint64_t p_k = 0;
  double exponent = 0;  // log p_k / log k
};

ApLeastPrimeTable least_prime_ap(std::uint64_t k, bool strict_positive_n = false);

struct ApProductCheck {
  std::int64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> primes;      // P_1 .. P_{n_max + 1}
  std::vector<std::uint64_t> violations;  // n with P_1 ... P_n <= P_{n+1}
  std::uint64_t threshold = 0;            // largest violating n, 0 if none
};

// Primes of the form a + b x (x >= 0) in increasing order.
ApProductCheck ap_product_inequality(std::int64_t a, std::uint64_t b, std::uint64_t n_max);

}  // namespace primerep
