#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "primerep/core_arith.hpp"
#include "primerep/error.hpp"

namespace primerep {

namespace {

// Brent's variant of Pollard rho on 64-bit n. Returns a nontrivial factor or
// 0 when the iteration budget is spent.
std::uint64_t rho_u64(std::uint64_t n, std::mt19937_64& rng, std::uint64_t& budget) {
  if (n % 2 == 0) return 2;
  while (budget > 0) {
    const std::uint64_t c = rng() % (n - 1) + 1;
    std::uint64_t y = rng() % n;
    const std::uint64_t m = 128;
    std::uint64_t g = 1, q = 1, x = 0, ys = 0;
    std::uint64_t r = 1;
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
        budget = budget > lim ? budget - lim : 0;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

BigInt rho_big(const BigInt& n, std::mt19937_64& rng, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  while (budget > 0) {
    BigInt c = BigInt(static_cast<unsigned long>(rng() >> 1)) % (n - 1) + 1;
    BigInt y = BigInt(static_cast<unsigned long>(rng() >> 1)) % n;
    const std::uint64_t m = 128;
    BigInt g = 1, q = 1, x, ys, diff;
    std::uint64_t r = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          diff = abs(x - y);
          q = q * diff % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        budget = budget > lim ? budget - lim : 0;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        step(ys);
        diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

// Splits composite n completely into primes, accumulating into out. Anything
// that could not be split within the budget lands in leftover.
void split(const BigInt& n, std::mt19937_64& rng, std::uint64_t& budget,
           std::map<BigInt, unsigned>& out, BigInt& leftover) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d;
  if (auto small = to_u64(n)) {
    d = to_big(rho_u64(*small, rng, budget));
  } else {
    d = rho_big(n, rng, budget);
  }
  if (d == 0) {
    leftover *= n;
    return;
  }
  split(d, rng, budget, out, leftover);
  split(n / d, rng, budget, out, leftover);
}

}  // namespace

BigInt Factorization::product() const {
  BigInt result = unfactored;
  for (const auto& pp : factors) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    result *= power;
  }
  return result;
}

Factorization factorize(const BigInt& n, const FactoringConfig& config) {
  if (n < 1) throw DomainError("factorize requires n >= 1");
  Factorization result;
  BigInt rest = n;
  const auto primes = small_primes();
  std::map<BigInt, unsigned> found;

  // Trial division.
  if (auto small = to_u64(rest)) {
    std::uint64_t r = *small;
    for (std::uint64_t p : primes) {
      if (p > config.trial_division_limit || p * p > r) break;
      if (r % p != 0) continue;
      unsigned e = 0;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      found[to_big(p)] += e;
    }
    rest = to_big(r);
  } else {
    for (std::uint64_t p : primes) {
      if (p > config.trial_division_limit) break;
      if (rest < BigInt(to_big(p) * p)) break;
      if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      found[to_big(p)] += e;
    }
  }

  if (rest > 1) {
    std::mt19937_64 rng(config.seed);
    std::uint64_t budget = config.iteration_budget;
    BigInt leftover = 1;
    split(rest, rng, budget, found, leftover);
    result.unfactored = leftover;
  }
  for (auto& [p, e] : found) result.factors.push_back({p, e});
  return result;
}

Factorization factorize_complete(const BigInt& n, const FactoringConfig& config) {
  auto f = factorize(n, config);
  if (!f.complete()) {
    throw FactoringBudgetExceeded("could not factor cofactor " + f.unfactored.get_str() +
                                  " of " + n.get_str() + " within the iteration budget");
  }
  return f;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factorize_complete(to_big(n)).factors) out.push_back(*to_u64(pp.prime));
  return out;
}

}  // namespace primerep
