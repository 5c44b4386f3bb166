#include <numeric>

#include "primerep/core_arith.hpp"
#include "primerep/error.hpp"

namespace primerep {

BigInt to_big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

BigInt to_big_signed(std::int64_t v) {
  if (v >= 0) return to_big(static_cast<std::uint64_t>(v));
  // -(v+1) avoids overflow at INT64_MIN
  return -to_big(static_cast<std::uint64_t>(-(v + 1))) - 1;
}

std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

std::optional<std::int64_t> to_i64(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 63) return std::nullopt;
  const auto magnitude = to_u64(abs(v));
  const auto m = static_cast<std::int64_t>(*magnitude);
  return sgn(v) < 0 ? -m : m;
}

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

BigInt euler_phi(const BigInt& n, const FactoringConfig& config) {
  if (n < 1) throw DomainError("euler_phi requires n >= 1");
  BigInt result = n;
  for (const auto& pp : factorize_complete(n, config).factors) {
    result = result / pp.prime * (pp.prime - 1);
  }
  return result;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi requires n >= 1");
  std::uint64_t result = n;
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= r; ++p) {
    if (r % p != 0) continue;
    while (r % p == 0) r /= p;
    result = result / p * (p - 1);
  }
  if (r > 1) result = result / r * (r - 1);
  return result;
}

unsigned omega(const BigInt& n, const FactoringConfig& config) {
  if (n < 1) throw DomainError("omega requires n >= 1");
  return static_cast<unsigned>(factorize_complete(n, config).factors.size());
}

unsigned omega(std::uint64_t n) {
  if (n == 0) throw DomainError("omega requires n >= 1");
  unsigned count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ++count;
    while (n % p == 0) n /= p;
  }
  return count + (n > 1 ? 1 : 0);
}

BigInt carmichael_lambda(const BigInt& n, const FactoringConfig& config) {
  if (n < 1) throw DomainError("carmichael_lambda requires n >= 1");
  BigInt result = 1;
  for (const auto& pp : factorize_complete(n, config).factors) {
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
    term *= pp.prime - 1;
    if (pp.prime == 2 && pp.exponent >= 3) term /= 2;
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), term.get_mpz_t());
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  if (p < 2 || a % p == 0) throw DomainError("multiplicative_order needs gcd(a, p) = 1");
  std::uint64_t order = p - 1;
  for (std::uint64_t q : distinct_prime_factors(p - 1)) {
    while (order % q == 0 && pow_mod(a, order / q, p) == 1) order /= q;
  }
  return order;
}

CrtSolution crt_solve(const CongruenceSystem& system) {
  BigInt residue = 0;
  BigInt modulus = 1;
  for (const auto& item : system) {
    if (item.modulus < 1) throw DomainError("congruence modulus must be positive");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), item.modulus.get_mpz_t());
    if (g != 1) {
      throw ModuliNotCoprime("moduli share the factor " + g.get_str());
    }
    BigInt r;
    mpz_mod(r.get_mpz_t(), item.residue.get_mpz_t(), item.modulus.get_mpz_t());
    // residue + modulus * t == r (mod item.modulus)
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), item.modulus.get_mpz_t());
    BigInt t = (r - residue) * inv;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), item.modulus.get_mpz_t());
    residue += modulus * t;
    modulus *= item.modulus;
  }
  return {residue, modulus};
}

std::uint64_t least_coprime_exceeding_one(std::uint64_t m) {
  if (m < 2) throw DomainError("least_coprime_exceeding_one requires m >= 2");
  for (std::uint64_t a = 2;; ++a) {
    if (std::gcd(a, m) == 1) return a;
  }
}

BigInt least_coprime_exceeding_one(const BigInt& m) {
  if (m < 2) throw DomainError("least_coprime_exceeding_one requires m >= 2");
  if (auto small = to_u64(m)) return to_big(least_coprime_exceeding_one(*small));
  // The answer is the least prime not dividing m.
  for (std::uint64_t p : small_primes()) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return to_big(p);
  }
  throw DomainError("modulus divisible by every prime below 10^6");
}

std::optional<BigInt> prime_factor_up_to(const BigInt& v, std::uint64_t bound,
                                         const FactoringConfig& config) {
  if (v < 2) throw DomainError("prime_factor_up_to requires v >= 2");
  const auto primes = small_primes();
  const std::uint64_t table_max = primes.back();
  for (std::uint64_t p : primes) {
    if (p > bound) return std::nullopt;
    if (BigInt(to_big(p) * p) > v) {
      // v has no factor below sqrt(v), so it is prime.
      if (v <= to_big(bound)) return v;
      return std::nullopt;
    }
    if (mpz_divisible_ui_p(v.get_mpz_t(), p)) return to_big(p);
  }
  if (bound <= table_max) return std::nullopt;
  // Every prime factor exceeds the table; fall back to full factorization.
  auto f = factorize_complete(v, config);
  const BigInt& spf = f.factors.front().prime;
  if (spf <= to_big(bound)) return spf;
  return std::nullopt;
}

}  // namespace primerep
