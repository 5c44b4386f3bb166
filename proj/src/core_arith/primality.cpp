#include <array>
#include <bit>

#include "primerep/core_arith.hpp"

namespace primerep {

namespace {

constexpr std::array<std::uint64_t, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Extra bases used beyond the deterministic bound. Fixed so results are
// reproducible; the output is flagged probabilistic anyway.
constexpr std::array<std::uint64_t, 12> kExtraBases = {
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t a) {
  const std::uint64_t n1 = n - 1;
  const int s = std::countr_zero(n1);
  const std::uint64_t d = n1 >> s;
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool strong_probable_prime(const BigInt& n, unsigned long a) {
  BigInt n1 = n - 1;
  const mp_bitcnt_t s = mpz_scan1(n1.get_mpz_t(), 0);
  BigInt d;
  mpz_tdiv_q_2exp(d.get_mpz_t(), n1.get_mpz_t(), s);
  BigInt x;
  BigInt base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

BigInt deterministic_primality_bound() {
  // psi_13 from Sorenson & Webster: 3317044064679887385961981
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 41ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;
  // Bases 2..37 already suffice below 2^64.
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime_u64(n, a)) return false;
  }
  return true;
}

PrimalityResult primality(const BigInt& n) {
  if (auto small = to_u64(n)) return {is_prime(*small), false};
  if (n < 2) return {false, false};
  for (std::uint64_t p : small_primes().first(200)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, false};
  }
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a)) return {false, false};
  }
  if (n < deterministic_primality_bound()) return {true, false};
  for (std::uint64_t a : kExtraBases) {
    if (!strong_probable_prime(n, a)) return {false, false};
  }
  return {true, true};
}

bool is_prime(const BigInt& n) { return primality(n).prime; }

}  // namespace primerep
