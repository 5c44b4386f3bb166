#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "primerep/core_arith.hpp"
#include "primerep/error.hpp"

using namespace primerep;

TEST_CASE("is_prime on named values") {
  CHECK(is_prime(BigInt(2)));
  CHECK_FALSE(is_prime(BigInt(2047)));
  CHECK(is_prime(BigInt(6700417)));
  CHECK_FALSE(is_prime(BigInt(1)));
  CHECK_FALSE(is_prime(BigInt(0)));
}

TEST_CASE("primality flags values past the deterministic bound") {
  const BigInt m89 = (BigInt(1) << 89) - 1;  // Mersenne prime above the bound
  REQUIRE(m89 > deterministic_primality_bound());
  CHECK(primality(m89).prime);
  CHECK(primality(m89).probabilistic);
  CHECK_FALSE(primality(BigInt(6700417)).probabilistic);
}

TEST_CASE("factorize") {
  const auto f5 = factorize(BigInt("4294967297"));
  REQUIRE(f5.factors.size() == 2);
  CHECK(f5.factors[0].prime == 641);
  CHECK(f5.factors[1].prime == 6700417);
  CHECK(factorize(BigInt(1)).factors.empty());
  const auto f = factorize(BigInt(82677));
  std::vector<BigInt> primes;
  for (const auto& pp : f.factors) primes.push_back(pp.prime);
  CHECK(primes == std::vector<BigInt>{3, 7, 31, 127});
}

TEST_CASE("factorize is seed independent and reconstructs the input") {
  FactoringConfig a, b;
  b.seed = 12345;
  const BigInt n("18446744073709551617");  // F(6)
  const auto fa = factorize(n, a);
  const auto fb = factorize(n, b);
  REQUIRE(fa.complete());
  CHECK(fa.product() == n);
  CHECK(fa.factors.size() == fb.factors.size());
  CHECK(fa.factors[0].prime == 274177);
}

TEST_CASE("sieve_primes") {
  CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve_primes(100).size() == 25);
  CHECK(sieve_primes(1).empty());
  CHECK_THROWS_AS(sieve_primes(std::uint64_t{1} << 40, 1 << 20), MemoryBudgetExceeded);
}

TEST_CASE("euler_phi, omega") {
  CHECK(euler_phi(std::uint64_t{13}) == 12);
  CHECK(euler_phi(std::uint64_t{90}) == 24);
  CHECK(euler_phi(std::uint64_t{1}) == 1);
  CHECK(euler_phi(BigInt(90)) == 24);
  CHECK(omega(std::uint64_t{90}) == 3);
  CHECK(omega(std::uint64_t{1}) == 0);
  CHECK(omega(std::uint64_t{65535}) == 4);
}

TEST_CASE("crt_solve") {
  const auto s = crt_solve({{BigInt(2), BigInt(3)}, {BigInt(3), BigInt(5)}});
  CHECK(s.residue == 8);
  CHECK(s.modulus == 15);
  const auto one = crt_solve({{BigInt(4), BigInt(7)}});
  CHECK(one.residue == 4);
  CHECK(one.modulus == 7);
  CHECK_THROWS_AS(crt_solve({{BigInt(1), BigInt(4)}, {BigInt(3), BigInt(6)}}), ModuliNotCoprime);
}

TEST_CASE("least_coprime_exceeding_one") {
  CHECK(least_coprime_exceeding_one(std::uint64_t{2}) == 3);
  CHECK(least_coprime_exceeding_one(std::uint64_t{6}) == 5);
  CHECK(least_coprime_exceeding_one(std::uint64_t{30}) == 7);
  CHECK(least_coprime_exceeding_one(BigInt(30)) == 7);
}

TEST_CASE("property: is_prime agrees with the sieve below 10^5") {
  const auto primes = sieve_primes(100'000);
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    const bool in_sieve = idx < primes.size() && primes[idx] == n;
    if (in_sieve) ++idx;
    REQUIRE(is_prime(n) == in_sieve);
  }
}

TEST_CASE("property: factorizations reconstruct n <= 10^4") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto f = factorize(to_big(n));
    REQUIRE(f.complete());
    REQUIRE(f.product() == to_big(n));
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      REQUIRE(is_prime(f.factors[i].prime));
      if (i > 0) REQUIRE(f.factors[i - 1].prime < f.factors[i].prime);
    }
  }
}

TEST_CASE("property: least coprime exceeding one is prime for 2 < n <= 10^5") {
  for (std::uint64_t n = 3; n <= 100'000; ++n) REQUIRE(is_prime(least_coprime_exceeding_one(n)));
}

TEST_CASE("property: euler_phi matches the coprime count for n <= 2000") {
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x < n; ++x) count += std::gcd(x, n) == 1;
    REQUIRE(euler_phi(n) == count);
    REQUIRE(euler_phi(to_big(n)) == to_big(count));
  }
}

TEST_CASE("property: random CRT systems") {
  std::mt19937_64 rng(7);
  const auto primes = sieve_primes(200);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::uint64_t> pool(primes.begin(), primes.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t k = 1 + rng() % 4;
    CongruenceSystem sys;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t m = pool[i] * (rng() % 2 == 0 ? pool[i] : 1);
      sys.push_back({to_big(rng() % m), to_big(m)});
    }
    const auto s = crt_solve(sys);
    for (const auto& c : sys) {
      BigInt r = s.residue % c.modulus;
      REQUIRE(r == c.residue);
    }
  }
}

TEST_CASE("carmichael_lambda and multiplicative_order") {
  CHECK(carmichael_lambda(BigInt(8)) == 2);
  CHECK(carmichael_lambda(BigInt(15)) == 4);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 23) == 11);
}
