#include <algorithm>
#include <cmath>

#include "primerep/core_arith.hpp"
#include "primerep/error.hpp"

namespace primerep {

namespace {

constexpr std::uint64_t kSegmentBytes = 1u << 18;

// Plain sieve for the base primes up to sqrt(limit).
std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, std::size_t memory_cap) {
  if (limit < 2) return {};
  // pi(x) < 1.26 x / ln x for x > 1
  const double estimate = limit < 17 ? 7.0 : 1.26 * static_cast<double>(limit) / std::log(static_cast<double>(limit));
  if (estimate * sizeof(std::uint64_t) + kSegmentBytes > static_cast<double>(memory_cap)) {
    throw MemoryBudgetExceeded("sieve limit " + std::to_string(limit) + " exceeds the memory cap");
  }
  const std::uint64_t root = isqrt(limit);
  const auto base = simple_sieve(root);

  std::vector<std::uint64_t> primes;
  primes.reserve(static_cast<std::size_t>(estimate));
  std::vector<std::uint8_t> segment(kSegmentBytes);
  for (std::uint64_t low = 0; low <= limit; low += kSegmentBytes) {
    const std::uint64_t high = std::min(limit, low + kSegmentBytes - 1);
    std::fill(segment.begin(), segment.end(), 1);
    for (std::uint64_t p : base) {
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) segment[j - low] = 0;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(low, 2); n <= high; ++n) {
      if (segment[n - low]) primes.push_back(n);
    }
    if (high == limit) break;
  }
  return primes;
}

PrimeTable::PrimeTable(std::uint64_t limit, std::size_t memory_cap) : limit_(limit) {
  if (limit / 2 + 1 > memory_cap) {
    throw MemoryBudgetExceeded("prime table limit " + std::to_string(limit) + " exceeds the memory cap");
  }
  odd_composite_.assign(limit / 2 + 1, 0);
  odd_composite_[0] = 1;  // 1 is not prime
  for (std::uint64_t i = 3; i * i <= limit; i += 2) {
    if (odd_composite_[i / 2]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += 2 * i) odd_composite_[j / 2] = 1;
  }
}

bool PrimeTable::contains(std::uint64_t n) const {
  if (n > limit_) return is_prime(n);
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  return odd_composite_[n / 2] == 0;
}

std::span<const std::uint64_t> small_primes() {
  static const std::vector<std::uint64_t> table = simple_sieve(1'000'000);
  return table;
}

}  // namespace primerep
