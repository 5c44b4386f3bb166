#pragma once

// Helpers shared by the scanning modules. Not installed.

#include <memory>
#include <optional>

#include "primerep/function_model.hpp"

namespace primerep::internal {

enum class Decision { Yes, No, Undecided };

struct ScanResult {
  std::optional<Point> point;
  bool undecided = false;  // some point could not be classified
};

// First point in workbench order with max-norm <= radius for which pred says
// Yes.
template <class Pred>
ScanResult scan_points(unsigned arity, std::int64_t x_min, std::int64_t radius, Pred&& pred) {
  ScanResult out;
  walk_points(arity, x_min, radius, [&](const Point& p) {
    const Decision d = pred(p);
    if (d == Decision::Yes) {
      out.point = p;
      return true;
    }
    if (d == Decision::Undecided) out.undecided = true;
    return false;
  });
  return out;
}

// Cached per-thread facts about a function. The cache holds the root alive so
// a pointer key is never reused while cached.
struct Analysis {
  NodePtr root;
  unsigned arity = 0;
  bool allow_zero = false;
  FunctionProfile profile;
  std::optional<Polynomial> poly;
  bool monotone = false;
};

std::shared_ptr<const Analysis> analyze(const NtFunction& f, const EvalOptions& options = {});

bool coprime(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt mod(const BigInt& a, const BigInt& m);

// Radical of m from its complete factorization.
std::vector<BigInt> distinct_primes(const BigInt& m);

// Product of the members as one function of the shared arity.
NtFunction product_function(const FunctionSystem& fs);

}  // namespace primerep::internal

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace primerep::internal {

// Splits [lo, hi] into contiguous chunks, runs fn(chunk_lo, chunk_hi) on up to
// `threads` workers and concatenates the per-chunk vectors in range order, so
// the result does not depend on the thread count.
template <class T, class Fn>
std::vector<T> parallel_chunks(std::int64_t lo, std::int64_t hi, unsigned threads, Fn&& fn) {
  if (hi < lo) return {};
  const std::int64_t total = hi - lo + 1;
  const std::int64_t chunk = std::max<std::int64_t>(1, std::min<std::int64_t>(4096, total / 64 + 1));
  const std::int64_t chunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<T>> parts(static_cast<std::size_t>(chunks));
  auto run = [&](std::int64_t c) {
    const std::int64_t a = lo + c * chunk;
    const std::int64_t b = std::min(hi, a + chunk - 1);
    parts[static_cast<std::size_t>(c)] = fn(a, b);
  };
  threads = std::max(1u, threads);
  if (threads == 1 || chunks == 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::int64_t c = next++; c < chunks; c = next++) run(c);
        } catch (...) {
          errors[t] = std::current_exception();
          next = chunks;
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<T> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

}  // namespace primerep::internal
