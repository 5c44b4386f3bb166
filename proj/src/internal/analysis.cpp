#include <list>

#include "internal/scan.hpp"
#include "primerep/error.hpp"

namespace primerep::internal {

namespace {

constexpr std::size_t kCacheSize = 64;

}  // namespace

std::shared_ptr<const Analysis> analyze(const NtFunction& f, const EvalOptions& options) {
  thread_local std::list<std::shared_ptr<const Analysis>> cache;
  for (auto it = cache.begin(); it != cache.end(); ++it) {
    const Analysis& c = **it;
    if (c.root == f.root_ptr() && c.arity == f.arity() && c.allow_zero == options.allow_zero) {
      if (it != cache.begin()) cache.splice(cache.begin(), cache, it);
      return cache.front();
    }
  }
  auto a = std::make_shared<Analysis>();
  a->root = f.root_ptr();
  a->arity = f.arity();
  a->allow_zero = options.allow_zero;
  a->profile = classify(f);
  if (a->profile.is_polynomial) a->poly = expand(f);
  a->monotone = is_monotone_nondecreasing(f, options);
  cache.push_front(std::move(a));
  if (cache.size() > kCacheSize) cache.pop_back();
  return cache.front();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool coprime(const BigInt& a, const BigInt& b) { return gcd(a, b) == 1; }

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::vector<BigInt> distinct_primes(const BigInt& m) {
  const auto fac = factorize_complete(m);
  std::vector<BigInt> out;
  for (const auto& pp : fac.factors) out.push_back(pp.prime);
  return out;
}

NtFunction product_function(const FunctionSystem& fs) {
  NodePtr root = fs[0].root_ptr();
  for (std::size_t i = 1; i < fs.size(); ++i) root = make_binary(NodeKind::Multiply, root, fs[i].root_ptr());
  return NtFunction(root, fs.arity());
}

}  // namespace primerep::internal
