#include "primerep/density.hpp"

#include <cmath>
#include <numeric>

#include "internal/scan.hpp"
#include "primerep/error.hpp"

namespace primerep {

namespace {

using ModPoly = std::vector<std::uint64_t>;  // coefficients a_0 .. a_d mod p

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// a mod b, b nonzero and trimmed.
ModPoly poly_mod(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv = inverse(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t q = mul_mod(a.back(), inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t t = mul_mod(q, b[i], p);
      a[shift + i] = (a[shift + i] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(out), f, p);
}

ModPoly poly_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly reduce_coefficients(const std::vector<BigInt>& coeffs, std::uint64_t p) {
  ModPoly out;
  const BigInt bp = to_big(p);
  for (const auto& c : coeffs) out.push_back(internal::mod(c, bp).get_ui());
  trim(out);
  return out;
}

std::uint64_t count_roots_by_scan(const ModPoly& f, std::uint64_t p) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (mul_mod(acc, x, p) + f[i]) % p;
    if (acc == 0) ++count;
  }
  return count;
}

// Distinct roots in F_p: degree of gcd(f, x^p - x).
std::uint64_t count_roots_by_gcd(const ModPoly& f, std::uint64_t p) {
  if (f.empty()) return p;
  if (f.size() == 1) return 0;
  ModPoly result{1};
  ModPoly base = poly_mod({0, 1}, f, p);
  for (std::uint64_t e = p; e > 0; e >>= 1) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
  }
  result.resize(std::max<std::size_t>(result.size(), 2), 0);
  result[1] = (result[1] + p - 1) % p;
  trim(result);
  if (result.empty()) return f.size() - 1;
  return poly_gcd(f, result, p).size() - 1;
}

std::vector<BigInt> product_coefficients(const FunctionSystem& fs) {
  for (const auto& f : fs) {
    if (f.arity() != 1 || !expand(f)) {
      throw NotUnivariatePolynomial(f.to_string() + " is not a univariate polynomial");
    }
  }
  return expand(internal::product_function(fs))->univariate_coefficients();
}

void kahan_add(long double& sum, long double& comp, long double term) {
  const long double y = term - comp;
  const long double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

}  // namespace

std::uint64_t omega_p(const FunctionSystem& fs, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const ModPoly f = reduce_coefficients(product_coefficients(fs), p);
  if (f.empty()) return p;
  return count_roots_by_scan(f, p);
}

BatemanHornConstant bateman_horn_constant(const FunctionSystem& fs, std::uint64_t cutoff, unsigned threads,
                                          std::size_t memory_cap) {
  const std::vector<BigInt> coeffs = product_coefficients(fs);
  const long double s = static_cast<long double>(fs.size());
  const std::vector<std::uint64_t> primes = sieve_primes(cutoff, memory_cap);
  const std::uint64_t decade = cutoff / 10;

  struct Chunk {
    long double all = 0, all_c = 0;
    long double low = 0, low_c = 0;
    std::optional<std::uint64_t> obstruction;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> table;
  };
  const auto chunks = internal::parallel_chunks<Chunk>(
      0, static_cast<std::int64_t>(primes.size()) - 1, threads, [&](std::int64_t lo, std::int64_t hi) {
        Chunk c;
        for (std::int64_t i = lo; i <= hi; ++i) {
          const std::uint64_t p = primes[static_cast<std::size_t>(i)];
          const ModPoly f = reduce_coefficients(coeffs, p);
          const std::uint64_t w = p < 256 ? (f.empty() ? p : count_roots_by_scan(f, p)) : count_roots_by_gcd(f, p);
          if (p < 100) c.table.emplace_back(p, w);
          if (w == p) {
            if (!c.obstruction) c.obstruction = p;
            continue;
          }
          const long double pl = static_cast<long double>(p);
          const long double term =
              std::log1p(-static_cast<long double>(w) / pl) - s * std::log1p(-1.0L / pl);
          kahan_add(c.all, c.all_c, term);
          if (p <= decade) kahan_add(c.low, c.low_c, term);
        }
        return std::vector<Chunk>{std::move(c)};
      });

  BatemanHornConstant out;
  out.cutoff = cutoff;
  out.primes_used = primes.size();
  long double all = 0, all_c = 0, low = 0, low_c = 0;
  for (const auto& c : chunks) {
    kahan_add(all, all_c, c.all);
    kahan_add(low, low_c, c.low);
    if (c.obstruction && !out.obstruction_prime) out.obstruction_prime = c.obstruction;
    for (const auto& [p, w] : c.table) out.omega_table[p] = w;
  }
  if (out.obstruction_prime) return out;
  out.value = std::exp(all);
  out.last_decade_change = std::expm1(all - low);
  return out;
}

PredictedCount predicted_count(const FunctionSystem& fs, std::uint64_t m, long double constant) {
  if (m < 2) throw DomainError("m must be >= 2");
  PredictedCount out;
  out.constant = constant;
  for (const auto& f : fs) {
    const auto profile = classify(f);
    if (f.arity() != 1 || !profile.degree) throw NotUnivariatePolynomial(f.to_string() + " is not a univariate polynomial");
    out.degree_product *= std::max(1u, *profile.degree);
  }
  const long double s = static_cast<long double>(fs.size());
  long double sum = 0, comp = 0;
  for (std::uint64_t n = 2; n <= m; ++n) {
    kahan_add(sum, comp, std::pow(std::log(static_cast<long double>(n)), -s));
  }
  const long double scale = constant / static_cast<long double>(out.degree_product);
  const long double lm = std::log(static_cast<long double>(m));
  out.sum_form = scale * sum;
  out.closed_form = scale * static_cast<long double>(m) / std::pow(lm, s);
  return out;
}

std::uint64_t actual_count(const FunctionSystem& fs, std::uint64_t m, std::size_t memory_cap) {
  if (m == 0) return 0;
  constexpr std::uint64_t kTableCeiling = std::uint64_t{1} << 28;
  const std::size_t s = fs.size();
  std::vector<std::optional<std::int64_t>> values(s * m);
  std::uint64_t largest = 2;
  for (std::uint64_t n = 1; n <= m; ++n) {
    const Point x{static_cast<std::int64_t>(n)};
    for (std::size_t i = 0; i < s; ++i) {
      auto v = evaluate_small(fs[i], std::span<const std::int64_t>(x));
      if (v && *v > 0) largest = std::max(largest, static_cast<std::uint64_t>(*v));
      values[(n - 1) * s + i] = v;
    }
  }
  const PrimeTable table(std::min({largest, kTableCeiling, 2 * static_cast<std::uint64_t>(memory_cap) - 2}), memory_cap);
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= m; ++n) {
    bool all = true;
    for (std::size_t i = 0; i < s && all; ++i) {
      const auto& v = values[(n - 1) * s + i];
      if (v) {
        const auto u = static_cast<std::uint64_t>(*v);
        all = *v > 1 && (u <= table.limit() ? table.contains(u) : is_prime(u));
      } else {
        const Point x{static_cast<std::int64_t>(n)};
        all = is_prime(evaluate(fs[i], std::span<const std::int64_t>(x)));
      }
    }
    if (all) ++count;
  }
  return count;
}

long double dlvp_ratio(std::int64_t a, std::uint64_t b, std::uint64_t x, std::size_t memory_cap) {
  if (b == 0) throw DomainError("b must be positive");
  const auto bb = static_cast<std::int64_t>(b);
  if (std::gcd(a, bb) != 1) throw NotCoprime("gcd(a, b) must be 1");
  if (x < 2) throw DomainError("x must be >= 2");
  const std::uint64_t residue = static_cast<std::uint64_t>(((a % bb) + bb) % bb);
  std::uint64_t count = 0;
  for (const std::uint64_t p : sieve_primes(x, memory_cap)) {
    if (p % b == residue) ++count;
  }
  const long double lx = std::log(static_cast<long double>(x));
  return static_cast<long double>(count) * static_cast<long double>(euler_phi(b)) * lx / static_cast<long double>(x);
}

ApLeastPrimeTable least_prime_ap(std::uint64_t k, bool strict_positive_n) {
  if (k < 2) throw DomainError("k must be >= 2");
  ApLeastPrimeTable out;
  out.k = k;
  out.strict_positive_n = strict_positive_n;
  for (std::uint64_t l = 1; l <= k; ++l) {
    if (std::gcd(l, k) != 1) continue;
    std::uint64_t p = strict_positive_n ? l + k : l;
    while (!is_prime(p)) p += k;
    out.entries[l] = p;
    out.p_k = std::max(out.p_k, p);
  }
  out.exponent = std::log(static_cast<double>(out.p_k)) / std::log(static_cast<double>(k));
  return out;
}

ApProductCheck ap_product_inequality(std::int64_t a, std::uint64_t b, std::uint64_t n_max) {
  if (b == 0) throw DomainError("b must be >= 1");
  if (std::gcd(a, static_cast<std::int64_t>(b)) != 1) throw NotCoprime("gcd(a, b) must be 1");
  ApProductCheck out;
  out.a = a;
  out.b = b;
  out.n_max = n_max;
  for (std::int64_t v = a; out.primes.size() < n_max + 1; v += static_cast<std::int64_t>(b)) {
    if (v > 1 && is_prime(static_cast<std::uint64_t>(v))) out.primes.push_back(static_cast<std::uint64_t>(v));
  }
  BigInt product = 1;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    product *= to_big(out.primes[n - 1]);
    if (product <= to_big(out.primes[n])) {
      out.violations.push_back(n);
      out.threshold = n;
    }
  }
  return out;
}

}  // namespace primerep
