#include "primerep/fermat.hpp"

#include "internal/scan.hpp"
#include "primerep/error.hpp"

namespace primerep {

namespace {

BigInt pow2(std::uint64_t e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

bool divides_fermat_u64(std::uint64_t d, std::uint64_t x) {
  std::uint64_t r = 2 % d;
  for (std::uint64_t i = 0; i < x; ++i) r = mul_mod(r, r, d);
  return (r + 1) % d == 0;
}

}  // namespace

BigInt fermat_number(std::uint64_t x, std::size_t bit_budget) {
  if (x >= 63 || (std::uint64_t{1} << x) > bit_budget) {
    throw EvaluationBudgetExceeded("F(" + std::to_string(x) + ") exceeds the bit budget");
  }
  return pow2(std::uint64_t{1} << x) + 1;
}

bool divides_fermat(const BigInt& d, std::uint64_t x) {
  if (d < 1) throw DomainError("divisor must be positive");
  if (d == 1) return true;
  if (const auto small = to_u64(d)) return divides_fermat_u64(*small, x);
  BigInt r = 2;
  for (std::uint64_t i = 0; i < x; ++i) {
    r *= r;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  }
  r += 1;
  return mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::vector<FermatFactorHit> euler_lucas_search(std::uint64_t x, std::uint64_t k_limit, unsigned threads) {
  const std::uint64_t shift = x > 1 ? x + 2 : x + 1;
  const BigInt step = pow2(shift);
  // Only proper divisors count; F(x) itself is excluded.
  std::optional<BigInt> fx;
  if (x <= 20) fx = fermat_number(x);
  return internal::parallel_chunks<FermatFactorHit>(
      1, static_cast<std::int64_t>(k_limit), threads, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<FermatFactorHit> local;
        for (std::int64_t k = lo; k <= hi; ++k) {
          const BigInt d = step * static_cast<unsigned long>(k) + 1;
          if (fx && d >= *fx) break;
          if (!divides_fermat(d, x) || !is_prime(d)) continue;
          FermatFactorHit hit{d, static_cast<std::uint64_t>(k), std::nullopt};
          const BigInt half = pow2(x + 1);
          if (mpz_divisible_p(BigInt(d - 1).get_mpz_t(), half.get_mpz_t())) {
            hit.euler_k = BigInt((d - 1) / half).get_ui();
          }
          local.push_back(std::move(hit));
        }
        return local;
      });
}

FactorizationCheck verify_factorization(std::uint64_t x, const std::vector<BigInt>& claimed) {
  FactorizationCheck out;
  BigInt product = 1;
  for (const auto& f : claimed) {
    product *= f;
    const auto pr = primality(f);
    if (!pr.prime) out.composite_factors.push_back(f);
    out.probabilistic = out.probabilistic || pr.probabilistic;
  }
  out.product_matches = product == fermat_number(x);
  return out;
}

const std::vector<SmallFactorEntry>& small_factor_corpus() {
  static const std::vector<SmallFactorEntry> corpus = {
      {7, {BigInt("59649589127497217")}},
      {8, {BigInt("1238926361552897")}},
      {9, {BigInt("2424833")}},
      {10, {BigInt("45592577"), BigInt("6487031809")}},
      {11, {BigInt("319489"), BigInt("974849")}},
  };
  return corpus;
}

std::vector<SmallFactorCheck> verify_small_factors(const SmallFactorEntry& entry) {
  std::vector<SmallFactorCheck> out;
  const BigInt form = pow2(entry.x + 2);
  for (const auto& f : entry.factors) {
    SmallFactorCheck c;
    c.x = entry.x;
    c.factor = f;
    c.divides = divides_fermat(f, entry.x);
    c.prime = is_prime(f);
    c.divisor_form = mpz_divisible_p(BigInt(f - 1).get_mpz_t(), form.get_mpz_t()) != 0;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FermatCoprimeViolation> fermat_coprime_check(std::int64_t m_lo, std::int64_t m_hi, unsigned threads) {
  if (m_lo < 1) throw DomainError("m starts at 1");
  const NtFunction fermat = parse_function("2^(2^x)+1");
  return internal::parallel_chunks<FermatCoprimeViolation>(m_lo, m_hi, threads, [&](std::int64_t lo,
                                                                                    std::int64_t hi) {
    std::vector<FermatCoprimeViolation> local;
    for (std::int64_t m = std::max<std::int64_t>(lo, 2); m <= hi; ++m) {
      const BigInt bm = to_big_signed(m);
      const Point x{m};
      const BigInt g = internal::gcd(evaluate_mod(fermat, std::span<const std::int64_t>(x), bm), bm);
      if (g != 1) local.push_back({m, g});
    }
    return local;
  });
}

FermatInZm fermat_in_zm(const BigInt& m, std::uint64_t x_min) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  FermatInZm out;
  const std::size_t m_bits = bit_length(m);
  for (std::uint64_t x = x_min;; ++x) {
    // F(x) has 2^x + 1 bits, so it is >= m once 2^x >= bit_length(m).
    if (x >= 63 || (std::uint64_t{1} << x) >= m_bits) break;
    ++out.scanned;
    const BigInt f = fermat_number(x);
    if (f >= m) break;
    if (internal::coprime(f, m)) {
      out.x = x;
      out.value = f;
      break;
    }
  }
  return out;
}

std::vector<FinitenessStep> finiteness_argument_check(std::uint64_t k_lo, std::uint64_t k_hi, std::uint64_t x_min) {
  std::vector<FinitenessStep> out;
  for (std::uint64_t k = std::max<std::uint64_t>(k_lo, 1); k <= k_hi; ++k) {
    FinitenessStep s;
    s.k = k;
    s.m = 1;
    for (std::uint64_t i = 0; i < k; ++i) s.m *= fermat_number(i);
    s.telescoping = s.m == fermat_number(k) - 2;
    s.in_zm = fermat_in_zm(s.m, x_min);
    out.push_back(std::move(s));
  }
  return out;
}

std::string_view to_string(FermatStatus s) {
  switch (s) {
    case FermatStatus::Prime:
      return "Prime";
    case FermatStatus::Composite:
      return "Composite";
    case FermatStatus::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

FermatRecord fermat_record(std::uint64_t x, std::uint64_t k_limit, std::size_t primality_bits) {
  FermatRecord r;
  r.x = x;
  try {
    r.value = fermat_number(x);
  } catch (const EvaluationBudgetExceeded&) {
  }
  if (x >= 2) {
    for (auto& hit : euler_lucas_search(x, k_limit)) r.known_factors.push_back(hit.factor);
  }
  if (!r.known_factors.empty()) {
    r.status = FermatStatus::Composite;
  } else if (r.value && bit_length(*r.value) <= primality_bits) {
    const auto pr = primality(*r.value);
    r.status = pr.prime ? FermatStatus::Prime : FermatStatus::Composite;
    r.probabilistic = pr.probabilistic;
  }
  return r;
}

}  // namespace primerep
