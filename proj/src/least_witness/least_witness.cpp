#include "primerep/least_witness.hpp"

#include "internal/scan.hpp"
#include "primerep/error.hpp"

namespace primerep {

namespace {

LeastWitnessRecord from_verdict(const Verdict& v, const BigInt& m) {
  LeastWitnessRecord r;
  r.m = m;
  r.horizon = v.horizon;
  r.conclusive = v.conclusive();
  if (v.witness) {
    r.point = v.witness->point;
    r.values = v.witness->values;
  }
  return r;
}

bool same_function(const NtFunction& f, std::string_view canonical) {
  return f.arity() == 1 && f.to_string() == parse_function(canonical).to_string();
}

BigInt power(std::int64_t base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

}  // namespace

LeastWitnessRecord s_f(const NtFunction& f, const BigInt& m, std::int64_t horizon, const EvalOptions& options) {
  return from_verdict(find_value_witness(f, m, WitnessMode::E, horizon, options), m);
}

LeastWitnessRecord s_system(const FunctionSystem& fs, const BigInt& m, std::int64_t horizon,
                            const EvalOptions& options) {
  return from_verdict(check_system_conditions(fs, m, horizon, options), m);
}

std::uint64_t s_mersenne_by_order(std::uint64_t m) {
  if (m < 3 || m % 2 == 0) throw DomainError("the order method needs an odd modulus > 1");
  std::vector<std::uint64_t> orders;
  for (auto p : distinct_prime_factors(m)) orders.push_back(multiplicative_order(2, p));
  for (std::uint64_t n = 2;; ++n) {
    bool clear = true;
    for (auto d : orders) {
      if (n % d == 0) {
        clear = false;
        break;
      }
    }
    if (clear) return n;
  }
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Sqrt:
      return "sqrt";
    case BoundKind::Log2:
      return "log2";
    case BoundKind::Poly:
      return "poly";
    case BoundKind::LinearFermat:
      return "linear_fermat";
    case BoundKind::Root:
      return "root";
  }
  return "sqrt";
}

BoundCheck verify_bound(const NtFunction& f, BoundKind kind, std::int64_t m_lo, std::int64_t m_hi,
                        const BoundOptions& options) {
  if (m_lo < 2) throw DomainError("moduli start at 2");
  BoundCheck out;
  out.kind = kind;
  out.m_lo = m_lo;
  out.m_hi = m_hi;

  BigInt lead = 1;
  unsigned degree = 1;
  switch (kind) {
    case BoundKind::Sqrt:
    case BoundKind::Root:
      if (!same_function(f, "x")) throw BoundFunctionMismatch("this bound applies to f(x) = x");
      if (kind == BoundKind::Root && (options.root_k < 1 || options.root_k > 4)) {
        throw DomainError("root bounds are checked for k <= 4");
      }
      break;
    case BoundKind::Log2:
      if (!same_function(f, "2^x-1")) throw BoundFunctionMismatch("this bound applies to f(x) = 2^x - 1");
      break;
    case BoundKind::LinearFermat:
      if (!same_function(f, "2^(2^x)+1")) throw BoundFunctionMismatch("this bound applies to f(x) = 2^(2^x) + 1");
      break;
    case BoundKind::Poly: {
      const auto info = internal::analyze(f, options.eval);
      if (!info->profile.is_polynomial || f.arity() != 1 || !info->profile.leading_coefficient ||
          *info->profile.leading_coefficient <= 0 || info->profile.degree.value_or(0) == 0) {
        throw BoundFunctionMismatch("this bound applies to univariate polynomials with positive leading coefficient");
      }
      lead = *info->profile.leading_coefficient;
      degree = *info->profile.degree;
      out.threshold = options.poly_threshold.value_or(BigInt(10 * lead * power(2, degree)));
      break;
    }
  }

  auto satisfied = [&](std::int64_t m, std::int64_t s) {
    const BigInt bm = to_big_signed(m);
    switch (kind) {
      case BoundKind::Sqrt:
        return power(s, 2) < bm;
      case BoundKind::Root:
        return power(s, options.root_k) < bm;
      case BoundKind::Log2:
        // s < log2(m)  <=>  2^s < m
        return s < 64 && power(2, static_cast<unsigned long>(s)) < bm;
      case BoundKind::Poly:
        return lead * power(s, degree) < bm;
      case BoundKind::LinearFermat:
        return s <= m;
    }
    return false;
  };

  std::int64_t from = m_lo;
  if (kind == BoundKind::Poly && *out.threshold >= m_lo) {
    const auto t = to_i64(*out.threshold);
    from = t ? *t + 1 : m_hi + 1;
  }
  out.violations = internal::parallel_chunks<BoundViolation>(
      from, m_hi, options.threads, [&](std::int64_t a, std::int64_t b) {
        std::vector<BoundViolation> local;
        for (std::int64_t m = a; m <= b; ++m) {
          const auto rec = s_f(f, to_big_signed(m), options.horizon, options.eval);
          if (!rec.point) {
            local.push_back({m, std::nullopt});
          } else if (!satisfied(m, rec.point->front())) {
            local.push_back({m, rec.point->front()});
          }
        }
        return local;
      });
  if (kind == BoundKind::Root) {
    out.empirical_threshold = out.violations.empty() ? m_lo - 1 : out.violations.back().m;
  }
  return out;
}

std::vector<ExponentIdentityViolation> exponent_identity_check(std::int64_t m_lo, std::int64_t m_hi,
                                                               unsigned threads) {
  if (m_lo < 1) throw DomainError("moduli start at 1");
  const NtFunction mersenne = parse_function("2^x-1");
  return internal::parallel_chunks<ExponentIdentityViolation>(m_lo, m_hi, threads, [&](std::int64_t a,
                                                                                      std::int64_t b) {
    std::vector<ExponentIdentityViolation> local;
    for (std::int64_t m = a; m <= b; ++m) {
      if (m == 1) continue;
      auto t = static_cast<std::uint64_t>(m);
      while (t % 2 == 0) t /= 2;
      const Point x{static_cast<std::int64_t>(euler_phi(t) + 1)};
      const BigInt bm = to_big_signed(m);
      const BigInt g = internal::gcd(evaluate_mod(mersenne, std::span<const std::int64_t>(x), bm), bm);
      if (g != 1) local.push_back({m, g});
    }
    return local;
  });
}

}  // namespace primerep
