#include "primerep/factorial_probe.hpp"

#include <cmath>

#include "internal/scan.hpp"
#include "primerep/conditions.hpp"
#include "primerep/error.hpp"

namespace primerep {

namespace {

std::optional<BigInt> small_factorial(std::uint64_t l) {
  if (l > 20) return std::nullopt;
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= l; ++i) out *= static_cast<unsigned long>(i);
  return out;
}

FactorialWitness make_witness(std::uint64_t l, const Point& p, std::vector<BigInt> values) {
  FactorialWitness w;
  w.l = l;
  w.point = p;
  w.all_prime = true;
  const BigInt* least = nullptr;
  for (const auto& v : values) {
    w.all_prime = w.all_prime && is_prime(v);
    if (!least || v < *least) least = &v;
  }
  w.least_value_prime = least && is_prime(*least);
  w.values = std::move(values);
  return w;
}

BigInt product_of(const std::vector<BigInt>& values) {
  BigInt out = 1;
  for (const auto& v : values) out *= v;
  return out;
}

struct Search {
  std::optional<std::pair<Point, std::vector<BigInt>>> argument_least;
  std::optional<std::pair<Point, std::vector<BigInt>>> value_least;
  bool value_certified = false;
};

// Argument-least and value-least (by product of member values) points whose
// values are accepted. The value-least scan stops at the radius past which
// the product cannot fall below the current best.
template <class Accept>
Search least_points(const FunctionSystem& fs, std::int64_t horizon, const EvalOptions& options, Accept&& accept) {
  Search out;
  const NtFunction product = internal::product_function(fs);
  std::int64_t limit = horizon;
  BigInt best;
  walk_points(fs.arity(), options.x_min(), horizon, [&](const Point& p) {
    if (max_norm(p) > limit) return true;
    std::vector<BigInt> values;
    values.reserve(fs.size());
    for (const auto& f : fs) {
      try {
        values.push_back(evaluate(f, std::span<const std::int64_t>(p), options));
      } catch (const EvaluationBudgetExceeded&) {
        return false;
      }
    }
    if (!accept(values)) return false;
    const BigInt prod = product_of(values);
    if (!out.argument_least) out.argument_least.emplace(p, values);
    if (!out.value_least || prod < best) {
      best = prod;
      out.value_least.emplace(p, std::move(values));
      if (const auto r = escape_radius(product, BigInt(1), best, options); r && *r - 1 <= horizon) {
        limit = std::min(limit, *r - 1);
        out.value_certified = true;
      }
    }
    return false;
  });
  return out;
}

std::int64_t factorial_escape(const FunctionSystem& fs, std::uint64_t l, const EvalOptions& options) {
  const auto fact = small_factorial(l);
  if (!fact) return -1;
  for (const auto& f : fs) {
    if (const auto r = escape_radius(f, BigInt(2), *fact, options)) return *r;
  }
  return -1;
}

}  // namespace

bool coprime_to_factorial(const BigInt& v, std::uint64_t l) {
  if (v <= 1) throw DomainError("v must exceed 1");
  if (v <= to_big(l)) return false;
  return !prime_factor_up_to(v, l).has_value();
}

bool below_factorial(const BigInt& v, std::uint64_t l) {
  if (const auto fact = small_factorial(l)) return v < *fact;
  if (v < 1) return true;
  const double log2_fact = std::lgamma(static_cast<double>(l) + 1.0) / std::log(2.0);
  const double bits = static_cast<double>(bit_length(v));
  // 2^(bits-1) <= v < 2^bits.
  if (bits + 1.0 < log2_fact) return true;
  if (bits - 2.0 > log2_fact) return false;
  BigInt q = v;
  for (std::uint64_t i = 2; i <= l && q > 0; ++i) mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), i);
  return q == 0;
}

FactorialSearch least_factorial_witness(const FunctionSystem& fs, std::uint64_t l, std::int64_t horizon,
                                        const FactorialOptions& options) {
  if (l < 2) throw DomainError("l must be >= 2");
  FactorialSearch out;
  out.horizon = horizon;
  const auto found = least_points(fs, horizon, options.eval, [&](const std::vector<BigInt>& values) {
    for (const auto& v : values) {
      if (v <= 1 || !coprime_to_factorial(v, l)) return false;
      if (options.require_below_factorial && !below_factorial(v, l)) return false;
    }
    return true;
  });
  if (found.argument_least) {
    out.argument_least = make_witness(l, found.argument_least->first, found.argument_least->second);
    out.value_least = make_witness(l, found.value_least->first, found.value_least->second);
    out.conclusive = found.value_certified;
  } else if (options.require_below_factorial) {
    const std::int64_t r = factorial_escape(fs, l, options.eval);
    out.conclusive = r >= 0 && r - 1 <= horizon;
  }
  return out;
}

double ProbeReport::prime_fraction() const {
  std::size_t with = 0, prime = 0;
  for (const auto& e : entries) {
    if (!e.point) continue;
    ++with;
    if (e.all_prime) ++prime;
  }
  return with == 0 ? 0.0 : static_cast<double>(prime) / static_cast<double>(with);
}

namespace {

ProbeEntry entry_from(std::uint64_t index, const std::optional<FactorialWitness>& argument,
                      const std::optional<FactorialWitness>& value, bool conclusive) {
  ProbeEntry e;
  e.index = index;
  e.conclusive = conclusive;
  if (value) {
    e.point = value->point;
    e.values = value->values;
    e.all_prime = value->all_prime;
    e.least_value_prime = value->least_value_prime;
    if (argument && argument->point != value->point) e.argument_point = argument->point;
  }
  return e;
}

void summarize(ProbeReport& report) {
  for (const auto& e : report.entries) {
    if (e.point && !e.all_prime) report.violations.push_back(e.index);
  }
  if (report.entries.empty() || !report.entries.back().point) return;
  std::uint64_t r = report.entries.back().index;
  for (auto it = report.entries.rbegin(); it != report.entries.rend() && it->point; ++it) r = it->index;
  report.r_estimate = r;
}

std::int64_t as_index(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

ProbeReport prop3_scan(const NtFunction& f, std::uint64_t m_lo, std::uint64_t m_hi, std::int64_t horizon,
                       unsigned threads, const EvalOptions& options) {
  ProbeReport report;
  report.lo = m_lo;
  report.hi = m_hi;
  report.horizon = horizon;
  const FunctionSystem fs{f};
  report.entries = internal::parallel_chunks<ProbeEntry>(
      as_index(std::max<std::uint64_t>(m_lo, 2)), as_index(m_hi), threads, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<ProbeEntry> local;
        for (std::int64_t m = lo; m <= hi; ++m) {
          const BigInt bm = to_big_signed(m);
          const auto escape = escape_radius(f, BigInt(2), bm, options);
          const std::int64_t radius = escape && *escape - 1 <= horizon ? *escape - 1 : horizon;
          const auto found = least_points(fs, radius, options, [&](const std::vector<BigInt>& values) {
            return values[0] > 1 && in_reduced_residues(values[0], bm);
          });
          std::optional<FactorialWitness> arg, val;
          if (found.argument_least) {
            arg = make_witness(0, found.argument_least->first, found.argument_least->second);
            val = make_witness(0, found.value_least->first, found.value_least->second);
          }
          const bool certified = escape && *escape - 1 <= horizon;
          local.push_back(entry_from(static_cast<std::uint64_t>(m), arg, val, certified || found.value_certified));
        }
        return local;
      });
  summarize(report);
  return report;
}

ProbeReport conjecture3_probe(const FunctionSystem& fs, std::uint64_t l_lo, std::uint64_t l_hi,
                              std::int64_t horizon, unsigned threads, const FactorialOptions& options) {
  ProbeReport report;
  report.lo = l_lo;
  report.hi = l_hi;
  report.horizon = horizon;
  report.entries = internal::parallel_chunks<ProbeEntry>(
      as_index(std::max<std::uint64_t>(l_lo, 2)), as_index(l_hi), threads, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<ProbeEntry> local;
        for (std::int64_t l = lo; l <= hi; ++l) {
          const auto s = least_factorial_witness(fs, static_cast<std::uint64_t>(l), horizon, options);
          local.push_back(entry_from(static_cast<std::uint64_t>(l), s.argument_least, s.value_least, s.conclusive));
        }
        return local;
      });
  summarize(report);
  return report;
}

ModulusProbeReport modulus_probe(const FunctionSystem& fs, std::uint64_t m_lo, std::uint64_t m_hi,
                              std::int64_t horizon, const ModulusHook& hook, unsigned threads,
                              const EvalOptions& options) {
  ModulusProbeReport report;
  report.horizon = horizon;
  report.entries = internal::parallel_chunks<ModulusProbeEntry>(
      as_index(std::max<std::uint64_t>(m_lo, 2)), as_index(m_hi), threads, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<ModulusProbeEntry> local;
        for (std::int64_t m = lo; m <= hi; ++m) {
          ModulusProbeEntry e;
          e.m = static_cast<std::uint64_t>(m);
          e.factorial_index = hook ? hook(e.m) : e.m;
          walk_points(fs.arity(), options.x_min(), horizon, [&](const Point& p) {
            std::vector<BigInt> values;
            for (const auto& f : fs) {
              try {
                values.push_back(evaluate(f, std::span<const std::int64_t>(p), options));
              } catch (const EvaluationBudgetExceeded&) {
                return false;
              }
              const BigInt& v = values.back();
              if (v <= 1 || !coprime_to_factorial(v, e.factorial_index) || !below_factorial(v, e.factorial_index)) {
                return false;
              }
            }
            auto w = make_witness(e.factorial_index, p, std::move(values));
            if (!e.member) e.member = w;
            if (w.all_prime) e.prime = std::move(w);
            return e.prime.has_value();
          });
          local.push_back(std::move(e));
        }
        return local;
      });
  return report;
}

}  // namespace primerep
