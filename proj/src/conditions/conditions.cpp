#include "primerep/conditions.hpp"

#include <algorithm>

#include "internal/scan.hpp"
#include "primerep/error.hpp"

namespace primerep {

using internal::Decision;

namespace {

Witness make_witness(const FunctionSystem& fs, const Point& p, const BigInt& m, const EvalOptions& options) {
  Witness w{p, {}, m};
  for (const auto& f : fs) w.values.push_back(evaluate(f, std::span<const std::int64_t>(p), options));
  return w;
}

Witness make_witness(const NtFunction& f, const Point& p, const BigInt& m, const EvalOptions& options) {
  Witness w{p, {}, m};
  try {
    w.values.push_back(evaluate(f, std::span<const std::int64_t>(p), options));
  } catch (const EvaluationBudgetExceeded&) {
    // Too large to record; the residue still certifies the witness.
    w.values.push_back(evaluate_mod(f, std::span<const std::int64_t>(p), m, options));
  }
  return w;
}

Verdict holds(Witness w, std::int64_t horizon) {
  Verdict v;
  v.status = Status::Holds;
  v.witness = std::move(w);
  v.horizon = horizon;
  return v;
}

Verdict fails(Obstruction::Kind kind, BigInt value, std::int64_t horizon) {
  Verdict v;
  v.status = Status::Fails;
  v.obstruction = Obstruction{kind, std::move(value)};
  v.horizon = horizon;
  return v;
}

Verdict unknown(std::int64_t horizon) {
  Verdict v;
  v.horizon = horizon;
  return v;
}

bool coefficients_divisible(const Polynomial& poly, const BigInt& p) {
  return std::all_of(poly.terms().begin(), poly.terms().end(),
                     [&](const auto& t) { return mpz_divisible_p(t.second.get_mpz_t(), p.get_mpz_t()) != 0; });
}

unsigned max_variable_degree(const FunctionProfile& profile) {
  unsigned d = 0;
  for (auto v : profile.variable_degrees) d = std::max(d, v);
  return d;
}

// Scan radius that keeps the search inside the horizon and, when a
// certificate says nothing qualifies from `escape` on, inside that too.
struct Bounds {
  std::int64_t radius;
  bool certified;  // exhausting the radius proves absence
};

Bounds bounds_for(std::int64_t horizon, std::optional<std::int64_t> escape) {
  if (escape && *escape - 1 <= horizon) return {*escape - 1, true};
  return {horizon, false};
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "Holds";
    case Status::Fails:
      return "Fails";
    case Status::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(WitnessMode mode) {
  switch (mode) {
    case WitnessMode::E:
      return "E";
    case WitnessMode::F:
      return "F";
    case WitnessMode::G:
      return "G";
    case WitnessMode::Zm:
      return "Zm";
  }
  return "E";
}

std::int64_t default_horizon(unsigned arity) { return arity == 1 ? kDefaultHorizon : kDefaultBoxSide; }

bool in_reduced_residues(const BigInt& v, const BigInt& m) { return v >= 1 && v < m && internal::coprime(v, m); }

ValueFacts value_facts(const NtFunction& f, const Point& point, const BigInt& m, const EvalOptions& options) {
  ValueFacts out;
  const std::span<const std::int64_t> p(point);
  try {
    out.exact = evaluate(f, p, options);
    out.residue = internal::mod(*out.exact, m);
  } catch (const EvaluationBudgetExceeded&) {
    out.residue = evaluate_mod(f, p, m, options);
    out.huge_positive = internal::analyze(f, options)->monotone;
  }
  return out;
}

// ---------------------------------------------------------------------------
// D
// ---------------------------------------------------------------------------

Verdict check_condition_D_at(const NtFunction& f, std::uint64_t p, std::int64_t horizon, const EvalOptions& options) {
  if (!is_prime(p)) throw DomainError("condition D is checked at primes only");
  const auto info = internal::analyze(f, options);
  const BigInt bp = to_big(p);
  const std::int64_t x_min = options.x_min();
  auto nonzero = [&](const Point& pt) {
    return sgn(evaluate_mod(f, std::span<const std::int64_t>(pt), bp, options)) != 0 ? Decision::Yes : Decision::No;
  };

  if (info->profile.is_polynomial) {
    // Residues x_min .. x_min + p - 1 cover every class.
    const std::int64_t radius = x_min + static_cast<std::int64_t>(p) - 1;
    if (f.arity() > 1 && p > max_variable_degree(info->profile) && coefficients_divisible(*info->poly, bp)) {
      return fails(Obstruction::Kind::Divisor, bp, radius);
    }
    const auto found = internal::scan_points(f.arity(), x_min, radius, nonzero);
    if (found.point) return holds(make_witness(f, *found.point, bp, options), radius);
    return fails(Obstruction::Kind::Divisor, bp, radius);
  }

  Bounds b{horizon, false};
  if (f.arity() == 1) {
    if (auto period = residue_period(f, bp); period && *period <= horizon) {
      b = {x_min + period->get_si() - 1, true};
    }
  }
  const auto found = internal::scan_points(f.arity(), x_min, b.radius, nonzero);
  if (found.point) return holds(make_witness(f, *found.point, bp, options), b.radius);
  if (b.certified) return fails(Obstruction::Kind::Divisor, bp, b.radius);
  return unknown(b.radius);
}

std::vector<std::pair<std::uint64_t, Verdict>> check_condition_D(const NtFunction& f, std::uint64_t prime_bound,
                                                                 std::int64_t horizon, const EvalOptions& options) {
  std::vector<std::pair<std::uint64_t, Verdict>> out;
  for (auto p : sieve_primes(prime_bound)) out.emplace_back(p, check_condition_D_at(f, p, horizon, options));
  return out;
}

// ---------------------------------------------------------------------------
// B and C
// ---------------------------------------------------------------------------

namespace {

Decision coprime_at(const NtFunction& f, const Point& pt, const BigInt& m, const EvalOptions& options) {
  const BigInt r = evaluate_mod(f, std::span<const std::int64_t>(pt), m, options);
  return internal::coprime(r, m) ? Decision::Yes : Decision::No;
}

// CRT point for per-prime residue witnesses, coordinate by coordinate.
std::optional<Point> crt_point(const std::vector<std::pair<BigInt, Point>>& residues, unsigned arity,
                               std::int64_t x_min) {
  Point out(arity);
  for (unsigned i = 0; i < arity; ++i) {
    CongruenceSystem sys;
    for (const auto& [p, pt] : residues) sys.push_back({to_big_signed(pt[i]), p});
    const auto sol = crt_solve(sys);
    BigInt x = sol.residue;
    while (x < x_min) x += sol.modulus;
    const auto v = to_i64(x);
    if (!v) return std::nullopt;
    out[i] = *v;
  }
  return out;
}

}  // namespace

Verdict check_condition_B(const NtFunction& f, const BigInt& m, std::int64_t horizon, const EvalOptions& options) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  const auto info = internal::analyze(f, options);
  const auto primes = internal::distinct_primes(m);
  const std::int64_t x_min = options.x_min();
  auto pred = [&](const Point& pt) { return coprime_at(f, pt, m, options); };

  if (info->profile.is_polynomial) {
    std::vector<std::pair<BigInt, Point>> residues;
    for (const auto& p : primes) {
      const auto u = to_u64(p);
      if (!u) throw DomainError("prime factor too large for a residue scan");
      const Verdict d = check_condition_D_at(f, *u, horizon, options);
      if (d.status == Status::Fails) return fails(Obstruction::Kind::Divisor, p, d.horizon);
      residues.emplace_back(p, d.witness->point);
    }
    const auto joined = crt_point(residues, f.arity(), x_min);
    const std::int64_t radius = joined ? max_norm(*joined) : horizon;
    const auto least = internal::scan_points(f.arity(), x_min, radius, pred);
    if (least.point) return holds(make_witness(f, *least.point, m, options), radius);
    if (!joined) return unknown(radius);
    // The CRT point is a witness by construction; reaching here means the
    // scan above already visited it.
    throw Error("CRT witness failed to recheck");
  }

  Bounds b{horizon, false};
  if (f.arity() == 1) {
    BigInt rad = 1;
    for (const auto& p : primes) rad *= p;
    if (auto period = residue_period(f, rad); period && *period <= horizon) {
      b = {x_min + period->get_si() - 1, true};
    }
  }
  const auto found = internal::scan_points(f.arity(), x_min, b.radius, pred);
  if (found.point) return holds(make_witness(f, *found.point, m, options), b.radius);
  if (!b.certified) return unknown(b.radius);
  for (const auto& p : primes) {
    const auto u = to_u64(p);
    if (!u) continue;
    const Verdict d = check_condition_D_at(f, *u, horizon, options);
    if (d.status == Status::Fails) return fails(Obstruction::Kind::Divisor, p, b.radius);
  }
  return fails(Obstruction::Kind::Divisor, m, b.radius);
}

Verdict check_condition_C(const NtFunction& f, const BigInt& m, std::int64_t horizon, const EvalOptions& options) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  const auto info = internal::analyze(f, options);
  if (!info->profile.is_polynomial) return check_condition_B(f, m, horizon, options);
  const BigInt& fd = *info->profile.fixed_divisor;
  const BigInt g = sgn(fd) == 0 ? m : internal::gcd(fd, m);
  if (g > 1) return fails(Obstruction::Kind::Divisor, g, horizon);
  // A point with gcd(f, m) = 1 shows that no divisor of m divides every value.
  Verdict b = check_condition_B(f, m, horizon, options);
  if (b.status == Status::Holds) return b;
  return unknown(horizon);
}

// ---------------------------------------------------------------------------
// E, F, G, Zm
// ---------------------------------------------------------------------------

Verdict find_value_witness(const NtFunction& f, const BigInt& m, WitnessMode mode, std::int64_t horizon,
                           const EvalOptions& options) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (mode == WitnessMode::G && !primality(m).prime) throw GRequiresPrime("mode G needs a prime modulus");
  const auto info = internal::analyze(f, options);
  const std::int64_t x_min = options.x_min();

  if (info->profile.is_polynomial) {
    const BigInt& fd = *info->profile.fixed_divisor;
    if (mode == WitnessMode::F) {
      if (sgn(fd) == 0 || mpz_divisible_p(fd.get_mpz_t(), m.get_mpz_t())) {
        return fails(Obstruction::Kind::Divisor, m, horizon);
      }
    } else {
      const BigInt g = sgn(fd) == 0 ? m : internal::gcd(fd, m);
      if (g > 1) return fails(Obstruction::Kind::Divisor, g, horizon);
    }
  }

  const BigInt two = 2;
  const auto escape = mode == WitnessMode::Zm ? escape_radius(f, two, m, options)
                                              : escape_radius(f, two, std::nullopt, options);
  const Bounds b = bounds_for(horizon, escape);

  auto pred = [&](const Point& pt) {
    const ValueFacts v = value_facts(f, pt, m, options);
    switch (mode) {
      case WitnessMode::Zm:
        if (!v.exact) return Decision::No;
        return (*v.exact > 1 && *v.exact < m && internal::coprime(v.residue, m)) ? Decision::Yes : Decision::No;
      case WitnessMode::F:
        if (!v.sign_known()) return Decision::Undecided;
        return (v.exceeds(1) && sgn(v.residue) != 0) ? Decision::Yes : Decision::No;
      default:
        if (!v.sign_known()) return Decision::Undecided;
        return (v.exceeds(1) && internal::coprime(v.residue, m)) ? Decision::Yes : Decision::No;
    }
  };
  const auto found = internal::scan_points(f.arity(), x_min, b.radius, pred);
  if (found.point) return holds(make_witness(f, *found.point, m, options), b.radius);
  if (b.certified && !found.undecided) return fails(Obstruction::Kind::ValueEnvelope, *escape, b.radius);
  if (mode == WitnessMode::E || mode == WitnessMode::G) {
    const Verdict bv = check_condition_B(f, m, horizon, options);
    if (bv.status == Status::Fails) {
      Verdict out = bv;
      out.horizon = b.radius;
      return out;
    }
  }
  return unknown(b.radius);
}

Verdict find_zm_system_witness(const FunctionSystem& fs, const BigInt& m, std::int64_t horizon,
                               const EvalOptions& options) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  std::optional<std::int64_t> escape;
  for (const auto& f : fs) {
    const auto r = escape_radius(f, BigInt(2), m, options);
    if (r && (!escape || *r < *escape)) escape = r;
  }
  const Bounds b = bounds_for(horizon, escape);
  auto pred = [&](const Point& pt) {
    for (const auto& f : fs) {
      const ValueFacts v = value_facts(f, pt, m, options);
      if (!v.exact || *v.exact <= 1 || *v.exact >= m || !internal::coprime(v.residue, m)) return Decision::No;
    }
    return Decision::Yes;
  };
  const auto found = internal::scan_points(fs.arity(), options.x_min(), b.radius, pred);
  if (found.point) return holds(make_witness(fs, *found.point, m, options), b.radius);
  if (b.certified) return fails(Obstruction::Kind::ValueEnvelope, *escape, b.radius);
  return unknown(b.radius);
}

// ---------------------------------------------------------------------------
// A and H
// ---------------------------------------------------------------------------

namespace {

CoprimeSequence greedy_sequence(const FunctionSystem& fs, std::size_t count, std::int64_t horizon,
                                const EvalOptions& options) {
  CoprimeSequence seq;
  std::optional<std::int64_t> escape;
  for (const auto& f : fs) {
    const auto r = escape_radius(f, BigInt(2), std::nullopt, options);
    if (r && (!escape || *r < *escape)) escape = r;
  }
  const Bounds b = bounds_for(horizon, escape);
  seq.horizon = b.radius;
  if (count == 0) return seq;
  BigInt product = 1;
  bool undecided = false;
  walk_points(fs.arity(), options.x_min(), b.radius, [&](const Point& pt) {
    BigInt value = 1;
    for (const auto& f : fs) {
      BigInt v;
      try {
        v = evaluate(f, std::span<const std::int64_t>(pt), options);
      } catch (const EvaluationBudgetExceeded&) {
        undecided = true;
        return false;
      }
      if (v <= 1) return false;
      value *= v;
    }
    if (!internal::coprime(value, product)) return false;
    product *= value;
    seq.entries.push_back({pt, value});
    return seq.entries.size() >= count;
  });
  seq.exhausted = seq.entries.size() < count && b.certified && !undecided;
  return seq;
}

}  // namespace

CoprimeSequence generate_coprime_sequence(const NtFunction& f, std::size_t count, std::int64_t horizon,
                                          const EvalOptions& options) {
  return greedy_sequence(FunctionSystem{f}, count, horizon, options);
}

CoprimeSequence generate_coprime_sequence(const FunctionSystem& fs, std::size_t count, std::int64_t horizon,
                                          const EvalOptions& options) {
  return greedy_sequence(fs, count, horizon, options);
}

// ---------------------------------------------------------------------------
// I
// ---------------------------------------------------------------------------

Verdict check_system_conditions(const FunctionSystem& fs, const BigInt& m, std::int64_t horizon,
                                const EvalOptions& options) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  const NtFunction product = internal::product_function(fs);
  if (internal::analyze(product, options)->profile.is_polynomial) {
    for (const auto& p : internal::distinct_primes(m)) {
      const auto u = to_u64(p);
      if (!u) continue;
      const Verdict d = check_condition_D_at(product, *u, horizon, options);
      if (d.status == Status::Fails) return fails(Obstruction::Kind::Divisor, p, horizon);
    }
  }
  std::optional<std::int64_t> escape;
  for (const auto& f : fs) {
    const auto r = escape_radius(f, BigInt(2), std::nullopt, options);
    if (r && (!escape || *r < *escape)) escape = r;
  }
  const Bounds b = bounds_for(horizon, escape);
  auto pred = [&](const Point& pt) {
    BigInt residue = 1;
    for (const auto& f : fs) {
      const ValueFacts v = value_facts(f, pt, m, options);
      if (!v.sign_known()) return Decision::Undecided;
      if (!v.exceeds(1)) return Decision::No;
      residue = internal::mod(residue * v.residue, m);
    }
    return internal::coprime(residue, m) ? Decision::Yes : Decision::No;
  };
  const auto found = internal::scan_points(fs.arity(), options.x_min(), b.radius, pred);
  if (found.point) return holds(make_witness(fs, *found.point, m, options), b.radius);
  if (b.certified && !found.undecided) return fails(Obstruction::Kind::ValueEnvelope, *escape, b.radius);
  return unknown(b.radius);
}

ConditionReport check_conditions(const NtFunction& f, const BigInt& m, std::int64_t horizon,
                                 const EvalOptions& options) {
  ConditionReport r;
  r.modulus = m;
  r.a_requested = omega(m) + 1;
  r.a = generate_coprime_sequence(f, r.a_requested, horizon, options);
  r.b = check_condition_B(f, m, horizon, options);
  r.c = check_condition_C(f, m, horizon, options);
  r.e = find_value_witness(f, m, WitnessMode::E, horizon, options);
  r.f = find_value_witness(f, m, WitnessMode::F, horizon, options);
  for (const auto& p : internal::distinct_primes(m)) {
    const auto u = to_u64(p);
    if (!u) continue;
    r.d.emplace_back(*u, check_condition_D_at(f, *u, horizon, options));
    r.g.emplace_back(*u, find_value_witness(f, p, WitnessMode::G, horizon, options));
  }
  return r;
}

SystemConditionReport check_conditions(const FunctionSystem& fs, const BigInt& m, std::int64_t horizon,
                                       const EvalOptions& options) {
  SystemConditionReport r;
  r.modulus = m;
  r.h_requested = omega(m) + 1;
  r.h = generate_coprime_sequence(fs, r.h_requested, horizon, options);
  r.i = check_system_conditions(fs, m, horizon, options);
  return r;
}

}  // namespace primerep
