#include "primerep/crt_analogy.hpp"

#include <map>
#include <numeric>

#include "internal/scan.hpp"
#include "primerep/error.hpp"

namespace primerep {

namespace {

void require_coprime_moduli(const BigInt& a, const BigInt& b) {
  if (a < 2 || b < 2) throw DomainError("moduli must be >= 2");
  if (!internal::coprime(a, b)) {
    throw ModuliNotCoprime("gcd(" + a.get_str() + ", " + b.get_str() + ") = " + internal::gcd(a, b).get_str());
  }
}

template <class Search>
AnalogyResult combine(const BigInt& a, const BigInt& b, Search&& search) {
  AnalogyResult r;
  r.a = a;
  r.b = b;
  r.side_a = search(a);
  r.side_b = search(b);
  if (r.side_a.status == Status::Fails || r.side_b.status == Status::Fails) {
    r.status = AnalogyStatus::Inapplicable;
    return r;
  }
  if (r.side_a.status == Status::Unknown || r.side_b.status == Status::Unknown) {
    r.status = AnalogyStatus::Unknown;
    return r;
  }
  r.side_ab = search(BigInt(a * b));
  switch (r.side_ab->status) {
    case Status::Holds:
      r.status = AnalogyStatus::Lifts;
      break;
    case Status::Fails:
      r.status = AnalogyStatus::FailsToLift;
      break;
    case Status::Unknown:
      r.status = AnalogyStatus::Unknown;
      break;
  }
  return r;
}

// Prime values of one function inside Z_m^*.
Verdict find_prime_zm_witness(const NtFunction& f, const BigInt& m, std::int64_t box, const EvalOptions& options) {
  const auto escape = escape_radius(f, BigInt(2), m, options);
  const bool certified = escape && *escape - 1 <= box;
  const std::int64_t radius = certified ? *escape - 1 : box;
  const auto found = internal::scan_points(f.arity(), options.x_min(), radius, [&](const Point& p) {
    const BigInt v = evaluate(f, std::span<const std::int64_t>(p), options);
    const bool ok = v > 1 && v < m && internal::coprime(v, m) && is_prime(v);
    return ok ? internal::Decision::Yes : internal::Decision::No;
  });
  Verdict out;
  out.horizon = radius;
  if (found.point) {
    out.status = Status::Holds;
    out.witness = Witness{*found.point, {evaluate(f, std::span<const std::int64_t>(*found.point), options)}, m};
  } else if (certified) {
    out.status = Status::Fails;
    out.obstruction = Obstruction{Obstruction::Kind::ValueEnvelope, *escape};
  }
  return out;
}

}  // namespace

std::string_view to_string(AnalogyStatus s) {
  switch (s) {
    case AnalogyStatus::Lifts:
      return "Lifts";
    case AnalogyStatus::FailsToLift:
      return "FailsToLift";
    case AnalogyStatus::Inapplicable:
      return "Inapplicable";
    case AnalogyStatus::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Verdict find_zm_witness(const FunctionSystem& fs, const BigInt& m, std::int64_t box, const EvalOptions& options) {
  return find_zm_system_witness(fs, m, box, options);
}

AnalogyResult check_crt_analogy(const FunctionSystem& fs, const BigInt& a, const BigInt& b, std::int64_t box,
                                const EvalOptions& options) {
  require_coprime_moduli(a, b);
  return combine(a, b, [&](const BigInt& m) { return find_zm_witness(fs, m, box, options); });
}

NtFunction piecewise_counterexample_function() {
  return parse_function("piecewise(x<=2: 2, x<=39: 3, else: floor(x/3))");
}

AnalogyResult check_piecewise_counterexample() {
  return check_crt_analogy(FunctionSystem{piecewise_counterexample_function()}, BigInt(3), BigInt(4));
}

std::vector<LiftFailure> scan_for_lift_failures(const std::vector<FunctionSystem>& family, std::int64_t limit,
                                                std::int64_t box, unsigned threads, const EvalOptions& options) {
  std::vector<LiftFailure> out;
  for (std::size_t member = 0; member < family.size(); ++member) {
    const auto& fs = family[member];
    auto found = internal::parallel_chunks<LiftFailure>(2, limit, threads, [&](std::int64_t lo, std::int64_t hi) {
      std::map<BigInt, Verdict> memo;
      auto search = [&](const BigInt& m) {
        auto it = memo.find(m);
        if (it == memo.end()) it = memo.emplace(m, find_zm_witness(fs, m, box, options)).first;
        return it->second;
      };
      std::vector<LiftFailure> local;
      for (std::int64_t a = lo; a <= hi; ++a) {
        for (std::int64_t b = a + 1; b <= limit; ++b) {
          if (std::gcd(a, b) != 1) continue;
          auto r = combine(to_big_signed(a), to_big_signed(b), search);
          if (r.status == AnalogyStatus::FailsToLift) local.push_back({member, std::move(r)});
        }
      }
      return local;
    });
    out.insert(out.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
  }
  return out;
}

AnalogyResult prime_witness_lift(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n,
                                 std::int64_t box, const EvalOptions& options) {
  if (b < 1) throw DomainError("the form a + b x needs b >= 1");
  if (!internal::coprime(a, b)) throw NotCoprime("gcd(a, b) must be 1");
  require_coprime_moduli(m, n);
  const NtFunction form(make_binary(NodeKind::Add, make_constant(a),
                                    make_binary(NodeKind::Multiply, make_constant(b), make_variable(1))),
                        1);
  return combine(m, n, [&](const BigInt& mod) { return find_prime_zm_witness(form, mod, box, options); });
}

}  // namespace primerep
