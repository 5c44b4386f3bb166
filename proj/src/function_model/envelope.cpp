#include <algorithm>
#include <numeric>

#include "primerep/error.hpp"
#include "primerep/function_model.hpp"

namespace primerep {

namespace {

constexpr std::int64_t kRadiusCeiling = std::int64_t{1} << 40;
constexpr unsigned long kLowerBoundExponentCap = 4096;

// Result of the structural analysis: f is nondecreasing in every variable on
// the domain and never drops below `lower`.
struct Shape {
  bool constant = false;
  BigInt lower;
};

bool mentions_variable(const Node& n) {
  switch (n.kind) {
    case NodeKind::Constant:
      return false;
    case NodeKind::Variable:
    case NodeKind::Piecewise:
      return true;
    case NodeKind::Negate:
    case NodeKind::FloorDiv:
      return mentions_variable(*n.left);
    default:
      return mentions_variable(*n.left) || mentions_variable(*n.right);
  }
}

std::optional<Shape> shape_of(const Node& n, std::int64_t x_min) {
  switch (n.kind) {
    case NodeKind::Constant:
      return Shape{true, n.value};
    case NodeKind::Variable:
      return Shape{false, to_big_signed(x_min)};
    case NodeKind::Negate: {
      auto a = shape_of(*n.left, x_min);
      if (!a || !a->constant) return std::nullopt;
      return Shape{true, -a->lower};
    }
    case NodeKind::Add: {
      auto a = shape_of(*n.left, x_min);
      auto b = shape_of(*n.right, x_min);
      if (!a || !b) return std::nullopt;
      return Shape{a->constant && b->constant, a->lower + b->lower};
    }
    case NodeKind::Subtract: {
      auto a = shape_of(*n.left, x_min);
      auto b = shape_of(*n.right, x_min);
      if (!a || !b || !b->constant) return std::nullopt;
      return Shape{a->constant, a->lower - b->lower};
    }
    case NodeKind::Multiply: {
      auto a = shape_of(*n.left, x_min);
      auto b = shape_of(*n.right, x_min);
      if (!a || !b) return std::nullopt;
      if (a->constant && b->constant) return Shape{true, a->lower * b->lower};
      if (a->lower < 0 || b->lower < 0) return std::nullopt;
      return Shape{false, a->lower * b->lower};
    }
    case NodeKind::Power: {
      auto a = shape_of(*n.left, x_min);
      auto b = shape_of(*n.right, x_min);
      if (!a || !b || b->lower < 0) return std::nullopt;
      if (a->constant && b->constant) {
        if (!b->lower.fits_ulong_p() || b->lower.get_ui() > kLowerBoundExponentCap) return std::nullopt;
        BigInt v;
        mpz_pow_ui(v.get_mpz_t(), a->lower.get_mpz_t(), b->lower.get_ui());
        return Shape{true, v};
      }
      // base^exp is nondecreasing in both when base >= 1 and exp >= 0, or
      // when the exponent is a fixed constant and the base is non-negative.
      if (!(a->lower >= 1 || (b->constant && a->lower >= 0))) return std::nullopt;
      const unsigned long e =
          b->lower.fits_ulong_p() ? std::min(b->lower.get_ui(), kLowerBoundExponentCap) : kLowerBoundExponentCap;
      BigInt v;
      mpz_pow_ui(v.get_mpz_t(), a->lower.get_mpz_t(), e);
      return Shape{false, v};
    }
    case NodeKind::FloorDiv: {
      auto a = shape_of(*n.left, x_min);
      if (!a) return std::nullopt;
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a->lower.get_mpz_t(), n.value.get_mpz_t());
      return Shape{a->constant, q};
    }
    case NodeKind::Piecewise:
      return std::nullopt;
  }
  return std::nullopt;
}

bool nonnegative_coefficients(const Polynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) {
    const bool constant_term = std::all_of(t.first.begin(), t.first.end(), [](unsigned e) { return e == 0; });
    return constant_term || sgn(t.second) >= 0;
  });
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::int64_t clamp_radius(const BigInt& r, std::int64_t x_min) {
  if (r > kRadiusCeiling) return kRadiusCeiling + 1;
  return std::max<std::int64_t>(x_min, r.get_si());
}

// Cauchy root bound applied to f - c, with c = hi for a positive leading
// coefficient and c = lo for a negative one.
std::optional<std::int64_t> polynomial_radius(const Polynomial& p, const BigInt& lo,
                                              const std::optional<BigInt>& hi, std::int64_t x_min) {
  auto coeffs = p.univariate_coefficients();
  if (coeffs.size() < 2) return std::nullopt;
  const BigInt lead = coeffs.back();
  if (lead > 0) {
    if (!hi) return std::nullopt;
    coeffs[0] -= *hi;
  } else {
    coeffs[0] -= lo;
  }
  BigInt worst = 0;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) worst = std::max(worst, BigInt(abs(coeffs[i])));
  const BigInt r = 1 + ceil_div(worst, abs(lead));
  const std::int64_t out = clamp_radius(r, x_min);
  if (out > kRadiusCeiling) return std::nullopt;
  return out;
}

// f at the corner where coordinate `axis` is r and the rest sit at x_min.
// Values too large to evaluate count as reaching the threshold.
bool corner_reaches(const NtFunction& f, unsigned axis, std::int64_t r, const BigInt& hi, const EvalOptions& options) {
  Point corner(f.arity(), options.x_min());
  corner[axis] = r;
  try {
    return evaluate(f, std::span<const std::int64_t>(corner), options) >= hi;
  } catch (const EvaluationBudgetExceeded&) {
    return bit_length(hi) < options.bit_budget / 2;
  }
}

bool all_corners_reach(const NtFunction& f, std::int64_t r, const BigInt& hi, const EvalOptions& options) {
  for (unsigned i = 0; i < f.arity(); ++i) {
    if (!corner_reaches(f, i, r, hi, options)) return false;
  }
  return true;
}

std::optional<std::int64_t> monotone_radius(const NtFunction& f, const BigInt& hi, const EvalOptions& options) {
  const auto shape = shape_of(f.root(), options.x_min());
  if (!shape || shape->constant) return std::nullopt;
  if (shape->lower >= hi) return options.x_min();
  std::int64_t good = std::max<std::int64_t>(options.x_min(), 1);
  std::int64_t bad = options.x_min() - 1;
  while (!all_corners_reach(f, good, hi, options)) {
    bad = good;
    if (good > kRadiusCeiling / 2) return std::nullopt;
    good *= 2;
  }
  while (good - bad > 1) {
    const std::int64_t mid = bad + (good - bad) / 2;
    if (all_corners_reach(f, mid, hi, options)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

std::optional<std::int64_t> radius_of(const NtFunction& f, const BigInt& lo, const std::optional<BigInt>& hi,
                                      const EvalOptions& options) {
  std::optional<std::int64_t> best;
  auto consider = [&best](std::optional<std::int64_t> r) {
    if (r && (!best || *r < *best)) best = r;
  };
  const auto& root = f.root();
  if (f.arity() == 1 && root.kind == NodeKind::Piecewise) {
    // Only the else branch matters past the last guard.
    const BigInt start = root.branches.back().upper + 1;
    if (start > kRadiusCeiling) return std::nullopt;
    const NtFunction tail(root.otherwise, 1);
    auto r = radius_of(tail, lo, hi, options);
    if (!r) return std::nullopt;
    return std::max<std::int64_t>(*r, std::max<std::int64_t>(start.get_si(), options.x_min()));
  }
  if (f.arity() == 1) {
    if (auto poly = expand(f); poly && !poly->is_zero()) consider(polynomial_radius(*poly, lo, hi, options.x_min()));
  }
  if (hi) consider(monotone_radius(f, *hi, options));
  return best;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

struct PeriodParts {
  bool plain_variable = false;  // x occurs outside exponents
  bool exponential = false;     // some b^g(x) with variable g
};

std::optional<PeriodParts> period_parts(const Node& n, const BigInt& m) {
  switch (n.kind) {
    case NodeKind::Constant:
      return PeriodParts{};
    case NodeKind::Variable:
      return PeriodParts{true, false};
    case NodeKind::Negate:
      return period_parts(*n.left, m);
    case NodeKind::Add:
    case NodeKind::Subtract:
    case NodeKind::Multiply: {
      auto a = period_parts(*n.left, m);
      auto b = period_parts(*n.right, m);
      if (!a || !b) return std::nullopt;
      return PeriodParts{a->plain_variable || b->plain_variable, a->exponential || b->exponential};
    }
    case NodeKind::Power: {
      if (!mentions_variable(*n.right)) {
        auto base = period_parts(*n.left, m);
        return base;
      }
      if (mentions_variable(*n.left) || n.left->kind == NodeKind::Piecewise) return std::nullopt;
      const NtFunction base(n.left, 1);
      const NtFunction exponent(n.right, 1);
      const auto b = expand(base);
      if (!b || !expand(exponent)) return std::nullopt;
      const BigInt bv = b->evaluate(std::vector<BigInt>{BigInt(0)});
      BigInt g;
      mpz_gcd(g.get_mpz_t(), bv.get_mpz_t(), m.get_mpz_t());
      if (g != 1) return std::nullopt;
      return PeriodParts{false, true};
    }
    case NodeKind::FloorDiv:
    case NodeKind::Piecewise:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

bool is_monotone_nondecreasing(const NtFunction& f, const EvalOptions& options) {
  if (auto poly = expand(f)) {
    if (nonnegative_coefficients(*poly)) return true;
  }
  return shape_of(f.root(), options.x_min()).has_value();
}

std::optional<std::int64_t> escape_radius(const NtFunction& f, const BigInt& lo, const std::optional<BigInt>& hi,
                                          const EvalOptions& options) {
  return radius_of(f, lo, hi, options);
}

std::optional<BigInt> residue_period(const NtFunction& f, const BigInt& m) {
  if (f.arity() != 1 || m < 1) return std::nullopt;
  const auto parts = period_parts(f.root(), m);
  if (!parts) return std::nullopt;
  BigInt period = 1;
  if (parts->plain_variable) period = lcm(period, m);
  if (parts->exponential && m > 1) period = lcm(period, carmichael_lambda(m));
  return period;
}

std::int64_t max_norm(std::span<const std::int64_t> point) {
  return point.empty() ? 0 : *std::max_element(point.begin(), point.end());
}

Point first_point(unsigned arity, std::int64_t x_min) { return Point(arity, x_min); }

void advance_point(Point& p, std::int64_t x_min) {
  const std::int64_t n = max_norm(p);
  const std::size_t k = p.size();
  for (std::size_t i = k; i-- > 0;) {
    const std::int64_t v = p[i] + 1;
    if (v > n) continue;
    bool prefix_has_n = v == n;
    for (std::size_t j = 0; j < i && !prefix_has_n; ++j) prefix_has_n = p[j] == n;
    if (i + 1 == k) {
      p[i] = prefix_has_n ? v : n;
      return;
    }
    p[i] = v;
    std::fill(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, p.end(), x_min);
    if (!prefix_has_n) p.back() = n;
    return;
  }
  std::fill(p.begin(), p.end(), x_min);
  p.back() = n + 1;
}

bool point_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  const auto na = max_norm(a);
  const auto nb = max_norm(b);
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace primerep
