#include "primerep/error.hpp"
#include "primerep/function_model.hpp"

namespace primerep {

namespace {

bool has_variable(const Node& n) {
  switch (n.kind) {
    case NodeKind::Constant:
      return false;
    case NodeKind::Variable:
    case NodeKind::Piecewise:
      return true;
    case NodeKind::Negate:
    case NodeKind::FloorDiv:
      return has_variable(*n.left);
    default:
      return has_variable(*n.left) || has_variable(*n.right);
  }
}

template <class Coord>
void check_point(const NtFunction& f, std::span<const Coord> point, const EvalOptions& options) {
  if (point.size() != f.arity()) {
    throw ArityError("point has " + std::to_string(point.size()) + " coordinates, function arity is " +
                     std::to_string(f.arity()));
  }
  for (const auto& c : point) {
    if (c < options.x_min()) {
      throw DomainError(options.allow_zero ? "coordinates must be non-negative" : "coordinates must be >= 1");
    }
  }
}

const NodePtr& select_branch(const Node& n, const BigInt& guard_value) {
  for (const auto& b : n.branches) {
    if (guard_value <= b.upper) return b.body;
  }
  return n.otherwise;
}

// Exact evaluation over BigInt coordinates.
struct BigEvaluator {
  std::span<const BigInt> point;
  const EvalOptions& options;

  void check_bits(const BigInt& v) const {
    if (bit_length(v) > options.bit_budget) {
      throw EvaluationBudgetExceeded("value exceeds the bit budget of " + std::to_string(options.bit_budget));
    }
  }

  BigInt power(const BigInt& base, const BigInt& exponent, bool variable_exponent) const {
    if (sgn(exponent) < 0) throw DomainError("negative exponent");
    if (variable_exponent && base < 1) throw DomainError("a variable exponent needs base >= 1");
    if (base == 0) return exponent == 0 ? BigInt(1) : BigInt(0);
    if (base == 1) return 1;
    if (base == -1) return mpz_even_p(exponent.get_mpz_t()) ? BigInt(1) : BigInt(-1);
    const std::size_t base_bits = bit_length(base);
    if (bit_length(exponent) > 40 || (base_bits - 1) * exponent.get_ui() >= options.bit_budget) {
      throw EvaluationBudgetExceeded("power exceeds the bit budget of " + std::to_string(options.bit_budget));
    }
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    check_bits(out);
    return out;
  }

  BigInt eval(const Node& n) const {
    switch (n.kind) {
      case NodeKind::Constant:
        return n.value;
      case NodeKind::Variable:
        return point[n.variable - 1];
      case NodeKind::Negate:
        return -eval(*n.left);
      case NodeKind::Add:
        return eval(*n.left) + eval(*n.right);
      case NodeKind::Subtract:
        return eval(*n.left) - eval(*n.right);
      case NodeKind::Multiply: {
        BigInt a = eval(*n.left);
        BigInt b = eval(*n.right);
        if (bit_length(a) + bit_length(b) > options.bit_budget + 1) {
          throw EvaluationBudgetExceeded("product exceeds the bit budget");
        }
        return a * b;
      }
      case NodeKind::Power:
        return power(eval(*n.left), eval(*n.right), has_variable(*n.right));
      case NodeKind::FloorDiv: {
        BigInt q;
        BigInt a = eval(*n.left);
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), n.value.get_mpz_t());
        return q;
      }
      case NodeKind::Piecewise:
        return eval(*select_branch(n, point[n.variable - 1]));
    }
    return 0;
  }
};

// Residues modulo an arbitrary positive modulus.
struct ModEvaluator {
  std::span<const BigInt> point;
  const EvalOptions& options;

  static BigInt reduce(const BigInt& v, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
  }

  BigInt eval(const Node& n, const BigInt& m) const {
    switch (n.kind) {
      case NodeKind::Constant:
        return reduce(n.value, m);
      case NodeKind::Variable:
        return reduce(point[n.variable - 1], m);
      case NodeKind::Negate:
        return reduce(-eval(*n.left, m), m);
      case NodeKind::Add:
        return reduce(eval(*n.left, m) + eval(*n.right, m), m);
      case NodeKind::Subtract:
        return reduce(eval(*n.left, m) - eval(*n.right, m), m);
      case NodeKind::Multiply:
        return reduce(eval(*n.left, m) * eval(*n.right, m), m);
      case NodeKind::Power: {
        const BigInt exponent = BigEvaluator{point, options}.eval(*n.right);
        if (sgn(exponent) < 0) throw DomainError("negative exponent");
        if (has_variable(*n.right)) {
          const BigInt base = BigEvaluator{point, options}.eval(*n.left);
          if (base < 1) throw DomainError("a variable exponent needs base >= 1");
        }
        BigInt out;
        BigInt base = eval(*n.left, m);
        mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
        return out;
      }
      case NodeKind::FloorDiv: {
        // floor(a / c) mod m only depends on a mod c*m
        const BigInt wide = n.value * m;
        const BigInt r = eval(*n.left, wide);
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), r.get_mpz_t(), n.value.get_mpz_t());
        return reduce(q, m);
      }
      case NodeKind::Piecewise:
        return eval(*select_branch(n, point[n.variable - 1]), m);
    }
    return 0;
  }
};

// Checked 64-bit evaluation; nullopt as soon as anything overflows.
struct SmallEvaluator {
  std::span<const std::int64_t> point;

  std::optional<std::int64_t> eval(const Node& n) const {
    switch (n.kind) {
      case NodeKind::Constant:
        return to_i64(n.value);
      case NodeKind::Variable:
        return point[n.variable - 1];
      case NodeKind::Negate: {
        auto a = eval(*n.left);
        if (!a || *a == INT64_MIN) return std::nullopt;
        return -*a;
      }
      case NodeKind::Add:
      case NodeKind::Subtract:
      case NodeKind::Multiply: {
        auto a = eval(*n.left);
        if (!a) return std::nullopt;
        auto b = eval(*n.right);
        if (!b) return std::nullopt;
        std::int64_t out = 0;
        bool overflow = n.kind == NodeKind::Add        ? __builtin_add_overflow(*a, *b, &out)
                        : n.kind == NodeKind::Subtract ? __builtin_sub_overflow(*a, *b, &out)
                                                       : __builtin_mul_overflow(*a, *b, &out);
        if (overflow) return std::nullopt;
        return out;
      }
      case NodeKind::Power: {
        auto base = eval(*n.left);
        if (!base) return std::nullopt;
        auto exponent = eval(*n.right);
        if (!exponent) return std::nullopt;
        if (*exponent < 0) throw DomainError("negative exponent");
        if (*base < 1 && has_variable(*n.right)) throw DomainError("a variable exponent needs base >= 1");
        std::int64_t result = 1;
        std::int64_t b = *base;
        std::int64_t e = *exponent;
        if (b == 0) return e == 0 ? 1 : 0;
        if (b == 1) return 1;
        if (b == -1) return e % 2 == 0 ? 1 : -1;
        while (e > 0) {
          if (e & 1) {
            if (__builtin_mul_overflow(result, b, &result)) return std::nullopt;
          }
          e >>= 1;
          if (e > 0 && __builtin_mul_overflow(b, b, &b)) return std::nullopt;
        }
        return result;
      }
      case NodeKind::FloorDiv: {
        auto a = eval(*n.left);
        auto c = to_i64(n.value);
        if (!a || !c) return std::nullopt;
        std::int64_t q = *a / *c;
        if ((*a % *c != 0) && (*a < 0)) --q;
        return q;
      }
      case NodeKind::Piecewise: {
        const std::int64_t guard = point[n.variable - 1];
        for (const auto& b : n.branches) {
          const auto upper = to_i64(b.upper);
          if (upper ? guard <= *upper : sgn(b.upper) > 0) return eval(*b.body);
        }
        return eval(*n.otherwise);
      }
    }
    return std::nullopt;
  }
};

std::vector<BigInt> widen(std::span<const std::int64_t> point) {
  std::vector<BigInt> out;
  out.reserve(point.size());
  for (auto c : point) out.push_back(to_big_signed(c));
  return out;
}

}  // namespace

BigInt evaluate(const NtFunction& f, std::span<const BigInt> point, const EvalOptions& options) {
  check_point(f, point, options);
  return BigEvaluator{point, options}.eval(f.root());
}

BigInt evaluate(const NtFunction& f, std::span<const std::int64_t> point, const EvalOptions& options) {
  check_point(f, point, options);
  if (auto small = SmallEvaluator{point}.eval(f.root())) return to_big_signed(*small);
  const auto wide = widen(point);
  return BigEvaluator{wide, options}.eval(f.root());
}

std::optional<std::int64_t> evaluate_small(const NtFunction& f, std::span<const std::int64_t> point,
                                           const EvalOptions& options) {
  check_point(f, point, options);
  return SmallEvaluator{point}.eval(f.root());
}

BigInt evaluate_mod(const NtFunction& f, std::span<const BigInt> point, const BigInt& m,
                    const EvalOptions& options) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  check_point(f, point, options);
  return ModEvaluator{point, options}.eval(f.root(), m);
}

BigInt evaluate_mod(const NtFunction& f, std::span<const std::int64_t> point, const BigInt& m,
                    const EvalOptions& options) {
  const auto wide = widen(point);
  return evaluate_mod(f, std::span<const BigInt>(wide), m, options);
}

}  // namespace primerep
