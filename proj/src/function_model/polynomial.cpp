#include <algorithm>
#include <numeric>

#include "primerep/error.hpp"
#include "primerep/function_model.hpp"

namespace primerep {

namespace {

constexpr unsigned kMaxExpandedDegree = 4096;

std::optional<BigInt> constant_value(const Node& n) {
  switch (n.kind) {
    case NodeKind::Constant:
      return n.value;
    case NodeKind::Negate: {
      auto a = constant_value(*n.left);
      if (!a) return std::nullopt;
      return BigInt(-*a);
    }
    case NodeKind::Add:
    case NodeKind::Subtract:
    case NodeKind::Multiply: {
      auto a = constant_value(*n.left);
      auto b = constant_value(*n.right);
      if (!a || !b) return std::nullopt;
      if (n.kind == NodeKind::Add) return BigInt(*a + *b);
      if (n.kind == NodeKind::Subtract) return BigInt(*a - *b);
      return BigInt(*a * *b);
    }
    case NodeKind::Power: {
      auto a = constant_value(*n.left);
      auto b = constant_value(*n.right);
      if (!a || !b || sgn(*b) < 0 || !b->fits_ulong_p() || b->get_ui() > kMaxExpandedDegree) return std::nullopt;
      BigInt out;
      mpz_pow_ui(out.get_mpz_t(), a->get_mpz_t(), b->get_ui());
      return out;
    }
    default:
      return std::nullopt;
  }
}

std::optional<Polynomial> expand_node(const Node& n, unsigned vars) {
  switch (n.kind) {
    case NodeKind::Constant:
      return Polynomial::constant(vars, n.value);
    case NodeKind::Variable:
      return Polynomial::variable(vars, n.variable);
    case NodeKind::Negate: {
      auto a = expand_node(*n.left, vars);
      if (!a) return std::nullopt;
      return -*a;
    }
    case NodeKind::Add:
    case NodeKind::Subtract:
    case NodeKind::Multiply: {
      auto a = expand_node(*n.left, vars);
      if (!a) return std::nullopt;
      auto b = expand_node(*n.right, vars);
      if (!b) return std::nullopt;
      if (n.kind == NodeKind::Add) return *a + *b;
      if (n.kind == NodeKind::Subtract) return *a - *b;
      if (a->total_degree() + b->total_degree() > kMaxExpandedDegree) return std::nullopt;
      return *a * *b;
    }
    case NodeKind::Power: {
      auto e = constant_value(*n.right);
      if (!e || sgn(*e) < 0 || e->get_ui() > kMaxExpandedDegree) return std::nullopt;
      auto base = expand_node(*n.left, vars);
      if (!base) return std::nullopt;
      if (static_cast<unsigned long>(base->total_degree()) * e->get_ui() > kMaxExpandedDegree) return std::nullopt;
      return base->pow(static_cast<unsigned>(e->get_ui()));
    }
    case NodeKind::FloorDiv:
    case NodeKind::Piecewise:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Polynomial Polynomial::constant(unsigned variables, const BigInt& c) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(unsigned variables, unsigned index) {
  Polynomial p(variables);
  Exponents e(variables, 0);
  e[index - 1] = 1;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out(variables_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(variables_);
      for (unsigned i = 0; i < variables_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

std::vector<unsigned> Polynomial::variable_degrees() const {
  std::vector<unsigned> d(variables_, 0);
  for (const auto& [e, c] : terms_) {
    for (unsigned i = 0; i < variables_; ++i) d[i] = std::max(d[i], e[i]);
  }
  return d;
}

std::vector<BigInt> Polynomial::univariate_coefficients() const {
  if (variables_ != 1) throw NotUnivariatePolynomial("polynomial has more than one variable");
  std::vector<BigInt> out(total_degree() + 1, 0);
  for (const auto& [e, c] : terms_) out[e[0]] = c;
  return out;
}

BigInt Polynomial::evaluate(std::span<const BigInt> point) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (unsigned i = 0; i < variables_; ++i) {
      if (e[i] == 0) continue;
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), point[i].get_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

std::optional<Polynomial> expand(const NtFunction& f) { return expand_node(f.root(), f.arity()); }

FunctionProfile classify(const NtFunction& f) {
  FunctionProfile profile;
  profile.arity = f.arity();
  auto poly = expand(f);
  if (!poly) return profile;
  profile.is_polynomial = true;
  profile.degree = poly->total_degree();
  profile.variable_degrees = poly->variable_degrees();
  if (f.arity() == 1 && !poly->is_zero()) {
    profile.leading_coefficient = poly->univariate_coefficients().back();
  }
  const auto fd = fixed_divisor(f, profile);
  profile.fixed_divisor = fd.value;
  profile.vanishes_on_grid = fd.identically_vanishing;
  return profile;
}

FixedDivisor fixed_divisor(const NtFunction& f, const FunctionProfile& profile) {
  if (!profile.is_polynomial) throw NotPolynomial("fixed divisor is defined for polynomials only");
  const auto poly = expand(f);
  BigInt g = 0;
  // Walk the grid [0, d_1] x ... x [0, d_k].
  const auto& degrees = profile.variable_degrees;
  std::vector<BigInt> point(f.arity(), 0);
  std::vector<unsigned> index(f.arity(), 0);
  for (;;) {
    for (unsigned i = 0; i < f.arity(); ++i) point[i] = index[i];
    const BigInt v = poly->evaluate(point);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
    unsigned i = 0;
    while (i < f.arity() && index[i] == degrees[i]) index[i++] = 0;
    if (i == f.arity()) break;
    ++index[i];
  }
  return {g, g == 0};
}

}  // namespace primerep
