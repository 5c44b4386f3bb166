#pragma once

// Number-theoretic functions N^k -> Z as immutable expression trees.
//
// Grammar accepted by parse_function:
//
//   expr      := ["-"] term (("+" | "-") term)*
//   term      := factor ("*" factor | implicit-factor)*
//   factor    := atom ("^" factor)?                      right associative
//   atom      := INTEGER | VAR | "(" expr ")" | "floor(" expr "/" INTEGER ")"
//              | "piecewise(" (VAR "<=" INTEGER ":" expr ",")+ "else:" expr ")"
//   VAR       := "x" | "y" | "z" | "w" | "x" DIGITS
//
// x, y, z, w name variables 1..4; xN names variable N. A system is a list of
// functions joined by ";".

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primerep/core_arith.hpp"

namespace primerep {

enum class NodeKind { Constant, Variable, Negate, Add, Subtract, Multiply, Power, FloorDiv, Piecewise };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Guard "variable <= upper"; guards are tested in order.
struct PiecewiseBranch {
  BigInt upper;
  NodePtr body;
};

struct Node {
  NodeKind kind = NodeKind::Constant;
  BigInt value;           // Constant value, FloorDiv divisor
  unsigned variable = 0;  // Variable index (1-based), Piecewise guard variable
  NodePtr left;           // unary operand or left operand
  NodePtr right;
  std::vector<PiecewiseBranch> branches;
  NodePtr otherwise;
};

NodePtr make_constant(BigInt value);
NodePtr make_variable(unsigned index);
NodePtr make_negate(NodePtr operand);
NodePtr make_binary(NodeKind kind, NodePtr left, NodePtr right);
NodePtr make_floor_div(NodePtr numerator, BigInt divisor);
NodePtr make_piecewise(unsigned variable, std::vector<PiecewiseBranch> branches, NodePtr otherwise);

class NtFunction {
 public:
  // Validates variable indices against arity and the piecewise guard shape.
  NtFunction(NodePtr root, unsigned arity);

  unsigned arity() const { return arity_; }
  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }

  // Text that parse_function maps back to an equivalent function.
  std::string to_string() const;

 private:
  NodePtr root_;
  unsigned arity_;
};

class FunctionSystem {
 public:
  explicit FunctionSystem(std::vector<NtFunction> functions);
  FunctionSystem(std::initializer_list<NtFunction> functions)
      : FunctionSystem(std::vector<NtFunction>(functions)) {}

  std::size_t size() const { return functions_.size(); }
  unsigned arity() const { return functions_.front().arity(); }
  const NtFunction& operator[](std::size_t i) const { return functions_[i]; }
  auto begin() const { return functions_.begin(); }
  auto end() const { return functions_.end(); }
  std::string to_string() const;

 private:
  std::vector<NtFunction> functions_;
};

// When arity is omitted it is the largest variable index used (at least 1).
NtFunction parse_function(std::string_view text, std::optional<unsigned> arity = std::nullopt);
// Members share the largest arity among them unless one is given.
FunctionSystem parse_system(std::string_view text, std::optional<unsigned> arity = std::nullopt);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

using Point = std::vector<std::int64_t>;

struct EvalOptions {
  bool allow_zero = false;               // admit 0 as a coordinate
  std::size_t bit_budget = std::size_t{1} << 24;

  std::int64_t x_min() const { return allow_zero ? 0 : 1; }
};

BigInt evaluate(const NtFunction& f, std::span<const std::int64_t> point, const EvalOptions& options = {});
BigInt evaluate(const NtFunction& f, std::span<const BigInt> point, const EvalOptions& options = {});

// Exact value when every intermediate fits in 64 bits, otherwise nullopt.
std::optional<std::int64_t> evaluate_small(const NtFunction& f, std::span<const std::int64_t> point,
                                           const EvalOptions& options = {});

// f(point) mod m in [0, m). Exponents are evaluated exactly and applied by
// modular exponentiation, so towers never materialize their value.
BigInt evaluate_mod(const NtFunction& f, std::span<const std::int64_t> point, const BigInt& m,
                    const EvalOptions& options = {});
BigInt evaluate_mod(const NtFunction& f, std::span<const BigInt> point, const BigInt& m,
                    const EvalOptions& options = {});

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(unsigned variables) : variables_(variables) {}
  static Polynomial constant(unsigned variables, const BigInt& c);
  static Polynomial variable(unsigned variables, unsigned index);

  unsigned variables() const { return variables_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial pow(unsigned exponent) const;

  unsigned total_degree() const;
  std::vector<unsigned> variable_degrees() const;
  // Coefficients a_0..a_d of a univariate polynomial.
  std::vector<BigInt> univariate_coefficients() const;

  BigInt evaluate(std::span<const BigInt> point) const;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  unsigned variables_;
  std::map<Exponents, BigInt> terms_;
};

// Expanded normal form, or nullopt when f is not a polynomial (a variable in
// an exponent, floor division, piecewise, or a negative constant exponent).
std::optional<Polynomial> expand(const NtFunction& f);

struct FunctionProfile {
  bool is_polynomial = false;
  unsigned arity = 1;
  std::optional<unsigned> degree;                 // total degree
  std::vector<unsigned> variable_degrees;         // per variable, polynomial only
  std::optional<BigInt> leading_coefficient;      // univariate nonzero polynomial only
  std::optional<BigInt> fixed_divisor;
  bool vanishes_on_grid = false;
};

FunctionProfile classify(const NtFunction& f);

struct FixedDivisor {
  BigInt value;                       // 0 when f vanishes on the whole grid
  bool identically_vanishing = false;
};

// gcd of f over the grid [0, d_1] x ... x [0, d_k]. Throws NotPolynomial.
FixedDivisor fixed_divisor(const NtFunction& f, const FunctionProfile& profile);

// ---------------------------------------------------------------------------
// Growth envelopes and periodicity
// ---------------------------------------------------------------------------

// True when f is provably nondecreasing in every variable on the domain.
bool is_monotone_nondecreasing(const NtFunction& f, const EvalOptions& options = {});

// A radius r such that every point whose largest coordinate is >= r has a
// value outside [lo, hi) (hi absent means +infinity). nullopt when no
// certificate could be derived.
std::optional<std::int64_t> escape_radius(const NtFunction& f, const BigInt& lo, const std::optional<BigInt>& hi,
                                          const EvalOptions& options = {});

// Period p such that f(x + p) == f(x) (mod m) for every x in the domain, for
// univariate f built from polynomial parts and powers b^g(x) with gcd(b, m) = 1
// and polynomial g. nullopt otherwise.
std::optional<BigInt> residue_period(const NtFunction& f, const BigInt& m);

// ---------------------------------------------------------------------------
// Point order
// ---------------------------------------------------------------------------

// Points are visited by largest coordinate first, then lexicographically.
// This is the workbench-wide meaning of "least point".
std::int64_t max_norm(std::span<const std::int64_t> point);
Point first_point(unsigned arity, std::int64_t x_min);
void advance_point(Point& point, std::int64_t x_min);
bool point_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// Visits points with max-norm <= last_radius in order; stops early when fn
// returns true. Returns whether fn stopped the walk.
template <class Fn>
bool walk_points(unsigned arity, std::int64_t x_min, std::int64_t last_radius, Fn&& fn) {
  if (last_radius < x_min) return false;
  Point p = first_point(arity, x_min);
  while (max_norm(p) <= last_radius) {
    if (fn(static_cast<const Point&>(p))) return true;
    advance_point(p, x_min);
  }
  return false;
}

}  // namespace primerep
