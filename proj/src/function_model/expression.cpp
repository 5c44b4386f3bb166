#include <algorithm>
#include <functional>

#include "primerep/error.hpp"
#include "primerep/function_model.hpp"

namespace primerep {

namespace {

std::shared_ptr<Node> blank(NodeKind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

void validate(const Node& n, unsigned arity) {
  switch (n.kind) {
    case NodeKind::Constant:
      return;
    case NodeKind::Variable:
      if (n.variable == 0 || n.variable > arity) {
        throw ArityError("variable index " + std::to_string(n.variable) + " exceeds arity " +
                         std::to_string(arity));
      }
      return;
    case NodeKind::Negate:
    case NodeKind::FloorDiv:
      validate(*n.left, arity);
      return;
    case NodeKind::Add:
    case NodeKind::Subtract:
    case NodeKind::Multiply:
    case NodeKind::Power:
      validate(*n.left, arity);
      validate(*n.right, arity);
      return;
    case NodeKind::Piecewise:
      if (n.variable == 0 || n.variable > arity) {
        throw ArityError("piecewise guard variable exceeds arity " + std::to_string(arity));
      }
      for (const auto& b : n.branches) validate(*b.body, arity);
      validate(*n.otherwise, arity);
      return;
  }
}

std::string variable_name(unsigned index, unsigned arity) {
  static constexpr const char* kLetters[] = {"x", "y", "z", "w"};
  if (arity <= 4) return kLetters[index - 1];
  return "x" + std::to_string(index);
}

// Binding strength used to decide where parentheses are needed.
int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Subtract:
      return 1;
    case NodeKind::Multiply:
      return 2;
    case NodeKind::Power:
      return 3;
    case NodeKind::Constant:
      return sgn(n.value) < 0 ? 0 : 4;
    case NodeKind::Negate:
      return 0;
    default:
      return 4;
  }
}

void print(const Node& n, unsigned arity, std::string& out);

void print_wrapped(const Node& n, unsigned arity, int min_precedence, std::string& out) {
  if (precedence(n) < min_precedence) {
    out += '(';
    print(n, arity, out);
    out += ')';
  } else {
    print(n, arity, out);
  }
}

void print(const Node& n, unsigned arity, std::string& out) {
  switch (n.kind) {
    case NodeKind::Constant:
      out += n.value.get_str();
      return;
    case NodeKind::Variable:
      out += variable_name(n.variable, arity);
      return;
    case NodeKind::Negate:
      out += '-';
      print_wrapped(*n.left, arity, 2, out);
      return;
    case NodeKind::Add:
      print_wrapped(*n.left, arity, 1, out);
      out += '+';
      print_wrapped(*n.right, arity, 2, out);
      return;
    case NodeKind::Subtract:
      print_wrapped(*n.left, arity, 1, out);
      out += '-';
      print_wrapped(*n.right, arity, 2, out);
      return;
    case NodeKind::Multiply:
      print_wrapped(*n.left, arity, 2, out);
      out += '*';
      print_wrapped(*n.right, arity, 3, out);
      return;
    case NodeKind::Power:
      print_wrapped(*n.left, arity, 4, out);
      out += '^';
      print_wrapped(*n.right, arity, 3, out);
      return;
    case NodeKind::FloorDiv:
      out += "floor(";
      print(*n.left, arity, out);
      out += '/';
      out += n.value.get_str();
      out += ')';
      return;
    case NodeKind::Piecewise:
      out += "piecewise(";
      for (const auto& b : n.branches) {
        out += variable_name(n.variable, arity);
        out += "<=";
        out += b.upper.get_str();
        out += ": ";
        print(*b.body, arity, out);
        out += ", ";
      }
      out += "else: ";
      print(*n.otherwise, arity, out);
      out += ')';
      return;
  }
}

}  // namespace

NodePtr make_constant(BigInt value) {
  auto n = blank(NodeKind::Constant);
  n->value = std::move(value);
  return n;
}

NodePtr make_variable(unsigned index) {
  auto n = blank(NodeKind::Variable);
  n->variable = index;
  return n;
}

NodePtr make_negate(NodePtr operand) {
  auto n = blank(NodeKind::Negate);
  n->left = std::move(operand);
  return n;
}

NodePtr make_binary(NodeKind kind, NodePtr left, NodePtr right) {
  auto n = blank(kind);
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

NodePtr make_floor_div(NodePtr numerator, BigInt divisor) {
  if (divisor < 1) throw DomainError("floor division requires a positive divisor");
  auto n = blank(NodeKind::FloorDiv);
  n->left = std::move(numerator);
  n->value = std::move(divisor);
  return n;
}

NodePtr make_piecewise(unsigned variable, std::vector<PiecewiseBranch> branches, NodePtr otherwise) {
  if (branches.empty()) throw DomainError("piecewise needs at least one guarded branch");
  for (std::size_t i = 1; i < branches.size(); ++i) {
    if (branches[i].upper <= branches[i - 1].upper) {
      throw DomainError("piecewise guard bounds must be strictly increasing");
    }
  }
  if (!otherwise) throw DomainError("piecewise requires an else branch");
  auto n = blank(NodeKind::Piecewise);
  n->variable = variable;
  n->branches = std::move(branches);
  n->otherwise = std::move(otherwise);
  return n;
}

NtFunction::NtFunction(NodePtr root, unsigned arity) : root_(std::move(root)), arity_(arity) {
  if (!root_) throw DomainError("function body is empty");
  if (arity_ == 0) throw ArityError("arity must be positive");
  validate(*root_, arity_);
}

std::string NtFunction::to_string() const {
  std::string out;
  print(*root_, arity_, out);
  return out;
}

FunctionSystem::FunctionSystem(std::vector<NtFunction> functions) : functions_(std::move(functions)) {
  if (functions_.empty()) throw DomainError("a function system needs at least one member");
  for (const auto& f : functions_) {
    if (f.arity() != functions_.front().arity()) {
      throw ArityError("system members must share one arity");
    }
  }
}

std::string FunctionSystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    if (i) out += "; ";
    out += functions_[i].to_string();
  }
  return out;
}

}  // namespace primerep
