#include <cctype>

#include "primerep/error.hpp"
#include "primerep/function_model.hpp"

namespace primerep {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    NodePtr root = expr();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return root;
  }

  unsigned max_variable() const { return max_variable_; }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // U+2212 MINUS SIGN is accepted as '-'.
  bool accept_minus() {
    if (accept('-')) return true;
    return accept(std::string_view("\xE2\x88\x92"));
  }

  NodePtr expr() {
    NodePtr node = accept_minus() ? make_negate(term()) : term();
    for (;;) {
      if (accept('+')) {
        node = make_binary(NodeKind::Add, node, term());
      } else if (accept_minus()) {
        node = make_binary(NodeKind::Subtract, node, term());
      } else {
        return node;
      }
    }
  }

  bool starts_atom() {
    skip_space();
    const char c = peek();
    return c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  NodePtr term() {
    NodePtr node = factor();
    for (;;) {
      if (accept('*')) {
        node = make_binary(NodeKind::Multiply, node, factor());
      } else if (starts_atom()) {
        // implicit product such as 2x or 3(x+1)
        node = make_binary(NodeKind::Multiply, node, factor());
      } else {
        return node;
      }
    }
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (accept('^')) return make_binary(NodeKind::Power, base, factor());
    return base;
  }

  BigInt integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned variable_from(const std::string& name, std::size_t start) {
    unsigned index = 0;
    if (name == "x") {
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t digits = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        const auto parsed = std::stoul(std::string(text_.substr(digits, pos_ - digits)));
        if (parsed == 0 || parsed > 1024) {
          pos_ = digits;
          fail("variable index out of range");
        }
        index = static_cast<unsigned>(parsed);
      } else {
        index = 1;
      }
    } else if (name == "y") {
      index = 2;
    } else if (name == "z") {
      index = 3;
    } else if (name == "w") {
      index = 4;
    } else {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    max_variable_ = std::max(max_variable_, index);
    return index;
  }

  NodePtr atom() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return make_constant(integer());
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "floor") {
      expect('(');
      NodePtr numerator = expr();
      expect('/');
      const std::size_t divisor_pos = pos_;
      BigInt divisor = integer();
      if (divisor == 0) {
        pos_ = divisor_pos;
        fail("floor divisor must be positive");
      }
      expect(')');
      return make_floor_div(numerator, divisor);
    }
    if (name == "piecewise") return piecewise();
    return make_variable(variable_from(name, start));
  }

  NodePtr piecewise() {
    expect('(');
    std::vector<PiecewiseBranch> branches;
    std::optional<unsigned> guard;
    for (;;) {
      skip_space();
      const std::size_t start = pos_;
      const std::string name = identifier();
      if (name == "else") {
        expect(':');
        NodePtr otherwise = expr();
        expect(')');
        if (branches.empty()) {
          pos_ = start;
          fail("piecewise needs a guarded branch before else");
        }
        return make_piecewise(*guard, std::move(branches), otherwise);
      }
      if (name.empty()) fail("expected a guard or else");
      const unsigned var = variable_from(name, start);
      if (guard && *guard != var) {
        pos_ = start;
        fail("all piecewise guards must test the same variable");
      }
      guard = var;
      if (!accept("<=")) fail("expected '<='");
      const std::size_t bound_pos = pos_;
      BigInt upper = integer();
      if (!branches.empty() && upper <= branches.back().upper) {
        pos_ = bound_pos;
        fail("piecewise guard bounds must be strictly increasing");
      }
      expect(':');
      NodePtr body = expr();
      expect(',');
      branches.push_back({std::move(upper), std::move(body)});
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  unsigned max_variable_ = 0;
};

}  // namespace

NtFunction parse_function(std::string_view text, std::optional<unsigned> arity) {
  Parser parser(text);
  NodePtr root = parser.parse_all();
  const unsigned used = std::max(1u, parser.max_variable());
  if (arity && parser.max_variable() > *arity) {
    throw ArityError("expression uses variable " + std::to_string(parser.max_variable()) +
                     " but the declared arity is " + std::to_string(*arity));
  }
  return NtFunction(root, arity.value_or(used));
}

FunctionSystem parse_system(std::string_view text, std::optional<unsigned> arity) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    parts.push_back(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  unsigned common = arity.value_or(0);
  if (!arity) {
    for (auto part : parts) common = std::max(common, parse_function(part).arity());
  }
  std::vector<NtFunction> functions;
  for (auto part : parts) functions.push_back(parse_function(part, common));
  return FunctionSystem(std::move(functions));
}

}  // namespace primerep
