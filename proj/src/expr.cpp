#include "hodd/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <utility>
#include <vector>

#include "hodd/errors.hpp"
#include "hodd/numeric.hpp"

namespace hodd {

struct Expression::Node {
  enum class Kind {
    number,
    inf,
    var,
    neg,
    add,
    sub,
    mul,
    div,
    pow,
    exp,
    abs,
    sqrt,
    min,
    max,
    piecewise,
    eq,
    ne,
    lt,
    le,
    gt,
    ge,
    land,
    lor
  };

  Kind kind;
  double number = 0.0;  // literal value, or the exponent for pow
  int index = 0;        // variable index (0-based)
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = Node::Kind;

enum class Tok { number, ident, op, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::string text;
  double number = 0.0;
  std::size_t pos = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string text(src.substr(i));
      char* end = nullptr;
      const double v = std::strtod(text.c_str(), &end);
      const std::size_t len = static_cast<std::size_t>(end - text.c_str());
      if (len == 0) throw ParseError("malformed number", pos);
      out.push_back({Tok::number, std::string(src.substr(i, len)), v, pos});
      i += len;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), 0.0, pos});
      i = j;
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::lparen, "(", 0.0, pos});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Tok::rparen, ")", 0.0, pos});
      ++i;
      continue;
    }
    if (c == ',') {
      out.push_back({Tok::comma, ",", 0.0, pos});
      ++i;
      continue;
    }
    const std::string_view two = src.substr(i, 2);
    if (two == "==" || two == "!=" || two == "<=" || two == ">=" || two == "&&" || two == "||") {
      out.push_back({Tok::op, std::string(two), 0.0, pos});
      i += 2;
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '<' || c == '>') {
      out.push_back({Tok::op, std::string(1, c), 0.0, pos});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  out.push_back({Tok::end, "", 0.0, src.size() + 1});
  return out;
}

enum class Type { number, boolean };

struct Typed {
  NodePtr node;
  Type type;
  std::size_t pos;
};

NodePtr make(Kind k, std::vector<NodePtr> args = {}, double number = 0.0, int index = 0) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->args = std::move(args);
  n->number = number;
  n->index = index;
  return n;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, int dim) : toks_(std::move(tokens)), dim_(dim) {}

  NodePtr parse_top() {
    Typed e = parse_or();
    if (peek().kind != Tok::end) fail_unexpected();
    require_number(e);
    return e.node;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }
  bool is_op(const char* op) const { return peek().kind == Tok::op && peek().text == op; }

  [[noreturn]] void fail_unexpected() const {
    const Token& t = peek();
    if (t.kind == Tok::end) throw ParseError("unexpected end of input", t.pos);
    throw ParseError("unexpected token '" + t.text + "'", t.pos);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      if (peek().kind == Tok::end)
        throw ParseError(std::string("expected ") + what + " but input ended", peek().pos);
      throw ParseError(std::string("expected ") + what + " but found '" + peek().text + "'",
                       peek().pos);
    }
    take();
  }

  static void require_number(const Typed& e) {
    if (e.type != Type::number) throw ParseError("expected a numeric expression", e.pos);
  }
  static void require_bool(const Typed& e) {
    if (e.type != Type::boolean) throw ParseError("expected a condition", e.pos);
  }

  Typed parse_or() {
    Typed lhs = parse_and();
    while (is_op("||")) {
      take();
      Typed rhs = parse_and();
      require_bool(lhs);
      require_bool(rhs);
      lhs = {make(Kind::lor, {lhs.node, rhs.node}), Type::boolean, lhs.pos};
    }
    return lhs;
  }

  Typed parse_and() {
    Typed lhs = parse_cmp();
    while (is_op("&&")) {
      take();
      Typed rhs = parse_cmp();
      require_bool(lhs);
      require_bool(rhs);
      lhs = {make(Kind::land, {lhs.node, rhs.node}), Type::boolean, lhs.pos};
    }
    return lhs;
  }

  Typed parse_cmp() {
    Typed lhs = parse_sum();
    static const std::pair<const char*, Kind> ops[] = {{"==", Kind::eq}, {"!=", Kind::ne},
                                                       {"<=", Kind::le}, {">=", Kind::ge},
                                                       {"<", Kind::lt},  {">", Kind::gt}};
    for (const auto& [text, kind] : ops) {
      if (is_op(text)) {
        take();
        Typed rhs = parse_sum();
        require_number(lhs);
        require_number(rhs);
        return {make(kind, {lhs.node, rhs.node}), Type::boolean, lhs.pos};
      }
    }
    return lhs;
  }

  Typed parse_sum() {
    Typed lhs = parse_product();
    while (is_op("+") || is_op("-")) {
      const Kind k = take().text == "+" ? Kind::add : Kind::sub;
      Typed rhs = parse_product();
      require_number(lhs);
      require_number(rhs);
      lhs = {make(k, {lhs.node, rhs.node}), Type::number, lhs.pos};
    }
    return lhs;
  }

  Typed parse_product() {
    Typed lhs = parse_unary();
    while (is_op("*") || is_op("/")) {
      const Kind k = take().text == "*" ? Kind::mul : Kind::div;
      Typed rhs = parse_unary();
      require_number(lhs);
      require_number(rhs);
      lhs = {make(k, {lhs.node, rhs.node}), Type::number, lhs.pos};
    }
    return lhs;
  }

  Typed parse_unary() {
    if (is_op("-")) {
      const std::size_t pos = take().pos;
      Typed operand = parse_unary();
      require_number(operand);
      return {make(Kind::neg, {operand.node}), Type::number, pos};
    }
    return parse_power();
  }

  // Exponent: optional '-', then an integer literal or a parenthesized one.
  int parse_exponent() {
    const std::size_t pos = peek().pos;
    bool negative = false;
    if (is_op("-")) {
      take();
      negative = true;
    }
    bool paren = false;
    if (peek().kind == Tok::lparen) {
      take();
      paren = true;
      if (is_op("-")) {
        take();
        negative = !negative;
      }
    }
    if (peek().kind != Tok::number) throw ParseError("exponent must be an integer literal", pos);
    const double v = take().number;
    if (v != std::floor(v) || v > 64) throw ParseError("exponent must be an integer literal", pos);
    if (paren) expect(Tok::rparen, "')'");
    return negative ? -static_cast<int>(v) : static_cast<int>(v);
  }

  Typed parse_power() {
    Typed base = parse_primary();
    if (is_op("^")) {
      take();
      require_number(base);
      const int k = parse_exponent();
      return {make(Kind::pow, {base.node}, k), Type::number, base.pos};
    }
    return base;
  }

  // A piecewise branch: either the bare literal `inf` or a numeric expression.
  Typed parse_branch() {
    const Token& t = peek();
    if (t.kind == Tok::ident && t.text == "inf") {
      const Token& next = toks_[at_ + 1];
      if (next.kind == Tok::comma || next.kind == Tok::rparen) {
        take();
        return {make(Kind::inf), Type::number, t.pos};
      }
    }
    Typed e = parse_or();
    require_number(e);
    return e;
  }

  Typed parse_call(const Token& name) {
    struct Fn {
      const char* name;
      Kind kind;
      int arity;
    };
    static const Fn fns[] = {{"exp", Kind::exp, 1},   {"abs", Kind::abs, 1},
                             {"sqrt", Kind::sqrt, 1}, {"min", Kind::min, 2},
                             {"max", Kind::max, 2},   {"piecewise", Kind::piecewise, 3}};
    const Fn* fn = nullptr;
    for (const Fn& f : fns)
      if (name.text == f.name) fn = &f;
    if (fn == nullptr) throw ParseError("unknown function '" + name.text + "'", name.pos);
    expect(Tok::lparen, "'('");
    std::vector<NodePtr> args;
    for (int i = 0; i < fn->arity; ++i) {
      if (i > 0) expect(Tok::comma, "','");
      if (fn->kind == Kind::piecewise) {
        if (i == 0) {
          Typed cond = parse_or();
          require_bool(cond);
          args.push_back(cond.node);
        } else {
          args.push_back(parse_branch().node);
        }
      } else {
        Typed a = parse_or();
        require_number(a);
        args.push_back(a.node);
      }
    }
    if (peek().kind == Tok::comma)
      throw ParseError(std::string(fn->name) + " takes " + std::to_string(fn->arity) +
                           " argument(s)",
                       peek().pos);
    expect(Tok::rparen, "')'");
    return {make(fn->kind, std::move(args)), Type::number, name.pos};
  }

  Typed parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number:
        take();
        return {make(Kind::number, {}, t.number), Type::number, t.pos};
      case Tok::lparen: {
        take();
        Typed e = parse_or();
        expect(Tok::rparen, "')'");
        e.pos = t.pos;
        return e;
      }
      case Tok::ident: {
        const Token name = take();
        if (peek().kind == Tok::lparen) return parse_call(name);
        if (name.text == "inf")
          throw ParseError("'inf' is only allowed as a piecewise branch", name.pos);
        if (name.text.size() > 1 && name.text[0] == 'x') {
          const std::string digits = name.text.substr(1);
          bool all_digits = true;
          for (char c : digits) all_digits = all_digits && std::isdigit(static_cast<unsigned char>(c));
          if (all_digits && digits[0] != '0') {
            const long k = std::strtol(digits.c_str(), nullptr, 10);
            if (k > dim_)
              throw ParseError("variable " + name.text + " exceeds dimension " +
                                   std::to_string(dim_),
                               name.pos);
            return {make(Kind::var, {}, 0.0, static_cast<int>(k - 1)), Type::number, name.pos};
          }
        }
        throw ParseError("unknown identifier '" + name.text + "'", name.pos);
      }
      default:
        fail_unexpected();
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  int dim_;
};

// Numeric evaluation. A value is +inf only if it came from an `inf` branch;
// every operation that would newly create a non-finite value throws.
double checked(double r, const char* what) {
  if (std::isnan(r)) throw EvalError(std::string("undefined result in ") + what);
  if (std::isinf(r)) throw EvalError(std::string("overflow in ") + what);
  return r;
}

bool eval_bool(const Node& n, std::span<const double> x);

double eval_num(const Node& n, std::span<const double> x) {
  auto arg = [&](std::size_t i) { return eval_num(*n.args[i], x); };
  switch (n.kind) {
    case Kind::number:
      return n.number;
    case Kind::inf:
      return std::numeric_limits<double>::infinity();
    case Kind::var:
      return x[static_cast<std::size_t>(n.index)];
    case Kind::neg:
      return -arg(0);
    case Kind::add:
    case Kind::sub:
    case Kind::mul:
    case Kind::div: {
      const double a = arg(0);
      const double b = arg(1);
      const bool finite_in = std::isfinite(a) && std::isfinite(b);
      double r = 0.0;
      if (n.kind == Kind::add) {
        r = a + b;
      } else if (n.kind == Kind::sub) {
        r = a - b;
      } else if (n.kind == Kind::mul) {
        r = a * b;
      } else {
        if (b == 0.0) throw EvalError("division by zero");
        r = a / b;
      }
      if (std::isnan(r)) throw EvalError("indeterminate arithmetic on inf");
      if (finite_in) checked(r, "arithmetic");
      return r;
    }
    case Kind::pow: {
      const double a = arg(0);
      const int k = static_cast<int>(n.number);
      double r = 0.0;
      if (k >= 0) {
        r = ipow(a, k);
      } else {
        const double d = ipow(a, -k);
        if (d == 0.0) throw EvalError("division by zero in negative power");
        r = 1.0 / d;
      }
      if (std::isnan(r)) throw EvalError("indeterminate power");
      if (std::isfinite(a)) checked(r, "power");
      return r;
    }
    case Kind::exp: {
      const double a = arg(0);
      const double r = std::exp(a);
      if (std::isfinite(a)) checked(r, "exp");
      return r;
    }
    case Kind::abs:
      return std::abs(arg(0));
    case Kind::sqrt: {
      const double a = arg(0);
      if (a < 0) throw EvalError("sqrt of a negative number");
      return std::sqrt(a);
    }
    case Kind::min:
      return std::min(arg(0), arg(1));
    case Kind::max:
      return std::max(arg(0), arg(1));
    case Kind::piecewise:
      return eval_bool(*n.args[0], x) ? arg(1) : arg(2);
    default:
      throw EvalError("condition used as a number");
  }
}

bool eval_bool(const Node& n, std::span<const double> x) {
  switch (n.kind) {
    case Kind::land:
      return eval_bool(*n.args[0], x) && eval_bool(*n.args[1], x);
    case Kind::lor:
      return eval_bool(*n.args[0], x) || eval_bool(*n.args[1], x);
    default:
      break;
  }
  const double a = eval_num(*n.args[0], x);
  const double b = eval_num(*n.args[1], x);
  switch (n.kind) {
    case Kind::eq:
      return a == b;
    case Kind::ne:
      return a != b;
    case Kind::lt:
      return a < b;
    case Kind::le:
      return a <= b;
    case Kind::gt:
      return a > b;
    case Kind::ge:
      return a >= b;
    default:
      throw EvalError("number used as a condition");
  }
}

}  // namespace

Expression Expression::parse(std::string_view source, int dim) {
  if (dim <= 0) throw DomainError("dimension must be positive");
  std::size_t first = 0;
  while (first < source.size() && std::isspace(static_cast<unsigned char>(source[first]))) ++first;
  if (first == source.size()) throw ParseError("empty expression", 1);
  Parser p(tokenize(source), dim);
  NodePtr root = p.parse_top();
  return Expression(std::move(root), dim, std::string(source));
}

ExtReal Expression::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw DomainError("point has dimension " + std::to_string(x.size()) + ", expected " +
                      std::to_string(dim_));
  for (double c : x)
    if (std::isnan(c)) throw DomainError("NaN coordinate");
  const double v = eval_num(*root_, x);
  if (std::isinf(v) && v < 0) throw EvalError("expression evaluated to -inf");
  return ExtReal::function_value(v);
}

}  // namespace hodd
