#include "qlt/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "qlt/error.hpp"

namespace qlt {

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Kind;
using Func = Expr::Func;

NodePtr make_node(Expr::Node n) { return std::make_shared<const Expr::Node>(std::move(n)); }

NodePtr literal(Complex v) {
  Expr::Node n;
  n.kind = Kind::Literal;
  n.literal = v;
  return make_node(std::move(n));
}

bool is_literal(const NodePtr& n, Complex v) {
  return n->kind == Kind::Literal && n->literal == v;
}

// Constructors fold the trivial identities so that symbolic derivatives stay
// compact; anything beyond that is out of scope.
NodePtr add(NodePtr a, NodePtr b) {
  if (is_literal(a, {0, 0})) return b;
  if (is_literal(b, {0, 0})) return a;
  if (a->kind == Kind::Literal && b->kind == Kind::Literal)
    return literal(a->literal + b->literal);
  Expr::Node n;
  n.kind = Kind::Add;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make_node(std::move(n));
}

NodePtr negate(NodePtr a) {
  if (a->kind == Kind::Literal) return literal(-a->literal);
  if (a->kind == Kind::Negate) return a->lhs;
  Expr::Node n;
  n.kind = Kind::Negate;
  n.lhs = std::move(a);
  return make_node(std::move(n));
}

NodePtr subtract(NodePtr a, NodePtr b) {
  if (is_literal(b, {0, 0})) return a;
  if (is_literal(a, {0, 0})) return negate(std::move(b));
  if (a->kind == Kind::Literal && b->kind == Kind::Literal)
    return literal(a->literal - b->literal);
  Expr::Node n;
  n.kind = Kind::Sub;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make_node(std::move(n));
}

NodePtr multiply(NodePtr a, NodePtr b) {
  if (is_literal(a, {0, 0}) || is_literal(b, {0, 0})) return literal({0, 0});
  if (is_literal(a, {1, 0})) return b;
  if (is_literal(b, {1, 0})) return a;
  if (a->kind == Kind::Literal && b->kind == Kind::Literal)
    return literal(a->literal * b->literal);
  Expr::Node n;
  n.kind = Kind::Mul;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make_node(std::move(n));
}

NodePtr divide(NodePtr a, NodePtr b) {
  if (is_literal(b, {1, 0})) return a;
  if (is_literal(a, {0, 0}) && !is_literal(b, {0, 0})) return literal({0, 0});
  Expr::Node n;
  n.kind = Kind::Div;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make_node(std::move(n));
}

NodePtr power(NodePtr base, int exponent) {
  if (exponent == 1) return base;
  if (exponent == 0) return literal({1, 0});
  Expr::Node n;
  n.kind = Kind::Pow;
  n.exponent = exponent;
  n.lhs = std::move(base);
  return make_node(std::move(n));
}

NodePtr call(Func f, NodePtr arg) {
  Expr::Node n;
  n.kind = Kind::Call;
  n.func = f;
  n.lhs = std::move(arg);
  return make_node(std::move(n));
}

NodePtr var_node(int index) {
  Expr::Node n;
  n.kind = Kind::Variable;
  n.var_index = index;
  return make_node(std::move(n));
}

// ---------------------------------------------------------------------------
// Lexer / parser

enum class Tok { Number, Ident, Imag, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;   // Ident / Number
  double value = 0;   // Number
  bool is_integer = false;
};

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars)
      : src_(src), vars_(vars) {
    advance();
  }

  NodePtr parse_full() {
    NodePtr e = parse_sum();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
  Token tok_;

  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(tok_.offset, expected,
                      "syntax error at offset " + std::to_string(tok_.offset) +
                          ": expected " + expected);
  }

  void expect(Tok k, const std::string& what) {
    if (tok_.kind != k) fail(what);
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_ = Token{Tok::End, pos_, "", 0, false};
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    const std::size_t start = pos_;
    switch (c) {
      case '+': tok_ = {Tok::Plus, start, "+"}; ++pos_; return;
      case '-': tok_ = {Tok::Minus, start, "-"}; ++pos_; return;
      case '*': tok_ = {Tok::Star, start, "*"}; ++pos_; return;
      case '/': tok_ = {Tok::Slash, start, "/"}; ++pos_; return;
      case '^': tok_ = {Tok::Caret, start, "^"}; ++pos_; return;
      case '(': tok_ = {Tok::LParen, start, "("}; ++pos_; return;
      case ')': tok_ = {Tok::RParen, start, ")"}; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      bool integer = true;
      std::size_t p = pos_;
      while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
      if (p < src_.size() && src_[p] == '.') {
        integer = false;
        ++p;
        while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
      }
      if (p < src_.size() && (src_[p] == 'e' || src_[p] == 'E')) {
        std::size_t q = p + 1;
        if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
        if (q < src_.size() && std::isdigit(static_cast<unsigned char>(src_[q]))) {
          integer = false;
          p = q;
          while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
        }
      }
      const std::string text(src_.substr(start, p - start));
      double value = 0;
      const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
      if (res.ec != std::errc{})
        throw SyntaxError(start, "number", "malformed numeric literal '" + text + "'");
      pos_ = p;
      tok_ = Token{Tok::Number, start, text, value, integer};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t p = pos_;
      while (p < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[p])) || src_[p] == '_'))
        ++p;
      const std::string text(src_.substr(start, p - start));
      pos_ = p;
      if (text == "i") {
        tok_ = Token{Tok::Imag, start, text};
      } else {
        tok_ = Token{Tok::Ident, start, text};
      }
      return;
    }
    throw SyntaxError(start, "token", "unexpected character '" + std::string(1, c) +
                                          "' at offset " + std::to_string(start));
  }

  NodePtr parse_sum() {
    NodePtr e = parse_product();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const bool plus = tok_.kind == Tok::Plus;
      advance();
      NodePtr r = parse_product();
      e = plus ? add(std::move(e), std::move(r)) : subtract(std::move(e), std::move(r));
    }
    return e;
  }

  NodePtr parse_product() {
    NodePtr e = parse_unary();
    while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
      const bool mul = tok_.kind == Tok::Star;
      advance();
      NodePtr r = parse_unary();
      e = mul ? multiply(std::move(e), std::move(r)) : divide(std::move(e), std::move(r));
    }
    return e;
  }

  NodePtr parse_unary() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return negate(parse_unary());
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (tok_.kind != Tok::Caret) return base;
    advance();
    return power(std::move(base), parse_integer_exponent());
  }

  int parse_integer_exponent() {
    bool paren = false;
    if (tok_.kind == Tok::LParen) {
      paren = true;
      advance();
    }
    int sign = 1;
    if (tok_.kind == Tok::Minus) {
      sign = -1;
      advance();
    }
    if (tok_.kind != Tok::Number || !tok_.is_integer) throw NonIntegerExponent(tok_.offset);
    const double v = tok_.value;
    if (v > 1e9) throw NonIntegerExponent(tok_.offset);
    advance();
    if (paren) {
      expect(Tok::RParen, "')'");
      advance();
    }
    return sign * static_cast<int>(v);
  }

  NodePtr parse_atom() {
    switch (tok_.kind) {
      case Tok::Number: {
        NodePtr n = literal({tok_.value, 0});
        advance();
        return n;
      }
      case Tok::Imag: {
        advance();
        return literal({0, 1});
      }
      case Tok::LParen: {
        advance();
        NodePtr e = parse_sum();
        expect(Tok::RParen, "')'");
        advance();
        return e;
      }
      case Tok::Ident: {
        const std::string name = tok_.text;
        const std::size_t off = tok_.offset;
        advance();
        if (tok_.kind == Tok::LParen) {
          Func f;
          if (name == "exp") f = Func::Exp;
          else if (name == "sin") f = Func::Sin;
          else if (name == "cos") f = Func::Cos;
          else if (name == "log") f = Func::Log;
          else throw UnknownIdentifier(off, name);
          advance();
          NodePtr arg = parse_sum();
          expect(Tok::RParen, "')'");
          advance();
          return call(f, std::move(arg));
        }
        for (std::size_t j = 0; j < vars_.size(); ++j)
          if (vars_[j] == name) return var_node(static_cast<int>(j));
        throw UnknownIdentifier(off, name);
      }
      default:
        fail("expression");
    }
  }
};

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// ---------------------------------------------------------------------------
// Evaluation

void check_finite(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw DomainError(std::string(what) + " produced a non-finite value");
}

Complex pow_int(Complex base, int exponent) {
  if (exponent == 0) return {1, 0};
  if (exponent < 0) {
    if (base == Complex{0, 0}) throw DomainError("zero raised to a negative power");
    return Complex{1, 0} / pow_int(base, -exponent);
  }
  Complex acc{1, 0};
  Complex b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Complex eval_node(const Expr::Node* n, std::span<const double> point) {
  switch (n->kind) {
    case Kind::Variable:
      return {point[static_cast<std::size_t>(n->var_index)], 0};
    case Kind::Literal:
      return n->literal;
    case Kind::Negate:
      return -eval_node(n->lhs.get(), point);
    case Kind::Add:
      return eval_node(n->lhs.get(), point) + eval_node(n->rhs.get(), point);
    case Kind::Sub:
      return eval_node(n->lhs.get(), point) - eval_node(n->rhs.get(), point);
    case Kind::Mul: {
      Complex v = eval_node(n->lhs.get(), point) * eval_node(n->rhs.get(), point);
      check_finite(v, "multiplication");
      return v;
    }
    case Kind::Div: {
      Complex v = eval_node(n->lhs.get(), point) / eval_node(n->rhs.get(), point);
      check_finite(v, "division");
      return v;
    }
    case Kind::Pow: {
      Complex v = pow_int(eval_node(n->lhs.get(), point), n->exponent);
      check_finite(v, "integer power");
      return v;
    }
    case Kind::Call: {
      const Complex a = eval_node(n->lhs.get(), point);
      Complex v;
      switch (n->func) {
        case Func::Exp: v = std::exp(a); break;
        case Func::Sin: v = std::sin(a); break;
        case Func::Cos: v = std::cos(a); break;
        case Func::Log:
          if (a == Complex{0, 0}) throw DomainError("log of zero");
          v = std::log(a);
          break;
      }
      check_finite(v, "function call");
      return v;
    }
  }
  throw std::logic_error("expr: corrupt node");
}

// ---------------------------------------------------------------------------
// Symbolic differentiation

NodePtr diff(const NodePtr& n, int index) {
  switch (n->kind) {
    case Kind::Variable:
      return literal(n->var_index == index ? Complex{1, 0} : Complex{0, 0});
    case Kind::Literal:
      return literal({0, 0});
    case Kind::Negate:
      return negate(diff(n->lhs, index));
    case Kind::Add:
      return add(diff(n->lhs, index), diff(n->rhs, index));
    case Kind::Sub:
      return subtract(diff(n->lhs, index), diff(n->rhs, index));
    case Kind::Mul:
      return add(multiply(diff(n->lhs, index), n->rhs),
                 multiply(n->lhs, diff(n->rhs, index)));
    case Kind::Div:
      // (u'v - uv') / v^2
      return divide(subtract(multiply(diff(n->lhs, index), n->rhs),
                             multiply(n->lhs, diff(n->rhs, index))),
                    power(n->rhs, 2));
    case Kind::Pow:
      // k u^(k-1) u'
      return multiply(multiply(literal({static_cast<double>(n->exponent), 0}),
                               power(n->lhs, n->exponent - 1)),
                      diff(n->lhs, index));
    case Kind::Call: {
      NodePtr inner = diff(n->lhs, index);
      switch (n->func) {
        case Func::Exp: return multiply(call(Func::Exp, n->lhs), std::move(inner));
        case Func::Sin: return multiply(call(Func::Cos, n->lhs), std::move(inner));
        case Func::Cos: return negate(multiply(call(Func::Sin, n->lhs), std::move(inner)));
        case Func::Log: return divide(std::move(inner), n->lhs);
      }
      break;
    }
  }
  throw std::logic_error("expr: corrupt node");
}

// ---------------------------------------------------------------------------
// Printing

int precedence(Kind k) {
  switch (k) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Negate: return 3;
    case Kind::Pow: return 4;
    default: return 5;
  }
}

std::string fmt_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string print(const Expr::Node* n, const std::vector<std::string>& vars, int parent_prec) {
  std::string s;
  const int prec = precedence(n->kind);
  switch (n->kind) {
    case Kind::Variable:
      s = vars[static_cast<std::size_t>(n->var_index)];
      break;
    case Kind::Literal: {
      const Complex v = n->literal;
      if (v.imag() == 0) s = fmt_number(v.real());
      else if (v.real() == 0 && v.imag() == 1) s = "i";
      else if (v.real() == 0) s = fmt_number(v.imag()) + "*i";
      else {
        s = "(" + fmt_number(v.real()) + (v.imag() < 0 ? " - " : " + ") +
            fmt_number(std::abs(v.imag())) + "*i)";
        return s;
      }
      break;
    }
    case Kind::Negate:
      s = "-" + print(n->lhs.get(), vars, prec);
      break;
    // Right children print at prec+1 so the parse tree (and therefore the
    // floating-point evaluation order) survives a round trip.
    case Kind::Add:
      s = print(n->lhs.get(), vars, prec) + " + " + print(n->rhs.get(), vars, prec + 1);
      break;
    case Kind::Sub:
      s = print(n->lhs.get(), vars, prec) + " - " + print(n->rhs.get(), vars, prec + 1);
      break;
    case Kind::Mul:
      s = print(n->lhs.get(), vars, prec) + "*" + print(n->rhs.get(), vars, prec + 1);
      break;
    case Kind::Div:
      s = print(n->lhs.get(), vars, prec) + "/" + print(n->rhs.get(), vars, prec + 1);
      break;
    case Kind::Pow:
      s = print(n->lhs.get(), vars, prec + 1) + "^" +
          (n->exponent < 0 ? "(" + std::to_string(n->exponent) + ")"
                           : std::to_string(n->exponent));
      break;
    case Kind::Call: {
      const char* name = "";
      switch (n->func) {
        case Func::Exp: name = "exp"; break;
        case Func::Sin: name = "sin"; break;
        case Func::Cos: name = "cos"; break;
        case Func::Log: name = "log"; break;
      }
      return std::string(name) + "(" + print(n->lhs.get(), vars, 0) + ")";
    }
  }
  if (prec < parent_prec) s = "(" + s + ")";
  return s;
}

std::shared_ptr<const std::vector<std::string>> share_vars(std::vector<std::string> vars) {
  return std::make_shared<const std::vector<std::string>>(std::move(vars));
}

}  // namespace

const std::vector<std::string>& Expr::variables() const {
  static const std::vector<std::string> empty;
  return vars_ ? *vars_ : empty;
}

std::string Expr::to_string() const {
  if (!root_) return "";
  return print(root_.get(), variables(), 0);
}

Expr Expr::variable(int index, std::vector<std::string> variables) {
  if (index < 0 || index >= static_cast<int>(variables.size()))
    throw std::invalid_argument("Expr::variable: index out of range");
  return Expr(var_node(index), share_vars(std::move(variables)));
}

Expr Expr::constant(Complex value, std::vector<std::string> variables) {
  return Expr(literal(value), share_vars(std::move(variables)));
}

Expr parse(std::string_view source, std::vector<std::string> variables) {
  for (std::size_t j = 0; j < variables.size(); ++j) {
    const std::string& name = variables[j];
    if (!valid_identifier(name) || name == "i" || name == "exp" || name == "sin" ||
        name == "cos" || name == "log")
      throw SyntaxError(0, "variable name",
                        "invalid or reserved variable name '" + name + "'");
    for (std::size_t k = 0; k < j; ++k)
      if (variables[k] == name)
        throw SyntaxError(0, "variable name", "duplicate variable name '" + name + "'");
  }
  Parser p(source, variables);
  NodePtr root = p.parse_full();
  return Expr(std::move(root), share_vars(std::move(variables)));
}

Complex evaluate(const Expr& e, std::span<const double> point) {
  if (e.empty()) throw std::invalid_argument("evaluate: empty expression");
  if (static_cast<int>(point.size()) != e.dimension())
    throw std::invalid_argument("evaluate: point dimension mismatch");
  for (double v : point)
    if (!std::isfinite(v)) throw std::invalid_argument("evaluate: non-finite point");
  return eval_node(e.root(), point);
}

Expr partial(const Expr& e, int index) {
  if (e.empty()) throw std::invalid_argument("partial: empty expression");
  if (index < 0 || index >= e.dimension())
    throw std::invalid_argument("partial: variable index out of range");
  return Expr(diff(e.root_, index), e.vars_);
}

}  // namespace qlt
