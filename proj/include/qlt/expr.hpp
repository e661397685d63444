#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlt/linalg.hpp"

namespace qlt {

// Immutable expression tree for a complex-valued function of n real
// variables. Values are Expr; all operations below are pure, so trees can be
// shared freely across threads.
class Expr {
 public:
  enum class Kind { Variable, Literal, Negate, Add, Sub, Mul, Div, Pow, Call };
  enum class Func { Exp, Sin, Cos, Log };

  struct Node {
    Kind kind;
    int var_index = -1;      // Variable
    Complex literal{0, 0};   // Literal
    int exponent = 0;        // Pow
    Func func = Func::Exp;   // Call
    std::shared_ptr<const Node> lhs, rhs;
  };

  Expr() = default;

  bool empty() const { return root_ == nullptr; }
  int dimension() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  const std::vector<std::string>& variables() const;
  const Node* root() const { return root_.get(); }

  std::string to_string() const;

  static Expr variable(int index, std::vector<std::string> variables);
  static Expr constant(Complex value, std::vector<std::string> variables);

 private:
  Expr(std::shared_ptr<const Node> root, std::shared_ptr<const std::vector<std::string>> vars)
      : root_(std::move(root)), vars_(std::move(vars)) {}

  std::shared_ptr<const Node> root_;
  std::shared_ptr<const std::vector<std::string>> vars_;

  friend Expr parse(std::string_view, std::vector<std::string>);
  friend Expr partial(const Expr&, int);
};

// Infix grammar with precedence ^ > unary - > * / > + -, parentheses,
// calls exp/sin/cos/log, integer exponents only, and the literal `i`.
Expr parse(std::string_view source, std::vector<std::string> variables);

Complex evaluate(const Expr& e, std::span<const double> point);

// Exact symbolic partial derivative with respect to variable `index`.
Expr partial(const Expr& e, int index);

}  // namespace qlt
