#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "hodd/extreal.hpp"

namespace hodd {

// Compiled piecewise arithmetic expression over variables x1..xd.
//
// Grammar (lowest to highest precedence):
//
//   expr    := or
//   or      := and ( "||" and )*
//   and     := cmp ( "&&" cmp )*
//   cmp     := sum ( ("==" | "!=" | "<" | "<=" | ">" | ">=") sum )?
//   sum     := product ( ("+" | "-") product )*
//   product := unary ( ("*" | "/") unary )*
//   unary   := "-" unary | power
//   power   := primary ( "^" integer-exponent )?
//   primary := number | "x" k | "(" expr ")"
//            | exp(e) | abs(e) | sqrt(e) | min(e, e) | max(e, e)
//            | piecewise(cond, branch, branch)
//   branch  := expr | "inf"
//
// Comparisons are exact floating-point comparisons. The literal `inf` is only
// accepted as a whole piecewise branch; every other source of a non-finite
// value (division by zero, exp overflow, sqrt of a negative) is an EvalError.
class Expression {
 public:
  // Throws ParseError with a 1-based character position.
  static Expression parse(std::string_view source, int dim);

  ExtReal evaluate(std::span<const double> x) const;

  int dim() const { return dim_; }
  const std::string& source() const { return source_; }

  struct Node;

 private:
  Expression(std::shared_ptr<const Node> root, int dim, std::string source)
      : root_(std::move(root)), dim_(dim), source_(std::move(source)) {}

  std::shared_ptr<const Node> root_;
  int dim_ = 0;
  std::string source_;
};

}  // namespace hodd
