#pragma once

#include <memory>
#include <string_view>

#include "qheis/algebra.hpp"

namespace qheis {

/// AST for the element DSL:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := 'A' | 'B' | 'q' | 'T' | rational | '(' expr ')' | '-' base
/// Whitespace-insensitive; '*' is mandatory, products keep their order.
/// 'T' is the variable of polynomial arguments (the pair subcommand) and is
/// rejected when evaluating to an algebra element, and vice versa.
struct ExprNode {
  enum class Kind { gen_a, gen_b, gen_t, q_sym, rational, add, sub, mul, pow, neg, paren };
  Kind kind;
  Rational lit;      // rational literals
  int exponent = 0;  // pow
  std::unique_ptr<ExprNode> lhs, rhs;
};

using ExprPtr = std::unique_ptr<ExprNode>;

/// Throws SyntaxError (with a character position) or NonIntegerExponent.
ExprPtr parse_expr(std::string_view src);

std::string print_expr(const ExprNode& ast);

/// Evaluates into normal form. In numeric mode 'q' stands for its value.
AlgebraElement eval_expr(const ExprNode& ast, const QParam& q);

/// Evaluates a polynomial in T over the coefficient ring of q.
UniPoly eval_poly_expr(const ExprNode& ast, const QParam& q);

} // namespace qheis
