#pragma once

#include <memory>
#include <string>

#include "estk/rational.hpp"

namespace estk {

enum class ExprKind { Constant, VarN, VarK, Neg, Add, Sub, Mul, Div };

struct ExprNode {
  ExprKind kind;
  Rational value;  // Constant only
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
};

// Arithmetic expression in the variables n and k with rational constants.
// Constant subexpressions are folded at parse time, except divisions by an
// exact zero, which are kept so the failure surfaces at evaluation with the
// (n, k) site attached.
class CoefficientExpr {
 public:
  static CoefficientExpr parse(const std::string& text);

  Rational eval(long n, long k) const;
  bool contains_var_k() const;
  bool contains_var_n() const;

  const std::string& text() const { return text_; }
  const std::shared_ptr<const ExprNode>& root() const { return root_; }

 private:
  CoefficientExpr(std::shared_ptr<const ExprNode> root, std::string text)
      : root_(std::move(root)), text_(std::move(text)) {}

  std::shared_ptr<const ExprNode> root_;
  std::string text_;
};

}  // namespace estk
