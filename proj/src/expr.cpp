#include "estk/expr.hpp"

#include <cctype>

#include "estk/errors.hpp"

namespace estk {

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_constant(Rational value) {
  return std::make_shared<ExprNode>(
      ExprNode{ExprKind::Constant, std::move(value), nullptr, nullptr});
}

NodePtr make_var(ExprKind kind) {
  return std::make_shared<ExprNode>(ExprNode{kind, Rational(0), nullptr, nullptr});
}

NodePtr make_neg(NodePtr child) {
  if (child->kind == ExprKind::Constant) return make_constant(-child->value);
  return std::make_shared<ExprNode>(
      ExprNode{ExprKind::Neg, Rational(0), std::move(child), nullptr});
}

NodePtr make_binary(ExprKind kind, NodePtr lhs, NodePtr rhs) {
  if (lhs->kind == ExprKind::Constant && rhs->kind == ExprKind::Constant) {
    switch (kind) {
      case ExprKind::Add:
        return make_constant(lhs->value + rhs->value);
      case ExprKind::Sub:
        return make_constant(lhs->value - rhs->value);
      case ExprKind::Mul:
        return make_constant(lhs->value * rhs->value);
      case ExprKind::Div:
        if (!rhs->value.is_zero()) return make_constant(lhs->value / rhs->value);
        break;  // keep the node; the zero division surfaces at eval
      default:
        break;
    }
  }
  return std::make_shared<ExprNode>(
      ExprNode{kind, Rational(0), std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr node = expr();
    skip_spaces();
    if (pos_ < text_.size()) fail();
    return node;
  }

 private:
  NodePtr expr() {
    NodePtr node = term();
    while (true) {
      skip_spaces();
      if (peek() == '+') {
        ++pos_;
        node = make_binary(ExprKind::Add, node, term());
      } else if (peek() == '-') {
        ++pos_;
        node = make_binary(ExprKind::Sub, node, term());
      } else {
        return node;
      }
    }
  }

  NodePtr term() {
    NodePtr node = factor();
    while (true) {
      skip_spaces();
      if (peek() == '*') {
        ++pos_;
        node = make_binary(ExprKind::Mul, node, factor());
      } else if (peek() == '/') {
        ++pos_;
        node = make_binary(ExprKind::Div, node, factor());
      } else {
        return node;
      }
    }
  }

  NodePtr factor() {
    skip_spaces();
    if (peek() == '-') {
      ++pos_;
      return make_neg(factor());
    }
    return primary();
  }

  NodePtr primary() {
    skip_spaces();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr node = expr();
      skip_spaces();
      if (peek() != ')') fail();
      ++pos_;
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return make_constant(Rational::from_string(text_.substr(start, pos_ - start)));
    }
    if (c == 'n') {
      ++pos_;
      return make_var(ExprKind::VarN);
    }
    if (c == 'k') {
      ++pos_;
      return make_var(ExprKind::VarK);
    }
    fail();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail() const {
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of input at position " + std::to_string(pos_),
                       pos_);
    throw ParseError("unexpected token '" + std::string(1, text_[pos_]) +
                         "' at position " + std::to_string(pos_),
                     pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

Rational eval_node(const ExprNode& node, long n, long k) {
  switch (node.kind) {
    case ExprKind::Constant:
      return node.value;
    case ExprKind::VarN:
      return Rational(n);
    case ExprKind::VarK:
      return Rational(k);
    case ExprKind::Neg:
      return -eval_node(*node.lhs, n, k);
    case ExprKind::Add:
      return eval_node(*node.lhs, n, k) + eval_node(*node.rhs, n, k);
    case ExprKind::Sub:
      return eval_node(*node.lhs, n, k) - eval_node(*node.rhs, n, k);
    case ExprKind::Mul:
      return eval_node(*node.lhs, n, k) * eval_node(*node.rhs, n, k);
    case ExprKind::Div: {
      const Rational denom = eval_node(*node.rhs, n, k);
      if (denom.is_zero())
        throw DivisionByZero("division by zero at (n=" + std::to_string(n) +
                                 ", k=" + std::to_string(k) + ")",
                             n, k);
      return eval_node(*node.lhs, n, k) / denom;
    }
  }
  throw Error("unreachable expression kind");
}

bool mentions(const ExprNode& node, ExprKind var) {
  if (node.kind == var) return true;
  if (node.lhs && mentions(*node.lhs, var)) return true;
  if (node.rhs && mentions(*node.rhs, var)) return true;
  return false;
}

}  // namespace

CoefficientExpr CoefficientExpr::parse(const std::string& text) {
  return CoefficientExpr(Parser(text).run(), text);
}

Rational CoefficientExpr::eval(long n, long k) const { return eval_node(*root_, n, k); }

bool CoefficientExpr::contains_var_k() const { return mentions(*root_, ExprKind::VarK); }

bool CoefficientExpr::contains_var_n() const { return mentions(*root_, ExprKind::VarN); }

}  // namespace estk
