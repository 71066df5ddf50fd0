#include <string>

#include "doctest.h"
#include "estk/errors.hpp"
#include "estk/expr.hpp"

using estk::CoefficientExpr;
using estk::ExprKind;
using estk::Rational;

namespace {

Rational eval(const std::string& text, long n, long k) {
  return CoefficientExpr::parse(text).eval(n, k);
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("ast shape") {
    // -(n+1)/k : Div(Neg(Add(VarN, Const(1))), VarK)
    const CoefficientExpr e = CoefficientExpr::parse("-(n+1)/k");
    const auto& root = e.root();
    REQUIRE(root->kind == ExprKind::Div);
    REQUIRE(root->lhs->kind == ExprKind::Neg);
    REQUIRE(root->lhs->lhs->kind == ExprKind::Add);
    CHECK(root->lhs->lhs->lhs->kind == ExprKind::VarN);
    CHECK(root->lhs->lhs->rhs->kind == ExprKind::Constant);
    CHECK(root->lhs->lhs->rhs->value == Rational(1));
    CHECK(root->rhs->kind == ExprKind::VarK);

    CHECK(CoefficientExpr::parse("1").root()->kind == ExprKind::Constant);

    // 2*n + 3/2 : Add(Mul(Const(2), VarN), Const(3/2)) — the 3/2 constant
    // division folds at parse time
    const CoefficientExpr p = CoefficientExpr::parse("2*n + 3/2");
    REQUIRE(p.root()->kind == ExprKind::Add);
    CHECK(p.root()->lhs->kind == ExprKind::Mul);
    CHECK(p.root()->lhs->lhs->value == Rational(2));
    CHECK(p.root()->lhs->rhs->kind == ExprKind::VarN);
    CHECK(p.root()->rhs->kind == ExprKind::Constant);
    CHECK(p.root()->rhs->value == Rational(3, 2));
  }

  TEST_CASE("evaluation") {
    CHECK(eval("n+1", 2, 5) == Rational(3));
    CHECK(eval("-(n+1)/k", 0, 2) == Rational(-1, 2));
    CHECK(eval("2*n + 3/2", 4, 1) == Rational(19, 2));
    CHECK(eval("n*k", 3, 4) == Rational(12));
    CHECK(eval("n-k", 1, 5) == Rational(-4));
    CHECK(eval("-n", 3, 1) == Rational(-3));
    CHECK(eval("1/2*n", 5, 1) == Rational(5, 2));
    CHECK(eval("(n+k)*(n-k)", 5, 2) == Rational(21));
    CHECK(eval("2+3*4", 0, 0) == Rational(14));
    CHECK(eval("(2+3)*4", 0, 0) == Rational(20));
    CHECK(eval("8/2/2", 0, 0) == Rational(2));   // left associative
    CHECK(eval("8-3-2", 0, 0) == Rational(3));
    CHECK(eval("--5", 0, 0) == Rational(5));
  }

  TEST_CASE("division by zero reports the site") {
    const CoefficientExpr e = CoefficientExpr::parse("1/(n-1)");
    CHECK(e.eval(0, 1) == Rational(-1));
    try {
      e.eval(1, 1);
      FAIL("expected DivisionByZero");
    } catch (const estk::DivisionByZero& err) {
      CHECK(std::string(err.what()).find("n=1") != std::string::npos);
      CHECK(std::string(err.what()).find("k=1") != std::string::npos);
    }
    // constant zero divisor still evaluates lazily (Div nodes may fail only
    // at evaluation time)
    CHECK_THROWS_AS(CoefficientExpr::parse("1/0").eval(0, 1),
                    estk::DivisionByZero);
  }

  TEST_CASE("parse errors carry positions") {
    try {
      CoefficientExpr::parse("x");
      FAIL("expected ParseError");
    } catch (const estk::ParseError& err) {
      CHECK(std::string(err.what()) == "unexpected token 'x' at position 0");
    }
    CHECK_THROWS_AS(CoefficientExpr::parse(""), estk::ParseError);
    CHECK_THROWS_AS(CoefficientExpr::parse("1+"), estk::ParseError);
    CHECK_THROWS_AS(CoefficientExpr::parse("(1"), estk::ParseError);
    CHECK_THROWS_AS(CoefficientExpr::parse("1 2"), estk::ParseError);
    CHECK_THROWS_AS(CoefficientExpr::parse("n k"), estk::ParseError);
  }

  TEST_CASE("variable mentions") {
    CHECK(CoefficientExpr::parse("n+1").contains_var_n());
    CHECK_FALSE(CoefficientExpr::parse("n+1").contains_var_k());
    CHECK(CoefficientExpr::parse("k*k").contains_var_k());
    CHECK_FALSE(CoefficientExpr::parse("3/2").contains_var_n());
    CHECK(CoefficientExpr::parse("1*k/k").contains_var_k());  // syntactic only
  }

  TEST_CASE("text round trip") {
    const CoefficientExpr e = CoefficientExpr::parse("-(n+1)/k");
    CHECK(e.text() == "-(n+1)/k");
  }
}
