#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "estk/expr.hpp"
#include "estk/rational.hpp"
#include "estk/riordan.hpp"

namespace estk {

// Recurrence coefficient u(n,k) or v(n,k): an evaluator plus display text.
// Wrapping a function rather than an AST lets derived systems (transposes,
// parametric theorem families) carry weights with no symbolic form.
struct Weight {
  std::function<Rational(long, long)> fn;
  std::string text;

  Rational operator()(long n, long k) const { return fn(n, k); }
  static Weight from_expr(const CoefficientExpr& expr);
};

// Initial sequence a_n^0 as a total generator over n >= 0.
struct InitSeq {
  std::function<Rational(long)> fn;
  std::string text;

  Rational operator()(long n) const { return fn(n); }
  static InitSeq ones();
  static InitSeq factorial();
  static InitSeq indicator(long position);
  static InitSeq from_list(std::vector<Rational> values);
  static InitSeq from_expr(const CoefficientExpr& expr);
};

// The system M(u, v, a): a_n^k = u(n,k) a_n^{k-1} + v(n,k) a_{n+1}^{k-1},
// row 0 given by init.
struct SeidelSpec {
  Weight u;
  Weight v;
  InitSeq init;
};

// Triangular slab of cells a_n^k for n + k <= N; rows indexed by k.
class SeidelTable {
 public:
  explicit SeidelTable(std::vector<std::vector<Rational>> rows);  // rows[k][n]

  long order() const { return static_cast<long>(rows_.size()) - 1; }
  const Rational& cell(long n, long k) const;
  const std::vector<Rational>& row(long k) const;
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  std::vector<Rational> initial_sequence() const;  // (a_0^0, ..., a_N^0)
  std::vector<Rational> final_sequence() const;    // (a_0^0, ..., a_0^N)

 private:
  std::vector<std::vector<Rational>> rows_;
};

SeidelTable build_table(const SeidelSpec& spec, long n_max);

// Which arguments u and v genuinely vary with, decided by evaluation at a
// probe grid (value semantics: "1*k/k" counts as constant).
enum class DependenceClass { UnVn, UkVk, UkVn, UnkVk };

std::string to_string(DependenceClass cls);
std::optional<DependenceClass> dependence_class_from_string(const std::string& name);

struct DependenceFlags {
  bool on_n;
  bool on_k;
};

DependenceFlags probe_dependence(const Weight& w);
std::optional<DependenceClass> detect_dependence(const Weight& u, const Weight& v);

// Path-weight coefficients C_n(k,l), three independent ways.
Rational coeff_enum(long n, long k, long l, const Weight& u, const Weight& v);
Rational coeff_unit_vector(long n, long k, long l, const Weight& u, const Weight& v);
Rational coeff_recurrence(long n, long k, long l, const Weight& u, const Weight& v,
                          DependenceClass cls);

// a_n^k recovered from the final sequence (a_0^k, ..., a_0^{k+n}).
Rational reconstruct_from_final(long n, long k, const std::vector<Rational>& final_seq,
                                const Weight& u, const Weight& v);

// C_0 as a matrix: (a_0^k) = C_0 · (a_k^0).
TriangularMatrix associated_matrix(const SeidelSpec& spec, long n_max);

// The transposed system: building its table with init = final sequence of the
// original yields b_n^k = a_k^n.
SeidelSpec transpose_spec(const SeidelSpec& spec, std::vector<Rational> final_seq);

}  // namespace estk
