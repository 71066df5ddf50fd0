#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "estk/rational.hpp"

namespace estk {

// Truncated formal power series over Rational: coefficients of t^0 .. t^N
// where N is the truncation order.  Binary operations truncate to the
// smaller operand order; equality compares coefficients up to the smaller
// order.  All arithmetic is exact.
class Series {
 public:
  explicit Series(long order);            // zero series of the given order
  explicit Series(std::vector<Rational> coeffs);  // order = size - 1
  Series(std::initializer_list<Rational> coeffs);

  static Series constant(const Rational& c, long order);
  static Series one(long order) { return constant(1, order); }
  static Series t(long order);
  static Series geometric(long order);    // 1/(1-t)
  static Series exponential(long order);  // e^t

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& coeff(long i) const;
  void set_coeff(long i, const Rational& value);
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;

  // Shrinks to the given order, or zero-extends past the stored one
  // (polynomial semantics for explicit extension requests).
  Series truncated(long order) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& c, const Series& a);
  friend Series operator*(const Series& a, const Rational& c) { return c * a; }

  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  std::string str() const;          // full coefficient list "c0,c1,..."
  std::string str_trimmed() const;  // same with trailing zeros dropped

 private:
  std::vector<Rational> c_;
};

Series reciprocal(const Series& a);                       // needs a[0] != 0
Series compose(const Series& outer, const Series& inner); // needs inner[0] = 0
Series comp_inverse(const Series& f);                     // needs f[0] = 0, f[1] != 0
Series exp_series(const Series& a);                       // needs a[0] = 0
Series log_series(const Series& a);                       // needs a[0] = 1
Series ogf_to_egf(const Series& a);
Series egf_to_ogf(const Series& a);
Series pow(const Series& base, long e);                   // e >= 0

// Parses a comma-separated coefficient list ("1,1,1/2", zero-extended to
// `order`) or one of the builtins "exp", "geom", "one", "t".
Series series_from_literal(const std::string& text, long order);

}  // namespace estk
