#pragma once

#include <gmpxx.h>

#include <string>

#include "estk/errors.hpp"

namespace estk {

// Arbitrary-precision rational scalar, the sole number type of the library.
// Always canonical: gcd(|num|, den) = 1 and den > 0 (zero is 0/1).  Wraps
// GMP's mpq_class, adding checked division and the "p/q" text form.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, 2*x etc.
  Rational(int n) : q_(n) {}   // NOLINT
  explicit Rational(const mpz_class& z) : q_(z) {}

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    mpq_canonicalize(q_.get_mpq_t());
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  // Accepts "p" or "p/q" with optional sign on p (and, leniently, on q).
  static Rational from_string(const std::string& text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
    return s;
  }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    return Rational(den(), num());
  }

  // Integer power; negative exponents require a nonzero base.
  Rational pow_int(long e) const;

  static Rational factorial(long n);
  static Rational binomial(long n, long r);

 private:
  mpq_class q_;
};

}  // namespace estk
