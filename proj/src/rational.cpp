#include "estk/rational.hpp"

namespace estk {

namespace {

mpz_class integer_from(const std::string& text, const std::string& whole) {
  if (text.empty()) throw ParseError("bad rational literal '" + whole + "'", 0);
  try {
    return mpz_class(text, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + whole + "'", 0);
  }
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer_from(s, text));
  const mpz_class num = integer_from(s.substr(0, slash), text);
  const mpz_class den = integer_from(s.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in literal '" + text + "'", slash + 1);
  return Rational(num, den);
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  const bool invert = e < 0;
  const unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && is_zero()) throw DivisionByZero("zero raised to a negative power");
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num().get_mpz_t(), ue);
  mpz_pow_ui(pd.get_mpz_t(), den().get_mpz_t(), ue);
  return invert ? Rational(pd, pn) : Rational(pn, pd);
}

Rational Rational::factorial(long n) {
  if (n < 0) throw IndexOutOfRange("factorial of negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational Rational::binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return Rational(b);
}

}  // namespace estk
