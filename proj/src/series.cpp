#include "estk/series.hpp"

#include <algorithm>

namespace estk {

Series::Series(long order) {
  if (order < 0) throw IndexOutOfRange("series order must be non-negative");
  c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw IndexOutOfRange("series needs at least one coefficient");
}

Series::Series(std::initializer_list<Rational> coeffs)
    : Series(std::vector<Rational>(coeffs)) {}

Series Series::constant(const Rational& c, long order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::t(long order) {
  Series s(order);
  if (order >= 1) s.c_[1] = Rational(1);
  return s;
}

Series Series::geometric(long order) {
  Series s(order);
  for (auto& c : s.c_) c = Rational(1);
  return s;
}

Series Series::exponential(long order) {
  Series s(order);
  Rational c(1);
  for (long i = 0; i <= order; ++i) {
    s.c_[static_cast<std::size_t>(i)] = c;
    c /= Rational(i + 1);
  }
  return s;
}

const Rational& Series::coeff(long i) const {
  if (i < 0 || i > order()) throw IndexOutOfRange("series coefficient index out of range");
  return c_[static_cast<std::size_t>(i)];
}

void Series::set_coeff(long i, const Rational& value) {
  if (i < 0 || i > order()) throw IndexOutOfRange("series coefficient index out of range");
  c_[static_cast<std::size_t>(i)] = value;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_zero(); });
}

Series Series::truncated(long order) const {
  Series s(order);
  const long upto = std::min(order, this->order());
  for (long i = 0; i <= upto; ++i) s.c_[static_cast<std::size_t>(i)] = coeff(i);
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

Series operator+(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (long i = 0; i <= s.order(); ++i) s.c_[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
  return s;
}

Series operator-(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (long i = 0; i <= s.order(); ++i) s.c_[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
  return s;
}

Series operator*(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (long i = 0; i <= s.order(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (long j = 0; i + j <= s.order(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      s.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
  }
  return s;
}

Series operator*(const Rational& c, const Series& a) {
  Series s = a;
  for (auto& x : s.c_) x *= c;
  return s;
}

bool operator==(const Series& a, const Series& b) {
  const long upto = std::min(a.order(), b.order());
  for (long i = 0; i <= upto; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

std::string Series::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].str();
  }
  return out;
}

std::string Series::str_trimmed() const {
  std::size_t len = c_.size();
  while (len > 1 && c_[len - 1].is_zero()) --len;
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    if (i) out += ",";
    out += c_[i].str();
  }
  return out;
}

Series reciprocal(const Series& a) {
  if (a.coeff(0).is_zero()) throw ZeroConstantTerm("reciprocal needs a nonzero constant term");
  const long N = a.order();
  Series b(N);
  const Rational inv0 = a.coeff(0).reciprocal();
  b.set_coeff(0, inv0);
  // [t^m] a*b = 0 for m >= 1 solved for b_m.
  for (long m = 1; m <= N; ++m) {
    Rational acc(0);
    for (long i = 1; i <= m; ++i) acc += a.coeff(i) * b.coeff(m - i);
    b.set_coeff(m, -inv0 * acc);
  }
  return b;
}

Series compose(const Series& outer, const Series& inner) {
  if (!inner.coeff(0).is_zero())
    throw NonzeroInnerConstant("composition needs inner constant term 0");
  const long N = std::min(outer.order(), inner.order());
  const Series in = inner.truncated(N);
  // Horner evaluation of outer at the inner series.
  Series acc = Series::constant(outer.coeff(outer.order()), N);
  for (long i = outer.order() - 1; i >= 0; --i) {
    acc = acc * in;
    acc.set_coeff(0, acc.coeff(0) + outer.coeff(i));
  }
  return acc;
}

Series comp_inverse(const Series& f) {
  if (!f.coeff(0).is_zero() || f.order() < 1 || f.coeff(1).is_zero())
    throw NotInvertible("compositional inverse needs f[0] = 0 and f[1] != 0");
  const long N = f.order();
  const Rational inv1 = f.coeff(1).reciprocal();
  Series g(N);
  g.set_coeff(1, inv1);
  // With g fixed through order m-1 and g_m unknown, [t^m] f(g) is linear in
  // g_m with coefficient f_1; solve order by order.
  for (long m = 2; m <= N; ++m) {
    const Rational residue = compose(f, g).coeff(m);
    g.set_coeff(m, -inv1 * residue);
  }
  return g;
}

Series exp_series(const Series& a) {
  if (!a.coeff(0).is_zero()) throw BadConstantTerm("exp needs constant term 0");
  const long N = a.order();
  Series b(N);
  b.set_coeff(0, Rational(1));
  // b' = a'b gives n*b_n = sum_{i=1..n} i*a_i*b_{n-i}.
  for (long n = 1; n <= N; ++n) {
    Rational acc(0);
    for (long i = 1; i <= n; ++i) acc += Rational(i) * a.coeff(i) * b.coeff(n - i);
    b.set_coeff(n, acc / Rational(n));
  }
  return b;
}

Series log_series(const Series& a) {
  if (!a.coeff(0).is_one()) throw BadConstantTerm("log needs constant term 1");
  const long N = a.order();
  Series b(N);
  // a*b' = a' gives n*b_n = n*a_n - sum_{j=1..n-1} a_j*(n-j)*b_{n-j}.
  for (long n = 1; n <= N; ++n) {
    Rational acc = Rational(n) * a.coeff(n);
    for (long j = 1; j < n; ++j) acc -= a.coeff(j) * Rational(n - j) * b.coeff(n - j);
    b.set_coeff(n, acc / Rational(n));
  }
  return b;
}

Series ogf_to_egf(const Series& a) {
  Series b = a;
  Rational fact(1);
  for (long i = 1; i <= b.order(); ++i) {
    fact *= Rational(i);
    b.set_coeff(i, b.coeff(i) / fact);
  }
  return b;
}

Series egf_to_ogf(const Series& a) {
  Series b = a;
  Rational fact(1);
  for (long i = 1; i <= b.order(); ++i) {
    fact *= Rational(i);
    b.set_coeff(i, b.coeff(i) * fact);
  }
  return b;
}

Series pow(const Series& base, long e) {
  if (e < 0) throw IndexOutOfRange("series pow needs a non-negative exponent");
  Series acc = Series::one(base.order());
  for (long i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

Series series_from_literal(const std::string& text, long order) {
  std::string s = text;
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s == "exp") return Series::exponential(order);
  if (s == "geom") return Series::geometric(order);
  if (s == "one") return Series::one(order);
  if (s == "t") return Series::t(order);
  if (s.empty()) throw ParseError("empty series literal", 0);
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string part = s.substr(start, comma == std::string::npos ? comma : comma - start);
    coeffs.push_back(Rational::from_string(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Series(std::move(coeffs)).truncated(order);
}

}  // namespace estk
