#include "estk/riordan.hpp"

#include <algorithm>

#include "estk/errors.hpp"

namespace estk {

TriangularMatrix::TriangularMatrix(long size) {
  if (size < 1) throw IndexOutOfRange("matrix size must be positive");
  rows_.resize(static_cast<std::size_t>(size));
  for (long k = 0; k < size; ++k)
    rows_[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k) + 1,
                                              Rational(0));
}

TriangularMatrix TriangularMatrix::identity(long size) {
  TriangularMatrix m(size);
  for (long k = 0; k < size; ++k) m.set_entry(k, k, Rational(1));
  return m;
}

Rational TriangularMatrix::entry(long k, long l) const {
  if (k < 0 || k >= size() || l < 0 || l >= size())
    throw IndexOutOfRange("matrix index out of range");
  if (l > k) return Rational(0);
  return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

void TriangularMatrix::set_entry(long k, long l, const Rational& value) {
  if (k < 0 || k >= size() || l < 0 || l > k)
    throw IndexOutOfRange("matrix index out of range");
  rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = value;
}

void TriangularMatrix::scale_column(long l, const Rational& c) {
  if (l < 0 || l >= size()) throw IndexOutOfRange("matrix index out of range");
  for (long k = l; k < size(); ++k)
    rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] *= c;
}

TriangularMatrix TriangularMatrix::operator*(const TriangularMatrix& other) const {
  if (size() != other.size()) throw IndexOutOfRange("matrix size mismatch");
  TriangularMatrix out(size());
  for (long k = 0; k < size(); ++k)
    for (long l = 0; l <= k; ++l) {
      Rational acc(0);
      for (long j = l; j <= k; ++j) acc += entry(k, j) * other.entry(j, l);
      out.set_entry(k, l, acc);
    }
  return out;
}

std::vector<Rational> TriangularMatrix::apply(const std::vector<Rational>& seq) const {
  if (static_cast<long>(seq.size()) < size())
    throw SequenceTooShort("sequence shorter than matrix size");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (long k = 0; k < size(); ++k) {
    Rational acc(0);
    for (long l = 0; l <= k; ++l)
      acc += entry(k, l) * seq[static_cast<std::size_t>(l)];
    out.push_back(acc);
  }
  return out;
}

bool TriangularMatrix::is_identity() const {
  for (long k = 0; k < size(); ++k)
    for (long l = 0; l <= k; ++l)
      if (entry(k, l) != Rational(k == l ? 1 : 0)) return false;
  return true;
}

bool operator==(const TriangularMatrix& a, const TriangularMatrix& b) {
  if (a.size() != b.size()) return false;
  return a.rows_ == b.rows_;
}

RiordanArray::RiordanArray(Series g, Series f, Flavor flavor)
    : g_(std::move(g)), f_(std::move(f)), flavor_(flavor) {
  const long order = std::min(g_.order(), f_.order());
  g_ = g_.truncated(order);
  f_ = f_.truncated(order);
  if (g_.coeff(0).is_zero())
    throw DegenerateMatrix("riordan pair needs g with nonzero constant term");
  if (!f_.coeff(0).is_zero())
    throw BadConstantTerm("riordan pair needs f with constant term 0");
  if (order < 1 || f_.coeff(1).is_zero())
    throw NotInvertible("riordan pair needs f with nonzero linear term");
}

Rational RiordanArray::entry(long k, long l) const {
  if (l < 0 || l > k || k > order()) throw IndexOutOfRange("riordan entry out of range");
  const Series column = g_.truncated(k) * pow(f_.truncated(k), l);
  Rational value = column.coeff(k);
  if (flavor_ == Flavor::Exponential)
    value *= Rational::factorial(k) / Rational::factorial(l);
  return value;
}

TriangularMatrix RiordanArray::to_matrix(long n) const {
  if (n < 0) throw IndexOutOfRange("matrix truncation must be non-negative");
  if (n > order()) throw OrderTooSmall("series order too small for requested matrix");
  TriangularMatrix m(n + 1);
  Series column = g_.truncated(n);
  const Series f = f_.truncated(n);
  for (long l = 0; l <= n; ++l) {
    for (long k = l; k <= n; ++k) {
      Rational value = column.coeff(k);
      if (flavor_ == Flavor::Exponential)
        value *= Rational::factorial(k) / Rational::factorial(l);
      m.set_entry(k, l, value);
    }
    if (l < n) column = column * f;
  }
  return m;
}

RiordanArray RiordanArray::multiply(const RiordanArray& other) const {
  if (flavor_ != other.flavor_)
    throw FlavorMismatch("cannot multiply riordan arrays of different flavors");
  return RiordanArray(g_ * compose(other.g_, f_), compose(other.f_, f_), flavor_);
}

RiordanArray RiordanArray::inverse() const {
  const Series fbar = comp_inverse(f_);
  return RiordanArray(reciprocal(compose(g_, fbar)), fbar, flavor_);
}

std::vector<Rational> RiordanArray::apply(const std::vector<Rational>& seq) const {
  const long n = order();
  if (static_cast<long>(seq.size()) < n + 1)
    throw SequenceTooShort("sequence shorter than series order + 1");
  Series a(n);
  for (long l = 0; l <= n; ++l) {
    Rational c = seq[static_cast<std::size_t>(l)];
    if (flavor_ == Flavor::Exponential) c /= Rational::factorial(l);
    a.set_coeff(l, c);
  }
  const Series b = g_ * compose(a, f_);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    Rational c = b.coeff(k);
    if (flavor_ == Flavor::Exponential) c *= Rational::factorial(k);
    out.push_back(c);
  }
  return out;
}

RiordanArray RiordanArray::identity(Flavor flavor, long order) {
  return RiordanArray(Series::one(order), Series::t(order), flavor);
}

bool RiordanArray::is_group_member() const {
  return g_.coeff(0).is_one() && f_.coeff(1).is_one();
}

FromMatrixResult RiordanArray::from_matrix(const TriangularMatrix& m, Flavor flavor) {
  if (m.size() < 2 || m.entry(0, 0).is_zero() || m.entry(1, 1).is_zero())
    throw DegenerateMatrix("matrix needs nonzero (0,0) and (1,1) entries");
  const long n = m.size() - 1;
  Series g(n);
  Series column1(n);
  for (long k = 0; k <= n; ++k) {
    Rational g_coeff = m.entry(k, 0);
    if (flavor == Flavor::Exponential) g_coeff /= Rational::factorial(k);
    g.set_coeff(k, g_coeff);
    if (k >= 1) {
      Rational c = m.entry(k, 1);
      if (flavor == Flavor::Exponential) c /= Rational::factorial(k);
      column1.set_coeff(k, c);
    }
  }
  const Series f = column1 * reciprocal(g);
  const RiordanArray candidate(g, f, flavor);
  for (long k = 0; k <= n; ++k)
    for (long l = 0; l <= k; ++l)
      if (candidate.entry(k, l) != m.entry(k, l)) return {std::nullopt, k, l};
  return {candidate, -1, -1};
}

}  // namespace estk
