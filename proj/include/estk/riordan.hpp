#pragma once

#include <optional>
#include <string>
#include <vector>

#include "estk/series.hpp"

namespace estk {

enum class Flavor { Ordinary, Exponential };

// Dense lower-triangular matrix of Rationals; entries above the diagonal are
// implied zero and read back as such.
class TriangularMatrix {
 public:
  explicit TriangularMatrix(long size);
  static TriangularMatrix identity(long size);

  long size() const { return static_cast<long>(rows_.size()); }
  Rational entry(long k, long l) const;
  void set_entry(long k, long l, const Rational& value);
  void scale_column(long l, const Rational& c);

  TriangularMatrix operator*(const TriangularMatrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& seq) const;

  bool is_identity() const;
  friend bool operator==(const TriangularMatrix& a, const TriangularMatrix& b);
  friend bool operator!=(const TriangularMatrix& a, const TriangularMatrix& b) {
    return !(a == b);
  }

 private:
  std::vector<std::vector<Rational>> rows_;  // rows_[k] has length k+1
};

struct FromMatrixResult;

// Pair (g, f) with g[0] != 0, f[0] = 0, f[1] != 0.  Ordinary entries are
// [t^k] g*f^l; exponential entries are (k!/l!) [t^k] g*f^l.
class RiordanArray {
 public:
  RiordanArray(Series g, Series f, Flavor flavor);

  const Series& g() const { return g_; }
  const Series& f() const { return f_; }
  Flavor flavor() const { return flavor_; }
  long order() const { return g_.order(); }

  Rational entry(long k, long l) const;
  TriangularMatrix to_matrix(long n) const;

  RiordanArray multiply(const RiordanArray& other) const;
  RiordanArray inverse() const;
  std::vector<Rational> apply(const std::vector<Rational>& seq) const;

  static RiordanArray identity(Flavor flavor, long order);
  bool is_group_member() const;  // g[0] = 1 and f[1] = 1

  static FromMatrixResult from_matrix(const TriangularMatrix& m, Flavor flavor);

 private:
  Series g_;
  Series f_;
  Flavor flavor_;
};

// from_matrix outcome: verification failure is a result, not an exception.
struct FromMatrixResult {
  std::optional<RiordanArray> array;
  long fail_k = -1;
  long fail_l = -1;
  bool ok() const { return array.has_value(); }
};

}  // namespace estk
