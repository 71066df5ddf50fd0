#include "estk/seidel.hpp"

#include <array>
#include <utility>

#include "estk/errors.hpp"

namespace estk {

Weight Weight::from_expr(const CoefficientExpr& expr) {
  return Weight{[expr](long n, long k) { return expr.eval(n, k); }, expr.text()};
}

InitSeq InitSeq::ones() {
  return InitSeq{[](long) { return Rational(1); }, "ones"};
}

InitSeq InitSeq::factorial() {
  return InitSeq{[](long n) { return Rational::factorial(n); }, "factorial"};
}

InitSeq InitSeq::indicator(long position) {
  return InitSeq{[position](long n) { return Rational(n == position ? 1 : 0); },
                 "e_" + std::to_string(position)};
}

InitSeq InitSeq::from_list(std::vector<Rational> values) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text += ",";
    text += values[i].str();
  }
  auto fn = [values = std::move(values)](long n) {
    if (n < 0 || n >= static_cast<long>(values.size()))
      throw SequenceTooShort("initial sequence list has no entry at n=" +
                             std::to_string(n));
    return values[static_cast<std::size_t>(n)];
  };
  return InitSeq{std::move(fn), std::move(text)};
}

InitSeq InitSeq::from_expr(const CoefficientExpr& expr) {
  if (expr.contains_var_k())
    throw ParseError("variable k not allowed in an initial sequence expression",
                     expr.text().find('k'));
  return InitSeq{[expr](long n) { return expr.eval(n, 0); }, expr.text()};
}

SeidelTable::SeidelTable(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw IndexOutOfRange("table needs at least row 0");
  const long n_max = order();
  for (long k = 0; k <= n_max; ++k)
    if (static_cast<long>(rows_[static_cast<std::size_t>(k)].size()) != n_max + 1 - k)
      throw IndexOutOfRange("table row " + std::to_string(k) + " has wrong length");
}

const Rational& SeidelTable::cell(long n, long k) const {
  if (k < 0 || k > order() || n < 0 || n + k > order())
    throw IndexOutOfRange("table cell (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ") outside truncation");
  return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

const std::vector<Rational>& SeidelTable::row(long k) const {
  if (k < 0 || k > order()) throw IndexOutOfRange("table row out of range");
  return rows_[static_cast<std::size_t>(k)];
}

std::vector<Rational> SeidelTable::initial_sequence() const { return rows_[0]; }

std::vector<Rational> SeidelTable::final_sequence() const {
  std::vector<Rational> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row[0]);
  return out;
}

SeidelTable build_table(const SeidelSpec& spec, long n_max) {
  if (n_max < 0) throw IndexOutOfRange("table order must be non-negative");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n_max) + 1);
  rows[0].reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) rows[0].push_back(spec.init(n));
  for (long k = 1; k <= n_max; ++k) {
    auto& row = rows[static_cast<std::size_t>(k)];
    const auto& prev = rows[static_cast<std::size_t>(k) - 1];
    row.reserve(static_cast<std::size_t>(n_max - k) + 1);
    for (long n = 0; n <= n_max - k; ++n)
      row.push_back(spec.u(n, k) * prev[static_cast<std::size_t>(n)] +
                    spec.v(n, k) * prev[static_cast<std::size_t>(n) + 1]);
  }
  return SeidelTable(std::move(rows));
}

std::string to_string(DependenceClass cls) {
  switch (cls) {
    case DependenceClass::UnVn:
      return "u(n)v(n)";
    case DependenceClass::UkVk:
      return "u(k)v(k)";
    case DependenceClass::UkVn:
      return "u(k)v(n)";
    case DependenceClass::UnkVk:
      return "u(n,k)v(k)";
  }
  throw Error("unreachable dependence class");
}

std::optional<DependenceClass> dependence_class_from_string(const std::string& name) {
  for (DependenceClass cls : {DependenceClass::UnVn, DependenceClass::UkVk,
                              DependenceClass::UkVn, DependenceClass::UnkVk})
    if (to_string(cls) == name) return cls;
  return std::nullopt;
}

namespace {

constexpr std::array<long, 6> kProbeN{0, 1, 2, 3, 5, 8};
constexpr std::array<long, 6> kProbeK{1, 2, 3, 4, 7, 9};

// True when w genuinely varies with the chosen argument on the probe grid.
// Along each line of fixed other-argument: a mix of failing and succeeding
// sites is domain dependence; lines that fail everywhere are uninformative.
// A weight failing on the entire grid counts as dependent on both arguments.
bool varies_with(const Weight& w, bool vary_n) {
  const auto& fixed_grid = vary_n ? kProbeK : kProbeN;
  const auto& varied_grid = vary_n ? kProbeN : kProbeK;
  bool informative = false;
  for (long fixed : fixed_grid) {
    std::optional<Rational> seen;
    bool any_value = false;
    bool any_throw = false;
    bool differs = false;
    for (long varied : varied_grid) {
      const long n = vary_n ? varied : fixed;
      const long k = vary_n ? fixed : varied;
      try {
        const Rational value = w(n, k);
        if (seen && *seen != value) differs = true;
        if (!seen) seen = value;
        any_value = true;
      } catch (const Error&) {
        any_throw = true;
      }
    }
    if (differs || (any_value && any_throw)) return true;
    if (any_value) informative = true;
  }
  return !informative;
}

bool class_applies(DependenceClass cls, const DependenceFlags& du,
                   const DependenceFlags& dv) {
  switch (cls) {
    case DependenceClass::UnVn:
      return !du.on_k && !dv.on_k;
    case DependenceClass::UkVk:
      return !du.on_n && !dv.on_n;
    case DependenceClass::UkVn:
      return !du.on_n && !dv.on_k;
    case DependenceClass::UnkVk:
      return !dv.on_n;
  }
  throw Error("unreachable dependence class");
}

// dp[d][k][l] = C_{n+d}(k, l).  Only the u(n,k)v(k) class couples adjacent
// d slices (C_m(k,l) pulls C_{m+1}(k-1,l-1), so slice d is needed down to
// k <= K-d); the other classes keep n fixed and use the single slice d = 0.
std::vector<std::vector<std::vector<Rational>>> recurrence_tables(
    long n, long K, const Weight& u, const Weight& v, DependenceClass cls) {
  const bool shifted = cls == DependenceClass::UnkVk;
  const long span = shifted ? K : 0;
  std::vector<std::vector<std::vector<Rational>>> dp(static_cast<std::size_t>(span) + 1);
  for (long d = 0; d <= span; ++d) {
    auto& slice = dp[static_cast<std::size_t>(d)];
    slice.resize(static_cast<std::size_t>(K) + 1);
    for (long k = 0; k <= K; ++k)
      slice[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k) + 1,
                                                Rational(0));
    slice[0][0] = Rational(1);
    const long m = n + d;
    const long k_top = shifted ? K - d : K;
    Rational u_prod(1);
    for (long k = 1; k <= k_top; ++k) {
      u_prod *= u(m, k);
      slice[static_cast<std::size_t>(k)][0] = u_prod;
      Rational v_prod(1);
      for (long j = 0; j < k; ++j) v_prod *= v(m + j, k - j);
      slice[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = v_prod;
    }
  }
  for (long k = 2; k <= K; ++k)
    for (long d = 0; d <= (shifted ? K - k : 0L); ++d) {
      const long m = n + d;
      auto& row = dp[static_cast<std::size_t>(d)][static_cast<std::size_t>(k)];
      const auto& below = dp[static_cast<std::size_t>(d)][static_cast<std::size_t>(k) - 1];
      const auto& below_shift =
          dp[static_cast<std::size_t>(d) + (shifted ? 1 : 0)][static_cast<std::size_t>(k) - 1];
      for (long l = 1; l < k; ++l) {
        switch (cls) {
          case DependenceClass::UnVn:
            row[static_cast<std::size_t>(l)] =
                v(m + l - 1, 1) * below[static_cast<std::size_t>(l) - 1] +
                u(m + l, 1) * below[static_cast<std::size_t>(l)];
            break;
          case DependenceClass::UkVk:
            row[static_cast<std::size_t>(l)] =
                v(0, k) * below[static_cast<std::size_t>(l) - 1] +
                u(0, k) * below[static_cast<std::size_t>(l)];
            break;
          case DependenceClass::UkVn:
            row[static_cast<std::size_t>(l)] =
                v(m + l - 1, 1) * below[static_cast<std::size_t>(l) - 1] +
                u(0, k) * below[static_cast<std::size_t>(l)];
            break;
          case DependenceClass::UnkVk:
            row[static_cast<std::size_t>(l)] =
                v(0, k) * below_shift[static_cast<std::size_t>(l) - 1] +
                u(m, k) * below[static_cast<std::size_t>(l)];
            break;
        }
      }
    }
  return dp;
}

// b_n^k = -(u/v)(k-1, n+1) b_n^{k-1} + (1/v)(k-1, n+1) b_{n+1}^{k-1}: the
// original recurrence solved for a_{n+1}^{k-1} and reindexed through the
// transposition b_j^i = a_i^j.
std::pair<Weight, Weight> transpose_weights(const Weight& u, const Weight& v) {
  auto divisor = [v](long n, long k) {
    const Rational value = v(k - 1, n + 1);
    if (value.is_zero())
      throw DivisionByZero("v vanishes at (n=" + std::to_string(k - 1) +
                               ", k=" + std::to_string(n + 1) + ")",
                           k - 1, n + 1);
    return value;
  };
  Weight tu{[u, divisor](long n, long k) { return -(u(k - 1, n + 1) / divisor(n, k)); },
            "-(" + u.text + ")/(" + v.text + ") transposed"};
  Weight tv{[divisor](long n, long k) { return divisor(n, k).reciprocal(); },
            "1/(" + v.text + ") transposed"};
  return {std::move(tu), std::move(tv)};
}

}  // namespace

DependenceFlags probe_dependence(const Weight& w) {
  return DependenceFlags{varies_with(w, true), varies_with(w, false)};
}

std::optional<DependenceClass> detect_dependence(const Weight& u, const Weight& v) {
  const DependenceFlags du = probe_dependence(u);
  const DependenceFlags dv = probe_dependence(v);
  if (!du.on_k && !dv.on_k) return DependenceClass::UnVn;
  if (!du.on_n && !dv.on_n) return DependenceClass::UkVk;
  if (!du.on_n && !dv.on_k) return DependenceClass::UkVn;
  if (!dv.on_n) return DependenceClass::UnkVk;
  return std::nullopt;
}

Rational coeff_enum(long n, long k, long l, const Weight& u, const Weight& v) {
  if (n < 0 || l < 0 || l > k)
    throw IndexOutOfRange("coefficient indices need n >= 0 and 0 <= l <= k");
  const long a_size = k - l;
  std::vector<long> comb(static_cast<std::size_t>(a_size));
  for (long i = 0; i < a_size; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
  Rational total(0);
  while (true) {
    Rational prod(1);
    // h_i = (i+1)-th largest member of the subset
    for (long i = 0; i < a_size; ++i) {
      const long h = comb[static_cast<std::size_t>(a_size - 1 - i)];
      prod *= u(n + k - h - i, h);
    }
    // m_j = (j+1)-th largest member of the complement
    long idx = a_size - 1;
    long j = 0;
    for (long value = k; value >= 1; --value) {
      if (idx >= 0 && comb[static_cast<std::size_t>(idx)] == value) {
        --idx;
        continue;
      }
      prod *= v(n + j, value);
      ++j;
    }
    total += prod;
    long i = a_size - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == k - (a_size - 1 - i)) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (long p = i + 1; p < a_size; ++p)
      comb[static_cast<std::size_t>(p)] = comb[static_cast<std::size_t>(p) - 1] + 1;
  }
  return total;
}

Rational coeff_unit_vector(long n, long k, long l, const Weight& u, const Weight& v) {
  if (n < 0 || l < 0 || l > k)
    throw IndexOutOfRange("coefficient indices need n >= 0 and 0 <= l <= k");
  const SeidelSpec probe{u, v, InitSeq::indicator(n + l)};
  return build_table(probe, n + k).cell(n, k);
}

Rational coeff_recurrence(long n, long k, long l, const Weight& u, const Weight& v,
                          DependenceClass cls) {
  if (n < 0 || l < 0 || l > k)
    throw IndexOutOfRange("coefficient indices need n >= 0 and 0 <= l <= k");
  if (!class_applies(cls, probe_dependence(u), probe_dependence(v)))
    throw ClassMismatch("weights depend on a variable excluded by class " +
                        to_string(cls));
  const auto dp = recurrence_tables(n, k, u, v, cls);
  return dp[0][static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

Rational reconstruct_from_final(long n, long k, const std::vector<Rational>& final_seq,
                                const Weight& u, const Weight& v) {
  if (n < 0 || k < 0) throw IndexOutOfRange("cell indices must be non-negative");
  if (static_cast<long>(final_seq.size()) < n + k + 1)
    throw InsufficientFinalData("final sequence needs entries up to index " +
                                std::to_string(n + k));
  const auto [tu, tv] = transpose_weights(u, v);
  Rational acc(0);
  for (long l = 0; l <= n; ++l)
    acc += coeff_enum(k, n, l, tu, tv) * final_seq[static_cast<std::size_t>(k + l)];
  return acc;
}

TriangularMatrix associated_matrix(const SeidelSpec& spec, long n_max) {
  TriangularMatrix m(n_max + 1);
  if (const auto cls = detect_dependence(spec.u, spec.v)) {
    const auto dp = recurrence_tables(0, n_max, spec.u, spec.v, *cls);
    for (long k = 0; k <= n_max; ++k)
      for (long l = 0; l <= k; ++l)
        m.set_entry(k, l, dp[0][static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]);
  } else {
    for (long k = 0; k <= n_max; ++k)
      for (long l = 0; l <= k; ++l)
        m.set_entry(k, l, coeff_enum(0, k, l, spec.u, spec.v));
  }
  return m;
}

SeidelSpec transpose_spec(const SeidelSpec& spec, std::vector<Rational> final_seq) {
  auto [tu, tv] = transpose_weights(spec.u, spec.v);
  return SeidelSpec{std::move(tu), std::move(tv),
                    InitSeq::from_list(std::move(final_seq))};
}

}  // namespace estk
