#include "estk/transforms.hpp"

#include "estk/errors.hpp"

namespace estk {

const std::optional<Rational>& Params::get(char name) const {
  switch (name) {
    case 'p':
      return p;
    case 'q':
      return q;
    case 's':
      return s;
  }
  throw Error("unknown parameter name");
}

namespace {

Weight constant_weight(const Rational& c, std::string text) {
  return Weight{[c](long, long) { return c; }, std::move(text)};
}

Series geometric_scaled(const Rational& p, long order) {  // 1/(1-pt)
  Series s(order);
  Rational c(1);
  for (long k = 0; k <= order; ++k) {
    s.set_coeff(k, c);
    c *= p;
  }
  return s;
}

Series exp_scaled(const Rational& p, long order) {  // exp(pt)
  Series s(order);
  Rational c(1);
  for (long k = 0; k <= order; ++k) {
    s.set_coeff(k, c);
    c = c * p / Rational(k + 1);
  }
  return s;
}

Series mobius_f(const Rational& p, const Rational& q, long order) {  // qt/(1-pt)
  Series s(order);
  Rational c = q;
  for (long k = 1; k <= order; ++k) {
    s.set_coeff(k, c);
    c *= p;
  }
  return s;
}

Series linear_f(const Rational& q, long order) {  // qt
  Series s(order);
  if (order >= 1) s.set_coeff(1, q);
  return s;
}

Series exp_growth_f(const Rational& p, const Rational& s, long order) {
  // (s/p)(exp(pt) - 1): coefficient of t^k is s p^{k-1}/k!
  Series out(order);
  Rational c = s;
  for (long k = 1; k <= order; ++k) {
    out.set_coeff(k, c);
    c = c * p / Rational(k + 1);
  }
  return out;
}

const std::string kLogNote =
    " is not verifiable as a formal power series: its closed form involves "
    "ln(-pt), which has no power series expansion at t = 0";

void validate_params(const TheoremEntry& entry, const Params& params) {
  for (char name : std::string("pqs")) {
    const bool takes = entry.param_names.find(name) != std::string::npos;
    const auto& value = params.get(name);
    if (takes && !value)
      throw BadParameters("theorem " + entry.name + " needs parameter " + name);
    if (!takes && value)
      throw BadParameters("theorem " + entry.name + " does not take parameter " +
                          name);
    if (takes && value->is_zero() &&
        entry.nonzero_params.find(name) != std::string::npos)
      throw BadParameters("theorem " + entry.name + " needs nonzero parameter " +
                          name);
  }
}

std::vector<std::pair<std::string, Rational>> report_params(const TheoremEntry& entry,
                                                            const Params& params) {
  std::vector<std::pair<std::string, Rational>> out;
  for (char name : entry.param_names)
    out.emplace_back(std::string(1, name), *params.get(name));
  return out;
}

}  // namespace

const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> registry = [] {
    std::vector<TheoremEntry> r;
    r.push_back(TheoremEntry{
        TheoremId::Euler, "Euler", true, "", "", "", Flavor::Ordinary,
        InputWeight::One,
        [](const Params&, long order) {
          return RiordanArray(Series::geometric(order),
                              mobius_f(Rational(1), Rational(1), order),
                              Flavor::Ordinary);
        },
        [](const Params&) { return constant_weight(Rational(1), "1"); },
        [](const Params&) { return constant_weight(Rational(1), "1"); }});
    r.push_back(TheoremEntry{
        TheoremId::Seidel, "Seidel", true, "", "", "", Flavor::Exponential,
        InputWeight::One,
        [](const Params&, long order) {
          return RiordanArray(Series::exponential(order), Series::t(order),
                              Flavor::Exponential);
        },
        [](const Params&) { return constant_weight(Rational(1), "1"); },
        [](const Params&) { return constant_weight(Rational(1), "1"); }});
    r.push_back(TheoremEntry{
        TheoremId::T24, "T24", true, "", "pq", "q", Flavor::Ordinary,
        InputWeight::InverseFactorial,
        [](const Params& ps, long order) {
          return RiordanArray(geometric_scaled(*ps.p, order),
                              mobius_f(*ps.p, *ps.q, order), Flavor::Ordinary);
        },
        [](const Params& ps) { return constant_weight(*ps.p, "(" + ps.p->str() + ")"); },
        [](const Params& ps) {
          const Rational q = *ps.q;
          return Weight{[q](long n, long) { return q / Rational(n + 1); },
                        "(" + q.str() + ")/(n+1)"};
        }});
    r.push_back(TheoremEntry{
        TheoremId::T024, "T024", true, "", "pq", "q", Flavor::Exponential,
        InputWeight::Factorial,
        [](const Params& ps, long order) {
          return RiordanArray(geometric_scaled(*ps.p, order),
                              mobius_f(*ps.p, *ps.q, order), Flavor::Exponential);
        },
        [](const Params& ps) {
          const Rational p = *ps.p;
          return Weight{[p](long, long k) { return p * Rational(k); },
                        "(" + p.str() + ")*k"};
        },
        [](const Params& ps) {
          const Rational q = *ps.q;
          return Weight{[q](long, long k) { return q * Rational(k); },
                        "(" + q.str() + ")*k"};
        }});
    r.push_back(TheoremEntry{
        TheoremId::T2412, "T2412", true, "", "pq", "q", Flavor::Exponential,
        InputWeight::Factorial,
        [](const Params& ps, long order) {
          return RiordanArray(exp_scaled(*ps.p, order), linear_f(*ps.q, order),
                              Flavor::Exponential);
        },
        [](const Params& ps) { return constant_weight(*ps.p, "(" + ps.p->str() + ")"); },
        [](const Params& ps) {
          const Rational q = *ps.q;
          return Weight{[q](long n, long) { return q * Rational(n + 1); },
                        "(" + q.str() + ")*(n+1)"};
        }});
    r.push_back(TheoremEntry{
        TheoremId::T024112, "T024112", true, "", "pq", "q", Flavor::Ordinary,
        InputWeight::InverseFactorial,
        [](const Params& ps, long order) {
          return RiordanArray(exp_scaled(*ps.p, order), linear_f(*ps.q, order),
                              Flavor::Ordinary);
        },
        [](const Params& ps) {
          const Rational p = *ps.p;
          return Weight{[p](long, long k) { return p / Rational(k); },
                        "(" + p.str() + ")/k"};
        },
        [](const Params& ps) {
          const Rational q = *ps.q;
          return Weight{[q](long, long k) { return q / Rational(k); },
                        "(" + q.str() + ")/k"};
        }});
    r.push_back(TheoremEntry{
        TheoremId::T241, "T241", true, "", "pqs", "ps", Flavor::Exponential,
        InputWeight::Factorial,
        [](const Params& ps, long order) {
          return RiordanArray(exp_scaled(*ps.q, order),
                              exp_growth_f(*ps.p, *ps.s, order),
                              Flavor::Exponential);
        },
        [](const Params& ps) {
          const Rational p = *ps.p;
          const Rational q = *ps.q;
          return Weight{[p, q](long n, long) { return p * Rational(n) + q; },
                        "(" + p.str() + ")*n+(" + q.str() + ")"};
        },
        [](const Params& ps) {
          const Rational s = *ps.s;
          return Weight{[s](long n, long) { return s * Rational(n + 1); },
                        "(" + s.str() + ")*(n+1)"};
        }});
    r.push_back(TheoremEntry{
        TheoremId::T24111, "T24111", true, "", "pqs", "ps", Flavor::Ordinary,
        InputWeight::InverseFactorial,
        [](const Params& ps, long order) {
          return RiordanArray(exp_scaled(*ps.q, order),
                              exp_growth_f(*ps.p, *ps.s, order), Flavor::Ordinary);
        },
        [](const Params& ps) {
          const Rational p = *ps.p;
          const Rational q = *ps.q;
          return Weight{[p, q](long n, long k) {
                          return (p * Rational(n) + q) / Rational(k);
                        },
                        "((" + p.str() + ")*n+(" + q.str() + "))/k"};
        },
        [](const Params& ps) {
          const Rational s = *ps.s;
          return Weight{[s](long, long k) { return s / Rational(k); },
                        "(" + s.str() + ")/k"};
        }});
    for (const auto& [id, name] :
         std::vector<std::pair<TheoremId, std::string>>{
             {TheoremId::T02411, "T02411"}, {TheoremId::T0241123, "T0241123"}}) {
      const std::string note = "theorem " + name + kLogNote;
      r.push_back(TheoremEntry{
          id, name, false, note, "pqs", "", Flavor::Ordinary, InputWeight::One,
          [note](const Params&, long) -> RiordanArray { throw NonVerifiable(note); },
          [note](const Params&) -> Weight { throw NonVerifiable(note); },
          [note](const Params&) -> Weight { throw NonVerifiable(note); }});
    }
    return r;
  }();
  return registry;
}

const TheoremEntry& theorem_entry(TheoremId id) {
  for (const auto& entry : theorem_registry())
    if (entry.id == id) return entry;
  throw Error("theorem not registered");
}

const TheoremEntry* find_theorem(const std::string& name) {
  for (const auto& entry : theorem_registry())
    if (entry.name == name) return &entry;
  return nullptr;
}

TransformResult parametric_transform(TheoremId id, const Params& params,
                                     const InitSeq& init, long n_max) {
  const TheoremEntry& entry = theorem_entry(id);
  if (!entry.verifiable) throw NonVerifiable(entry.note);
  validate_params(entry, params);
  if (n_max < 0) throw IndexOutOfRange("order must be non-negative");
  RiordanArray pair = entry.pair(params, n_max);
  std::vector<Rational> weighted;
  weighted.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long l = 0; l <= n_max; ++l) {
    Rational w(1);
    if (entry.input_weight == InputWeight::InverseFactorial)
      w = Rational::factorial(l).reciprocal();
    else if (entry.input_weight == InputWeight::Factorial)
      w = Rational::factorial(l);
    weighted.push_back(w * init(l));
  }
  Series predicted(pair.apply(weighted));
  return TransformResult{id, std::move(pair), entry.input_weight,
                         std::move(predicted)};
}

TransformResult euler_transform(const InitSeq& init, long n_max) {
  return parametric_transform(TheoremId::Euler, Params{}, init, n_max);
}

TransformResult seidel_transform(const InitSeq& init, long n_max) {
  return parametric_transform(TheoremId::Seidel, Params{}, init, n_max);
}

VerificationReport verify_transform(TheoremId id, const Params& params,
                                    const InitSeq& init, long n_max) {
  const TheoremEntry& entry = theorem_entry(id);
  if (!entry.verifiable) throw NonVerifiable(entry.note);
  validate_params(entry, params);
  const TransformResult result = parametric_transform(id, params, init, n_max);
  const SeidelSpec family{entry.u(params), entry.v(params), init};
  const std::vector<Rational> oracle = build_table(family, n_max).final_sequence();
  VerificationReport report{entry.name, report_params(entry, params), n_max, true,
                            std::nullopt};
  for (long k = 0; k <= n_max; ++k) {
    const Rational& predicted = result.predicted_final.coeff(k);
    if (oracle[static_cast<std::size_t>(k)] != predicted) {
      report.match = false;
      report.first_mismatch =
          Mismatch{k, oracle[static_cast<std::size_t>(k)], predicted};
      break;
    }
  }
  return report;
}

Params dual_params(const Params& params) {
  if (!params.p || !params.q)
    throw BadParameters("dual parameters need p and q");
  if (params.q->is_zero()) throw BadParameters("dual parameters need nonzero q");
  return Params{-*params.p / *params.q, params.q->reciprocal(), std::nullopt};
}

std::optional<TheoremId> dual_theorem(TheoremId id) {
  switch (id) {
    case TheoremId::T24:
      return TheoremId::T024;
    case TheoremId::T024:
      return TheoremId::T24;
    case TheoremId::T2412:
      return TheoremId::T024112;
    case TheoremId::T024112:
      return TheoremId::T2412;
    default:
      return std::nullopt;
  }
}

VerificationReport duality_report(TheoremId a, TheoremId b, const Params& params,
                                  long n_max) {
  const TheoremEntry& entry_a = theorem_entry(a);
  const TheoremEntry& entry_b = theorem_entry(b);
  const auto expected = dual_theorem(a);
  if (!expected || *expected != b)
    throw BadParameters("theorems " + entry_a.name + " and " + entry_b.name +
                        " are not a dual family pair");
  validate_params(entry_a, params);
  const Params params_b = dual_params(params);
  validate_params(entry_b, params_b);
  const SeidelSpec spec_a{entry_a.u(params), entry_a.v(params), InitSeq::ones()};
  const SeidelSpec spec_b{entry_b.u(params_b), entry_b.v(params_b), InitSeq::ones()};
  const TriangularMatrix ab =
      associated_matrix(spec_a, n_max) * associated_matrix(spec_b, n_max);
  const TriangularMatrix ba =
      associated_matrix(spec_b, n_max) * associated_matrix(spec_a, n_max);
  VerificationReport report{entry_a.name + ":" + entry_b.name,
                            report_params(entry_a, params), n_max, true,
                            std::nullopt};
  long index = 0;
  for (long k = 0; k <= n_max; ++k)
    for (long l = 0; l <= k; ++l, ++index) {
      const Rational want(k == l ? 1 : 0);
      if (ab.entry(k, l) != want || ba.entry(k, l) != want) {
        report.match = false;
        report.first_mismatch = Mismatch{
            index, want,
            ab.entry(k, l) != want ? ab.entry(k, l) : ba.entry(k, l)};
        return report;
      }
    }
  return report;
}

VerificationReport firengiz_dil_check(const Rational& x, const Rational& y,
                                      const InitSeq& init, long n_max) {
  const SeidelSpec spec{constant_weight(x, "(" + x.str() + ")"),
                        constant_weight(y, "(" + y.str() + ")"), init};
  const SeidelTable table = build_table(spec, n_max);
  VerificationReport report{
      "Firengiz-Dil", {{"x", x}, {"y", y}}, n_max, true, std::nullopt};
  long index = 0;
  for (long k = 0; k <= n_max; ++k)
    for (long n = 0; n + k <= n_max; ++n, ++index) {
      const Rational lhs =
          table.cell(n, k) / (Rational::factorial(k) * Rational::factorial(n));
      Rational rhs(0);
      // [u^k t^n] exp(xu) A(t + uy): convolution of x^r/r! with the
      // substituted coefficient a_{n+j} y^j / (n! j!)
      for (long j = 0; j <= k; ++j)
        rhs += x.pow_int(k - j) / Rational::factorial(k - j) * init(n + j) *
               y.pow_int(j) / (Rational::factorial(n) * Rational::factorial(j));
      if (lhs != rhs) {
        report.match = false;
        report.first_mismatch = Mismatch{index, lhs, rhs};
        return report;
      }
    }
  return report;
}

SeidelSpec delta_spec() {
  return SeidelSpec{constant_weight(Rational(-1), "-1"),
                    Weight{[](long n, long) { return Rational(n + 1); }, "n+1"},
                    InitSeq::ones()};
}

Rational derangement_number(long k) {
  if (k < 0) throw IndexOutOfRange("derangement index must be non-negative");
  Rational d(1);
  for (long j = 1; j <= k; ++j)
    d = Rational(j) * d + Rational(j % 2 == 0 ? 1 : -1);
  return d;
}

Rational delta_closed_form(long n, long k) {
  Rational acc(0);
  for (long l = 0; l <= k; ++l) {
    const Rational term = Rational::binomial(k, l) * Rational::factorial(n + l) /
                          Rational::factorial(n);
    acc += ((k - l) % 2 == 0) ? term : -term;
  }
  return acc;
}

DerangementsReport derangements_report(long n_max) {
  SeidelTable table = build_table(delta_spec(), n_max);
  std::vector<std::vector<Rational>> closed(static_cast<std::size_t>(n_max) + 1);
  bool closed_match = true;
  for (long k = 0; k <= n_max; ++k) {
    auto& row = closed[static_cast<std::size_t>(k)];
    row.reserve(static_cast<std::size_t>(n_max - k) + 1);
    for (long n = 0; n + k <= n_max; ++n) {
      row.push_back(delta_closed_form(n, k));
      if (row.back() != table.cell(n, k)) closed_match = false;
    }
  }
  const std::vector<Rational> finals = table.final_sequence();
  const Series egf_series =
      exp_scaled(Rational(-1), n_max) * Series::geometric(n_max);
  std::vector<Rational> derangements;
  std::vector<Rational> egf;
  bool derangement_match = true;
  bool egf_match = true;
  for (long k = 0; k <= n_max; ++k) {
    derangements.push_back(derangement_number(k));
    egf.push_back(Rational::factorial(k) * egf_series.coeff(k));
    if (derangements.back() != finals[static_cast<std::size_t>(k)])
      derangement_match = false;
    if (egf.back() != finals[static_cast<std::size_t>(k)]) egf_match = false;
  }
  return DerangementsReport{std::move(table),        std::move(closed),
                            std::move(derangements), std::move(egf),
                            closed_match,            derangement_match,
                            egf_match};
}

std::pair<Rational, Rational> log_two_bounds(long terms) {
  if (terms < 1) throw IndexOutOfRange("log two bounds need at least one term");
  Rational lo(0);
  Rational power(1);
  for (long j = 1; j <= terms; ++j) {
    power /= Rational(2);
    lo += power / Rational(j);
  }
  // tail: sum_{j>K} 1/(j 2^j) < 1/((K+1) 2^K)
  const Rational hi = lo + power / Rational(terms + 1);
  return {lo, hi};
}

LogClaimReport log_reciprocal_claim_report(long n_max) {
  const Params params{Rational(-1), Rational(-1), Rational(1)};
  const InitSeq init = InitSeq::ones();
  const TheoremEntry& entry = theorem_entry(TheoremId::T24111);
  const SeidelSpec family{entry.u(params), entry.v(params), init};
  const std::vector<Rational> oracle = build_table(family, n_max).final_sequence();
  const TransformResult result =
      parametric_transform(TheoremId::T24111, params, init, n_max);
  const auto [lo2, hi2] = log_two_bounds(24);
  // claimed constant term 1/(1 - ln 2): enclose via the ln 2 bounds
  const Rational claim_lower = (Rational(1) - lo2).reciprocal();
  const Rational claim_upper = (Rational(1) - hi2).reciprocal();
  const Rational& oracle0 = oracle[0];
  const bool matches = !(oracle0 < claim_lower) && !(claim_upper < oracle0);
  return LogClaimReport{n_max,
                        oracle,
                        result.predicted_final.coeffs(),
                        matches ? -1 : 0,
                        oracle0,
                        claim_lower,
                        claim_upper,
                        matches};
}

}  // namespace estk
