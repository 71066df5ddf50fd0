#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "estk/riordan.hpp"
#include "estk/seidel.hpp"
#include "estk/series.hpp"

namespace estk {

enum class TheoremId {
  Euler,
  Seidel,
  T24,
  T024,
  T2412,
  T024112,
  T241,
  T24111,
  T02411,
  T0241123,
};

// Which weight multiplies the initial sequence before the Riordan array acts
// on it: (a_0^k) = R (w_l * a_l).
enum class InputWeight { One, InverseFactorial, Factorial };

struct Params {
  std::optional<Rational> p;
  std::optional<Rational> q;
  std::optional<Rational> s;

  const std::optional<Rational>& get(char name) const;
};

// One generating-function theorem as data: the (u, v) family it covers and
// the closed-form Riordan pair predicting the final sequence.
struct TheoremEntry {
  TheoremId id;
  std::string name;
  bool verifiable;
  std::string note;  // for non-verifiable entries: why
  std::string param_names;
  std::string nonzero_params;
  Flavor flavor;
  InputWeight input_weight;
  std::function<RiordanArray(const Params&, long)> pair;
  std::function<Weight(const Params&)> u;
  std::function<Weight(const Params&)> v;
};

const std::vector<TheoremEntry>& theorem_registry();
const TheoremEntry& theorem_entry(TheoremId id);
const TheoremEntry* find_theorem(const std::string& name);

struct TransformResult {
  TheoremId theorem_id;
  RiordanArray riordan;
  InputWeight input_weight;
  Series predicted_final;  // values a_0^k
};

struct Mismatch {
  long index;
  Rational oracle;
  Rational predicted;
};

struct VerificationReport {
  std::string theorem;
  std::vector<std::pair<std::string, Rational>> params;
  long order;
  bool match;
  std::optional<Mismatch> first_mismatch;
};

TransformResult parametric_transform(TheoremId id, const Params& params,
                                     const InitSeq& init, long n_max);
TransformResult euler_transform(const InitSeq& init, long n_max);
TransformResult seidel_transform(const InitSeq& init, long n_max);

// Builds the family's table, compares its final sequence against the
// theorem's prediction coefficient by coefficient.
VerificationReport verify_transform(TheoremId id, const Params& params,
                                    const InitSeq& init, long n_max);

// Parameters of the transpose family: (p, q) -> (-p/q, 1/q) for the
// T24 <-> T024 and T2412 <-> T024112 pairs.
Params dual_params(const Params& params);
std::optional<TheoremId> dual_theorem(TheoremId id);

// Checks that the associated matrices of the two families are mutual matrix
// inverses, with the second family's parameters derived by dual_params.
VerificationReport duality_report(TheoremId a, TheoremId b, const Params& params,
                                  long n_max);

// Bivariate identity: sum a_n^k u^k t^n / (k! n!) = exp(xu) A(t + uy) for the
// constant-weight system u == x, v == y, compared to total degree n_max.
VerificationReport firengiz_dil_check(const Rational& x, const Rational& y,
                                      const InitSeq& init, long n_max);

// Derangement application: the system u = -1, v = n+1 with all-ones start.
SeidelSpec delta_spec();
Rational derangement_number(long k);          // d_k = k d_{k-1} + (-1)^k
Rational delta_closed_form(long n, long k);   // sum (-1)^{k-l} C(k,l) (n+l)!/n!

struct DerangementsReport {
  SeidelTable table;
  std::vector<std::vector<Rational>> closed_form;  // same layout as table rows
  std::vector<Rational> derangements;              // d_k
  std::vector<Rational> egf;                       // k! [t^k] exp(-t)/(1-t)
  bool closed_form_match;
  bool derangement_match;
  bool egf_match;
  bool all_match() const { return closed_form_match && derangement_match && egf_match; }
};

DerangementsReport derangements_report(long n_max);

// Certified rational bounds lo < ln 2 < hi from the series sum 1/(j 2^j).
std::pair<Rational, Rational> log_two_bounds(long terms);

// The claimed closed form 1/(1 + ln(1/(1 + e^t))) for the system
// u = -(n+1)/k, v = 1/k on ones: its constant term is 1/(1 - ln 2), provably
// different from the oracle's a_0^0 = 1, so the claim fails at index 0.
struct LogClaimReport {
  long order;
  std::vector<Rational> oracle;   // recurrence finals
  std::vector<Rational> predicted;  // transform prediction (matches oracle)
  long mismatch_index;            // first index where the claim provably fails
  Rational oracle_value;          // oracle at that index
  Rational claim_lower;           // certified bounds on the claimed value
  Rational claim_upper;
  bool claim_matches;             // false
};

LogClaimReport log_reciprocal_claim_report(long n_max);

}  // namespace estk
