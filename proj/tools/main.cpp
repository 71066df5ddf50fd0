#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "estk/errors.hpp"
#include "estk/expr.hpp"
#include "estk/io.hpp"
#include "estk/rational.hpp"
#include "estk/riordan.hpp"
#include "estk/seidel.hpp"
#include "estk/series.hpp"
#include "estk/transforms.hpp"

namespace {

std::vector<estk::Rational> split_rationals(const std::string& text) {
  std::vector<estk::Rational> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t count =
        comma == std::string::npos ? std::string::npos : comma - start;
    values.push_back(estk::Rational::from_string(text.substr(start, count)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

// Initial-sequence grammar: named builtins first, an explicit value list when
// a comma is present, otherwise an expression in n.
estk::InitSeq parse_init(const std::string& spec) {
  if (spec == "ones") return estk::InitSeq::ones();
  if (spec == "factorial") return estk::InitSeq::factorial();
  if (spec.find(',') != std::string::npos)
    return estk::InitSeq::from_list(split_rationals(spec));
  return estk::InitSeq::from_expr(estk::CoefficientExpr::parse(spec));
}

estk::Weight parse_weight(const std::string& text) {
  return estk::Weight::from_expr(estk::CoefficientExpr::parse(text));
}

void emit(const std::string& output_file, const std::string& text) {
  if (output_file.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(output_file, std::ios::binary);
  if (!out) throw estk::Error("cannot open output file '" + output_file + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw estk::Error("cannot write output file '" + output_file + "'");
}

int report_error(const char* what, int code) {
  std::fprintf(stderr, "error: %s\n", what);
  return code;
}

int run(int argc, char** argv) {
  CLI::App app{
      "exact Euler-Seidel matrices, Riordan arrays, and generating-function "
      "transform checks"};
  app.require_subcommand(1);

  long order = 12;
  std::string format = "pretty";
  std::string output_file;
  app.add_option("-N,--order", order, "truncation order N")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"pretty", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", output_file, "write output to FILE instead of stdout");

  auto* table_cmd =
      app.add_subcommand("table", "build the table a_n^k for n + k <= N");
  table_cmd->fallthrough();
  std::string table_u, table_v, table_init;
  table_cmd->add_option("--u", table_u, "weight u(n,k) expression")->required();
  table_cmd->add_option("--v", table_v, "weight v(n,k) expression")->required();
  table_cmd
      ->add_option("--init", table_init,
                   "initial sequence: ones, factorial, a comma list, or an "
                   "expression in n")
      ->required();

  auto* coeffs_cmd =
      app.add_subcommand("coeffs", "coefficient triangle C_n(k,l) for k <= K");
  coeffs_cmd->fallthrough();
  std::string coeffs_u, coeffs_v, coeffs_method = "enum";
  long coeffs_n = 0;
  long coeffs_k = 0;
  coeffs_cmd->add_option("--u", coeffs_u, "weight u(n,k) expression")->required();
  coeffs_cmd->add_option("--v", coeffs_v, "weight v(n,k) expression")->required();
  coeffs_cmd->add_option("--n", coeffs_n, "base column n")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  coeffs_cmd->add_option("--k", coeffs_k, "largest row K")
      ->required()
      ->check(CLI::NonNegativeNumber);
  coeffs_cmd->add_option("--method", coeffs_method, "enum, recurrence, or unit")
      ->check(CLI::IsMember({"enum", "recurrence", "unit"}))
      ->capture_default_str();

  auto* riordan_cmd = app.add_subcommand("riordan", "Riordan array operations");
  riordan_cmd->fallthrough();
  std::string riordan_g, riordan_f, riordan_flavor = "ordinary", riordan_action,
                                    riordan_seq;
  riordan_cmd
      ->add_option("--g", riordan_g,
                   "series literal (comma list) or builtin one/t/geom/exp")
      ->required();
  riordan_cmd->add_option("--f", riordan_f, "series literal or builtin")
      ->required();
  riordan_cmd->add_option("--flavor", riordan_flavor, "ordinary or exponential")
      ->check(CLI::IsMember({"ordinary", "exponential"}))
      ->capture_default_str();
  riordan_cmd->add_option("--action", riordan_action, "matrix, inverse, or apply")
      ->required()
      ->check(CLI::IsMember({"matrix", "inverse", "apply"}));
  auto* seq_opt = riordan_cmd->add_option(
      "--seq", riordan_seq,
      "sequence for apply: ones, factorial, a comma list, or an expression in n");

  auto* verify_cmd =
      app.add_subcommand("verify", "check a theorem against the recurrence oracle");
  verify_cmd->fallthrough();
  std::string verify_theorem, verify_init = "ones", verify_pair, verify_x,
                              verify_y, verify_p, verify_q, verify_s;
  verify_cmd
      ->add_option("theorem", verify_theorem,
                   "registry theorem name, or duality / firengiz / logclaim")
      ->required();
  auto* p_opt = verify_cmd->add_option("--p", verify_p, "parameter p");
  auto* q_opt = verify_cmd->add_option("--q", verify_q, "parameter q");
  auto* s_opt = verify_cmd->add_option("--s", verify_s, "parameter s");
  verify_cmd->add_option("--init", verify_init, "initial sequence")
      ->capture_default_str();
  auto* pair_opt =
      verify_cmd->add_option("--pair", verify_pair, "duality pair NAME:NAME");
  auto* x_opt = verify_cmd->add_option("--x", verify_x, "bivariate check x");
  auto* y_opt = verify_cmd->add_option("--y", verify_y, "bivariate check y");

  auto* derangements_cmd =
      app.add_subcommand("derangements", "derangement application report");
  derangements_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const estk::OutputFormat fmt = estk::output_format_from_string(format);
  std::string text;
  int exit_code = 0;

  if (app.got_subcommand(table_cmd)) {
    const estk::SeidelSpec spec{parse_weight(table_u), parse_weight(table_v),
                                parse_init(table_init)};
    text = estk::render_table(estk::build_table(spec, order), fmt);
  } else if (app.got_subcommand(coeffs_cmd)) {
    if (coeffs_method == "enum" && coeffs_k > 64)
      throw estk::BadParameters("enum method is capped at K = 64");
    const estk::Weight u = parse_weight(coeffs_u);
    const estk::Weight v = parse_weight(coeffs_v);
    std::optional<estk::DependenceClass> cls;
    if (coeffs_method == "recurrence") {
      cls = estk::detect_dependence(u, v);
      if (!cls)
        throw estk::ClassMismatch(
            "no dependence class matches: u and v both depend on n and k");
    }
    estk::TriangularMatrix triangle(coeffs_k + 1);
    for (long k = 0; k <= coeffs_k; ++k)
      for (long l = 0; l <= k; ++l) {
        if (coeffs_method == "enum")
          triangle.set_entry(k, l, estk::coeff_enum(coeffs_n, k, l, u, v));
        else if (coeffs_method == "unit")
          triangle.set_entry(k, l, estk::coeff_unit_vector(coeffs_n, k, l, u, v));
        else
          triangle.set_entry(k, l,
                             estk::coeff_recurrence(coeffs_n, k, l, u, v, *cls));
      }
    text = estk::render_coeffs(triangle, fmt);
  } else if (app.got_subcommand(riordan_cmd)) {
    const estk::Flavor flavor = riordan_flavor == "exponential"
                                    ? estk::Flavor::Exponential
                                    : estk::Flavor::Ordinary;
    const estk::RiordanArray array(estk::series_from_literal(riordan_g, order),
                                   estk::series_from_literal(riordan_f, order),
                                   flavor);
    if (riordan_action == "matrix") {
      text = estk::render_matrix(array.to_matrix(order), fmt);
    } else if (riordan_action == "inverse") {
      const estk::RiordanArray inverse = array.inverse();
      text = estk::render_series_pair(inverse.g(), inverse.f(), fmt);
    } else {
      if (seq_opt->count() == 0)
        throw estk::ParseError("action apply needs --seq", 0);
      const estk::InitSeq seq = parse_init(riordan_seq);
      std::vector<estk::Rational> values;
      values.reserve(static_cast<std::size_t>(order) + 1);
      for (long l = 0; l <= order; ++l) values.push_back(seq(l));
      text = estk::render_sequence(array.apply(values), fmt);
    }
  } else if (app.got_subcommand(verify_cmd)) {
    estk::Params params;
    if (p_opt->count() > 0) params.p = estk::Rational::from_string(verify_p);
    if (q_opt->count() > 0) params.q = estk::Rational::from_string(verify_q);
    if (s_opt->count() > 0) params.s = estk::Rational::from_string(verify_s);
    if (verify_theorem == "duality") {
      if (pair_opt->count() == 0)
        throw estk::ParseError("duality needs --pair NAME:NAME", 0);
      const std::size_t colon = verify_pair.find(':');
      if (colon == std::string::npos)
        throw estk::ParseError("pair must be NAME:NAME", 0);
      const auto* first = estk::find_theorem(verify_pair.substr(0, colon));
      const auto* second = estk::find_theorem(verify_pair.substr(colon + 1));
      if (!first || !second)
        throw estk::ParseError("unknown theorem in pair '" + verify_pair + "'",
                               0);
      const auto report =
          estk::duality_report(first->id, second->id, params, order);
      text = estk::render_verification(report, fmt);
      exit_code = report.match ? 0 : 1;
    } else if (verify_theorem == "firengiz") {
      if (x_opt->count() == 0 || y_opt->count() == 0)
        throw estk::ParseError("firengiz needs --x and --y", 0);
      const auto report = estk::firengiz_dil_check(
          estk::Rational::from_string(verify_x),
          estk::Rational::from_string(verify_y), parse_init(verify_init), order);
      text = estk::render_verification(report, fmt);
      exit_code = report.match ? 0 : 1;
    } else if (verify_theorem == "logclaim") {
      const auto report = estk::log_reciprocal_claim_report(order);
      text = estk::render_log_claim(report, fmt);
      exit_code = report.claim_matches ? 0 : 1;
    } else {
      const auto* entry = estk::find_theorem(verify_theorem);
      if (!entry)
        throw estk::ParseError("unknown theorem '" + verify_theorem + "'", 0);
      const auto report = estk::verify_transform(entry->id, params,
                                                 parse_init(verify_init), order);
      text = estk::render_verification(report, fmt);
      exit_code = report.match ? 0 : 1;
    }
  } else {
    const auto report = estk::derangements_report(order);
    text = estk::render_derangements(report, fmt);
    exit_code = report.all_match() ? 0 : 1;
  }

  emit(output_file, text);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const estk::ParseError& e) {
    return report_error(e.what(), 2);
  } catch (const estk::DivisionByZero& e) {
    return report_error(e.what(), 3);
  } catch (const estk::SequenceTooShort& e) {
    return report_error(e.what(), 3);
  } catch (const estk::InsufficientFinalData& e) {
    return report_error(e.what(), 3);
  } catch (const estk::IndexOutOfRange& e) {
    return report_error(e.what(), 3);
  } catch (const estk::ClassMismatch& e) {
    return report_error(e.what(), 4);
  } catch (const estk::NonVerifiable& e) {
    return report_error(e.what(), 6);
  } catch (const estk::Error& e) {
    return report_error(e.what(), 5);
  } catch (const std::exception& e) {
    return report_error(e.what(), 5);
  }
}
