#include "estk/io.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "estk/errors.hpp"
#include "json.hpp"

namespace estk {

namespace {

using json = nlohmann::ordered_json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Right-aligns ragged rows column by column with a two-space gutter.
std::string align_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (widths.size() <= j) widths.resize(j + 1, 0);
      if (row[j].size() > widths[j]) widths[j] = row[j].size();
    }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += "  ";
      out += std::string(widths[j] - row[j].size(), ' ') + row[j];
    }
    out += "\n";
  }
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].str();
  }
  return out;
}

json string_list(const std::vector<Rational>& values) {
  json list = json::array();
  for (const auto& value : values) list.push_back(value.str());
  return list;
}

std::string triangle_csv(const TriangularMatrix& m, const std::string& header) {
  std::string out = header + "\n";
  for (long k = 0; k < m.size(); ++k)
    for (long l = 0; l <= k; ++l)
      out += std::to_string(k) + "," + std::to_string(l) + "," +
             m.entry(k, l).str() + "\n";
  return out;
}

std::string triangle_pretty(const TriangularMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  for (long k = 0; k < m.size(); ++k) {
    std::vector<std::string> row;
    for (long l = 0; l <= k; ++l) row.push_back(m.entry(k, l).str());
    rows.push_back(std::move(row));
  }
  return align_rows(rows);
}

std::string triangle_json(const TriangularMatrix& m) {
  json out;
  out["size"] = m.size();
  json rows = json::array();
  for (long k = 0; k < m.size(); ++k) {
    json row = json::array();
    for (long l = 0; l <= k; ++l) row.push_back(m.entry(k, l).str());
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return dump(out);
}

std::string render_triangle(const TriangularMatrix& m, OutputFormat format,
                            const std::string& csv_header) {
  switch (format) {
    case OutputFormat::Pretty:
      return triangle_pretty(m);
    case OutputFormat::Csv:
      return triangle_csv(m, csv_header);
    case OutputFormat::Json:
      return triangle_json(m);
  }
  throw Error("unknown output format");
}

json params_json(const VerificationReport& report) {
  json params = json::object();
  for (const auto& [name, value] : report.params) params[name] = value.str();
  return params;
}

std::string params_text(const VerificationReport& report,
                        const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < report.params.size(); ++i) {
    if (i > 0) out += separator;
    out += report.params[i].first + "=" + report.params[i].second.str();
  }
  return out;
}

}  // namespace

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "pretty") return OutputFormat::Pretty;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ParseError("unknown output format '" + name + "'", 0);
}

std::string render_table(const SeidelTable& table, OutputFormat format) {
  const long n = table.order();
  switch (format) {
    case OutputFormat::Pretty: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{"k\\n"};
      for (long col = 0; col <= n; ++col) header.push_back(std::to_string(col));
      rows.push_back(std::move(header));
      for (long k = 0; k <= n; ++k) {
        std::vector<std::string> row{std::to_string(k)};
        for (const auto& value : table.row(k)) row.push_back(value.str());
        rows.push_back(std::move(row));
      }
      return align_rows(rows);
    }
    case OutputFormat::Csv: {
      std::string out = "k,n,value\n";
      for (long k = 0; k <= n; ++k) {
        const auto& row = table.row(k);
        for (std::size_t col = 0; col < row.size(); ++col)
          out += std::to_string(k) + "," + std::to_string(col) + "," +
                 row[col].str() + "\n";
      }
      return out;
    }
    case OutputFormat::Json: {
      json out;
      out["N"] = n;
      json rows = json::array();
      for (long k = 0; k <= n; ++k) rows.push_back(string_list(table.row(k)));
      out["rows"] = std::move(rows);
      return dump(out);
    }
  }
  throw Error("unknown output format");
}

std::string render_matrix(const TriangularMatrix& m, OutputFormat format) {
  return render_triangle(m, format, "row,col,value");
}

std::string render_coeffs(const TriangularMatrix& m, OutputFormat format) {
  return render_triangle(m, format, "k,l,value");
}

std::string render_series_pair(const Series& g, const Series& f,
                               OutputFormat format) {
  switch (format) {
    case OutputFormat::Pretty:
      return g.str_trimmed() + "\n" + f.str_trimmed() + "\n";
    case OutputFormat::Csv: {
      std::string out = "name,index,value\n";
      for (long k = 0; k <= g.order(); ++k)
        out += "g," + std::to_string(k) + "," + g.coeff(k).str() + "\n";
      for (long k = 0; k <= f.order(); ++k)
        out += "f," + std::to_string(k) + "," + f.coeff(k).str() + "\n";
      return out;
    }
    case OutputFormat::Json: {
      json out;
      out["g"] = g.str_trimmed();
      out["f"] = f.str_trimmed();
      return dump(out);
    }
  }
  throw Error("unknown output format");
}

std::string render_sequence(const std::vector<Rational>& values,
                            OutputFormat format) {
  switch (format) {
    case OutputFormat::Pretty:
      return join(values) + "\n";
    case OutputFormat::Csv: {
      std::string out = "k,value\n";
      for (std::size_t k = 0; k < values.size(); ++k)
        out += std::to_string(k) + "," + values[k].str() + "\n";
      return out;
    }
    case OutputFormat::Json: {
      json out;
      out["N"] = static_cast<long>(values.size()) - 1;
      out["values"] = string_list(values);
      return dump(out);
    }
  }
  throw Error("unknown output format");
}

std::string render_verification(const VerificationReport& report,
                                OutputFormat format) {
  switch (format) {
    case OutputFormat::Pretty: {
      std::string out = "theorem: " + report.theorem + "\n";
      if (!report.params.empty())
        out += "params: " + params_text(report, " ") + "\n";
      out += "order: " + std::to_string(report.order) + "\n";
      out += std::string("match: ") + (report.match ? "true" : "false") + "\n";
      if (report.first_mismatch)
        out += "first mismatch: index " +
               std::to_string(report.first_mismatch->index) + ", oracle " +
               report.first_mismatch->oracle.str() + ", predicted " +
               report.first_mismatch->predicted.str() + "\n";
      return out;
    }
    case OutputFormat::Csv: {
      std::string out = "theorem,params,N,match,mismatch_index,oracle,predicted\n";
      out += report.theorem + "," + params_text(report, ";") + "," +
             std::to_string(report.order) + "," +
             (report.match ? "true" : "false") + ",";
      if (report.first_mismatch)
        out += std::to_string(report.first_mismatch->index) + "," +
               report.first_mismatch->oracle.str() + "," +
               report.first_mismatch->predicted.str();
      else
        out += ",,";
      return out + "\n";
    }
    case OutputFormat::Json: {
      json out;
      out["theorem"] = report.theorem;
      out["params"] = params_json(report);
      out["N"] = report.order;
      out["match"] = report.match;
      if (report.first_mismatch) {
        json mismatch;
        mismatch["index"] = report.first_mismatch->index;
        mismatch["oracle"] = report.first_mismatch->oracle.str();
        mismatch["predicted"] = report.first_mismatch->predicted.str();
        out["first_mismatch"] = std::move(mismatch);
      } else {
        out["first_mismatch"] = nullptr;
      }
      return dump(out);
    }
  }
  throw Error("unknown output format");
}

std::string render_derangements(const DerangementsReport& report,
                                OutputFormat format) {
  const long n = report.table.order();
  switch (format) {
    case OutputFormat::Pretty: {
      std::string out = "delta table (u = -1, v = n+1, init ones):\n";
      out += render_table(report.table, OutputFormat::Pretty);
      out += std::string("closed form matches table: ") +
             (report.closed_form_match ? "true" : "false") + "\n\n";
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"k", "delta_0^k", "d_k", "k![t^k] exp(-t)/(1-t)"});
      for (long k = 0; k <= n; ++k)
        rows.push_back({std::to_string(k), report.table.cell(0, k).str(),
                        report.derangements[static_cast<std::size_t>(k)].str(),
                        report.egf[static_cast<std::size_t>(k)].str()});
      out += align_rows(rows);
      out += std::string("derangement recurrence matches: ") +
             (report.derangement_match ? "true" : "false") + "\n";
      out += std::string("egf matches: ") + (report.egf_match ? "true" : "false") +
             "\n";
      return out;
    }
    case OutputFormat::Csv: {
      std::string out = "k,delta,closed_form,d_k,egf\n";
      for (long k = 0; k <= n; ++k)
        out += std::to_string(k) + "," + report.table.cell(0, k).str() + "," +
               report.closed_form[static_cast<std::size_t>(k)][0].str() + "," +
               report.derangements[static_cast<std::size_t>(k)].str() + "," +
               report.egf[static_cast<std::size_t>(k)].str() + "\n";
      return out;
    }
    case OutputFormat::Json: {
      json out;
      out["N"] = n;
      json table_rows = json::array();
      for (long k = 0; k <= n; ++k)
        table_rows.push_back(string_list(report.table.row(k)));
      out["table"] = std::move(table_rows);
      json closed_rows = json::array();
      for (const auto& row : report.closed_form)
        closed_rows.push_back(string_list(row));
      out["closed_form"] = std::move(closed_rows);
      out["derangements"] = string_list(report.derangements);
      out["egf"] = string_list(report.egf);
      json checks;
      checks["closed_form"] = report.closed_form_match;
      checks["derangements"] = report.derangement_match;
      checks["egf"] = report.egf_match;
      out["checks"] = std::move(checks);
      return dump(out);
    }
  }
  throw Error("unknown output format");
}

std::string render_log_claim(const LogClaimReport& report, OutputFormat format) {
  const bool prediction_matches = report.oracle == report.predicted;
  switch (format) {
    case OutputFormat::Pretty: {
      std::string out =
          "theorem: T24111 (p = -1, q = -1, s = 1, init ones)\n"
          "order: " +
          std::to_string(report.order) + "\n";
      out += "oracle:    " + join(report.oracle) + "\n";
      out += "predicted: " + join(report.predicted) + "\n";
      out += std::string("prediction matches oracle: ") +
             (prediction_matches ? "true" : "false") + "\n";
      out += "claimed series constant term 1/(1 - ln 2) lies in [" +
             report.claim_lower.str() + ", " + report.claim_upper.str() + "]\n";
      out += std::string("claim matches: ") +
             (report.claim_matches ? "true" : "false");
      if (!report.claim_matches)
        out += " (first mismatch at index " +
               std::to_string(report.mismatch_index) + ", oracle " +
               report.oracle_value.str() + ")";
      return out + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "field,value\n";
      out += "order," + std::to_string(report.order) + "\n";
      out += std::string("prediction_matches,") +
             (prediction_matches ? "true" : "false") + "\n";
      out += "claim_lower," + report.claim_lower.str() + "\n";
      out += "claim_upper," + report.claim_upper.str() + "\n";
      out += std::string("claim_matches,") +
             (report.claim_matches ? "true" : "false") + "\n";
      out += "mismatch_index," + std::to_string(report.mismatch_index) + "\n";
      out += "oracle_value," + report.oracle_value.str() + "\n";
      return out;
    }
    case OutputFormat::Json: {
      json out;
      out["theorem"] = "T24111";
      json params;
      params["p"] = "-1";
      params["q"] = "-1";
      params["s"] = "1";
      out["params"] = std::move(params);
      out["N"] = report.order;
      out["oracle"] = string_list(report.oracle);
      out["predicted"] = string_list(report.predicted);
      out["prediction_matches"] = prediction_matches;
      out["claim_lower"] = report.claim_lower.str();
      out["claim_upper"] = report.claim_upper.str();
      out["claim_matches"] = report.claim_matches;
      out["mismatch_index"] = report.mismatch_index;
      out["oracle_value"] = report.oracle_value.str();
      return dump(out);
    }
  }
  throw Error("unknown output format");
}

}  // namespace estk
