#pragma once

#include <string>
#include <vector>

#include "estk/riordan.hpp"
#include "estk/seidel.hpp"
#include "estk/transforms.hpp"

namespace estk {

enum class OutputFormat { Pretty, Csv, Json };

OutputFormat output_format_from_string(const std::string& name);

// Every renderer returns the complete output, trailing newline included, so
// commands emit their bytes in a single write.
std::string render_table(const SeidelTable& table, OutputFormat format);
std::string render_matrix(const TriangularMatrix& m, OutputFormat format);
std::string render_coeffs(const TriangularMatrix& m, OutputFormat format);
std::string render_series_pair(const Series& g, const Series& f,
                               OutputFormat format);
std::string render_sequence(const std::vector<Rational>& values,
                            OutputFormat format);
std::string render_verification(const VerificationReport& report,
                                OutputFormat format);
std::string render_derangements(const DerangementsReport& report,
                                OutputFormat format);
std::string render_log_claim(const LogClaimReport& report, OutputFormat format);

}  // namespace estk
