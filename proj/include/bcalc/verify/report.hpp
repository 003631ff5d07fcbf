// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bcalc/verify/cases.hpp"

namespace bcalc::verify {

enum class ReportFormat { Json, Csv, Text };

// Rounds to 12 significant digits, the precision of every emitted number.
double round12(double v);

// {"reports": [{"case", "grade", "dim", "blades", "lhs", "rhs", "abs_err",
//   "rel_err", "order", "slope", "anchor_err", "tolerance", "passed"}, ...]}
// lhs/rhs are dense coefficient arrays indexed by blade bitmask; slope and
// anchor_err are null when absent.
std::string format_json(const std::vector<CaseReport>& reports);
// Header case,grade,abs_err,rel_err,order,slope; one row per case, empty slope
// when absent.
std::string format_csv(const std::vector<CaseReport>& reports);
// Aligned table for terminals.
std::string format_text(const std::vector<CaseReport>& reports);
std::string format_report(const std::vector<CaseReport>& reports, ReportFormat format);

// Inverse of format_json. Throws std::invalid_argument on malformed input.
std::vector<CaseReport> parse_json_reports(const std::string& text);

class ReportWriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ReportWriteError when the path cannot be written.
void emit_report(const std::vector<CaseReport>& reports, ReportFormat format, const std::string& path);

}  // namespace bcalc::verify
