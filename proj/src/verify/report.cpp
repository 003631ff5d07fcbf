// SPDX-License-Identifier: Apache-2.0

#include "bcalc/verify/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bcalc::verify {

namespace {

using nlohmann::json;

std::string g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

json coeff_array(const Multivector& m) {
  json a = json::array();
  for (double c : m.coeffs()) a.push_back(round12(c));
  return a;
}

json optional_number(const std::optional<double>& v) { return v ? json(round12(*v)) : json(nullptr); }

Multivector from_array(const json& a, int dim) {
  const ga::Algebra alg(dim);
  if (!a.is_array() || a.size() != alg.size()) throw std::invalid_argument("coefficient array has the wrong length");
  Multivector m(alg);
  for (std::uint32_t i = 0; i < alg.size(); ++i) m[ga::BladeIndex{i}] = a[i].get<double>();
  return m;
}

std::optional<double> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<double>();
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  return std::strtod(g12(v).c_str(), nullptr);
}

std::string format_json(const std::vector<CaseReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    const ga::Algebra alg = r.lhs.algebra();
    json blades = json::array();
    for (std::uint32_t i = 0; i < alg.size(); ++i) blades.push_back(ga::blade_name(ga::BladeIndex{i}));
    json j;
    j["case"] = r.id;
    j["grade"] = r.grade;
    j["dim"] = alg.dim();
    j["blades"] = blades;
    j["lhs"] = coeff_array(r.lhs);
    j["rhs"] = coeff_array(r.rhs);
    j["abs_err"] = round12(r.abs_err);
    j["rel_err"] = round12(r.rel_err);
    j["order"] = r.order;
    j["slope"] = optional_number(r.slope);
    j["anchor_err"] = optional_number(r.anchor_err);
    j["tolerance"] = round12(r.tolerance);
    j["passed"] = r.passed;
    arr.push_back(std::move(j));
  }
  json doc;
  doc["reports"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::vector<CaseReport> parse_json_reports(const std::string& text) {
  std::vector<CaseReport> out;
  try {
    const json doc = json::parse(text);
    for (const auto& j : doc.at("reports")) {
      CaseReport r;
      r.id = j.at("case").get<std::string>();
      r.grade = j.at("grade").get<int>();
      const int dim = j.at("dim").get<int>();
      r.lhs = from_array(j.at("lhs"), dim);
      r.rhs = from_array(j.at("rhs"), dim);
      r.abs_err = j.at("abs_err").get<double>();
      r.rel_err = j.at("rel_err").get<double>();
      r.order = j.at("order").get<int>();
      r.slope = read_optional(j, "slope");
      r.anchor_err = read_optional(j, "anchor_err");
      r.tolerance = j.at("tolerance").get<double>();
      r.passed = j.at("passed").get<bool>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  return out;
}

std::string format_csv(const std::vector<CaseReport>& reports) {
  std::string s = "case,grade,abs_err,rel_err,order,slope\n";
  for (const auto& r : reports) {
    s += r.id + "," + std::to_string(r.grade) + "," + g12(r.abs_err) + "," + g12(r.rel_err) + "," +
         std::to_string(r.order) + "," + (r.slope ? g12(*r.slope) : "") + "\n";
  }
  return s;
}

std::string format_text(const std::vector<CaseReport>& reports) {
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-4s %-5s %-28s %-28s %-10s %-10s %-5s %-7s %s\n", "case", "grade", "lhs", "rhs",
                "abs_err", "rel_err", "order", "slope", "status");
  os << line;
  for (const auto& r : reports) {
    auto clip = [](const Multivector& m) {
      // Short coefficients, roundoff-level terms dropped, so the column stays readable.
      Multivector rounded(m.algebra());
      const double negligible = 1e-12 * std::max(m.norm(), 1.0);
      for (std::uint32_t i = 0; i < m.algebra().size(); ++i) {
        if (std::abs(m[ga::BladeIndex{i}]) < negligible) continue;
        char b[32];
        std::snprintf(b, sizeof b, "%.6g", m[ga::BladeIndex{i}]);
        rounded[ga::BladeIndex{i}] = std::strtod(b, nullptr);
      }
      return ga::to_string(rounded);
    };
    std::snprintf(line, sizeof line, "%-4s %-5d %-28s %-28s %-10s %-10s %-5d %-7s %s\n", r.id.c_str(), r.grade,
                  clip(r.lhs).c_str(), clip(r.rhs).c_str(), sci(r.abs_err).c_str(), sci(r.rel_err).c_str(), r.order,
                  r.slope ? g12(std::round(*r.slope * 100) / 100).c_str() : "floor", r.passed ? "PASS" : "FAIL");
    os << line;
  }
  return os.str();
}

std::string format_report(const std::vector<CaseReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return format_json(reports);
    case ReportFormat::Csv:
      return format_csv(reports);
    case ReportFormat::Text:
      return format_text(reports);
  }
  return {};
}

void emit_report(const std::vector<CaseReport>& reports, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ReportWriteError("cannot write report to " + path);
  out << format_report(reports, format);
  out.close();
  if (!out) throw ReportWriteError("failed writing report to " + path);
}

}  // namespace bcalc::verify
