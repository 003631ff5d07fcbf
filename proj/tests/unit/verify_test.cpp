// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "bcalc/fields/registry.hpp"
#include "bcalc/verify/cases.hpp"
#include "bcalc/verify/duality.hpp"
#include "bcalc/verify/identities.hpp"
#include "bcalc/verify/report.hpp"

using namespace bcalc;
using namespace bcalc::verify;
using ga::blade_of;
using std::numbers::pi;

namespace {

Multivector blade(int n, std::initializer_list<int> idx, double c = 1.0) {
  return Multivector::blade(ga::Algebra(n), idx.size() ? blade_of(idx) : ga::BladeIndex{}, c);
}

double rel(const Multivector& a, const Multivector& b) { return (a - b).norm() / std::max(b.norm(), 1.0); }

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("catalog") {
  const auto& cat = case_catalog();
  REQUIRE(cat.size() == 9);
  for (std::size_t i = 0; i < cat.size(); ++i) CHECK(cat[i].id == "C" + std::to_string(i));
  CHECK_THROWS_AS(case_spec("C9"), UnknownId);
}

TEST_CASE("case examples") {
  const geom::QuadratureRule rule{8};
  struct Expect {
    const char* id;
    Multivector value;
  };
  // Hand-derived closed forms; the e31 coefficient is minus the e13 one.
  const std::vector<Expect> expected = {
      {"C0", blade(1, {}, 1.0)},
      {"C1", blade(2, {}, -2 * pi)},
      {"C2", blade(2, {1, 2}, 2 * pi)},
      {"C3", blade(3, {}, -4 * pi)},
      {"C4", blade(3, {1, 3}, -4 * pi / 3)},
      {"C5", blade(4, {1, 2, 3, 4}, 4 * pi / 3)},
      {"C6", blade(3, {3}, 8 * pi / 3)},
      {"C7", blade(3, {}, 4 * pi)},
      {"C8", blade(2, {}, 0.0)},
  };
  for (const auto& e : expected) {
    CAPTURE(e.id);
    const CaseReport r = run_case(case_spec(e.id), rule);
    CHECK(r.passed);
    CHECK(r.rel_err <= 1e-6);
    CHECK(rel(r.lhs, e.value) <= 1e-6);
    CHECK(rel(r.rhs, e.value) <= 1e-6);
    CHECK(r.lhs.algebra().dim() == e.value.algebra().dim());
    if (!e.value.is_zero()) {
      CHECK(r.lhs.homogeneous_grade() == r.grade);
      CHECK((r.rhs - ga::grade_projection(r.rhs, r.grade)).norm() <= 1e-9 * r.rhs.norm());
    }
  }
}

TEST_CASE("order 16 tightens every case below 1e-9") {
  RunOptions o;
  o.convergence = false;
  for (const auto& r : run_cases(case_catalog(), geom::QuadratureRule{16}, o)) {
    CAPTURE(r.id);
    CHECK(r.rel_err <= 1e-9);
  }
}

TEST_CASE("sides are computed independently") {
  CaseSpec s = case_spec("C3");
  s.perturbation = 0.5;
  const auto r = run_case(s, geom::QuadratureRule{8});
  // Only the boundary side sees the perturbation.
  CHECK(r.lhs.scalar_part() == doctest::Approx(-4 * pi).epsilon(1e-9));
  CHECK(r.rhs.scalar_part() == doctest::Approx(-6 * pi).epsilon(1e-9));
  CHECK(!r.passed);
  CHECK(!r.anchor_err);
}

TEST_CASE("grade mismatch is reported") {
  CaseSpec s = case_spec("C7");
  // The divergence of this bivector field is the vector 2 e3, not a scalar.
  s.field_override = calc::registered_field("toroidal_bivector");
  CHECK_THROWS_AS(run_case(s, geom::QuadratureRule{4}), GradeMismatch);
  CaseSpec bad = case_spec("C1");
  bad.grade = 5;
  CHECK_THROWS_AS(run_case(bad, geom::QuadratureRule{4}), GradeMismatch);
}

TEST_CASE("a singular field fails the divergence theorem without the point charge") {
  CaseSpec s = case_spec("C3");
  s.field_override = calc::registered_field("monopole_potential");
  const CaseReport r = run_case(s, geom::QuadratureRule{8});
  CHECK(!r.passed);
}

TEST_CASE("parallel suite equals sequential suite") {
  RunOptions seq, par;
  seq.convergence = par.convergence = false;
  par.workers = 4;
  const auto a = run_cases(case_catalog(), geom::QuadratureRule{8}, seq);
  const auto b = run_cases(case_catalog(), geom::QuadratureRule{8}, par);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lhs == b[i].lhs);
    CHECK(a[i].rhs == b[i].rhs);
  }
}

TEST_CASE("convergence slope") {
  const auto r = run_case(case_spec("C4"), geom::QuadratureRule{8});
  REQUIRE(r.slope);
  CHECK(*r.slope < -2.0);
  const auto floor = run_case(case_spec("C0"), geom::QuadratureRule{8});
  CHECK(!floor.slope);
}

TEST_CASE("duality") {
  const geom::QuadratureRule rule{8};
  for (const char* id : {"C1", "C2", "C3", "C7"}) {
    CAPTURE(id);
    const CaseSpec& s = case_spec(id);
    const DualityVerdict v = dualize_case(s, run_case(s, rule), rule);
    CHECK(v.field_identity);
    CHECK(v.closed_form);
    CHECK(v.numeric_err <= 1e-9);
    CHECK(v.passed);
  }
  const auto c1 = dualize_case(case_spec("C1"), run_case(case_spec("C1"), rule), rule);
  CHECK(c1.partner_id == "C2");
  CHECK(rel(c1.partner.lhs, blade(2, {1, 2}, 2 * pi)) < 1e-9);
  const auto c7 = dualize_case(case_spec("C7"), run_case(case_spec("C7"), rule), rule);
  CHECK(c7.partner.lhs.scalar_part() == doctest::Approx(-4 * pi).epsilon(1e-9));
  CHECK_THROWS_AS(dualize_case(case_spec("C4"), run_case(case_spec("C4"), rule), rule), std::invalid_argument);
}

TEST_CASE("identity suite") {
  const auto results = identity_suite();
  REQUIRE(results.size() == 4);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.passed);
    CHECK(r.max_residual <= 1e-6);
    CHECK(r.samples > 0);
  }
}

TEST_CASE("report formats") {
  const auto r0 = run_case(case_spec("C0"), geom::QuadratureRule{8});
  const auto r4 = run_case(case_spec("C4"), geom::QuadratureRule{8});
  const std::vector<CaseReport> reports = {r0, r4};

  const std::string json = format_json(reports);
  const auto parsed = parse_json_reports(json);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].id == "C0");
  CHECK(parsed[0].lhs.coeffs().size() == 2);
  CHECK(parsed[0].lhs.scalar_part() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(parsed[0].lhs.scalar_part() == round12(r0.lhs.scalar_part()));
  CHECK(!parsed[0].slope);
  REQUIRE(parsed[1].slope);
  CHECK(*parsed[1].slope == round12(*r4.slope));
  CHECK(parsed[1].rel_err == round12(r4.rel_err));
  CHECK(parsed[1].order == 8);
  CHECK(format_json(parsed) == json);
  CHECK(json.find("\"slope\": null") != std::string::npos);
  CHECK_THROWS_AS(parse_json_reports("{\"reports\": [{}]}"), std::invalid_argument);

  const std::string csv = format_csv(reports);
  CHECK(csv.rfind("case,grade,abs_err,rel_err,order,slope\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("\nC0,0,") != std::string::npos);

  const std::string text = format_text(reports);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("e13") != std::string::npos);

  CHECK(round12(1.0 / 3.0) == 0.333333333333);
  CHECK(round12(0.0) == 0.0);
}

TEST_CASE("report files") {
  const auto dir = std::filesystem::temp_directory_path() / "bcalc_report_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "r.csv").string();
  const std::vector<CaseReport> reports = {run_case(case_spec("C1"), geom::QuadratureRule{8})};
  emit_report(reports, ReportFormat::Csv, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "case,grade,abs_err,rel_err,order,slope");
  CHECK_THROWS_AS(emit_report(reports, ReportFormat::Json, (dir / "missing" / "r.json").string()), ReportWriteError);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
