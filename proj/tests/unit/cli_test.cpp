// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>

#include "bcalc/cli/cli.hpp"
#include "bcalc/cli/config.hpp"
#include "bcalc/cli/expr.hpp"
#include "bcalc/cli/scene.hpp"
#include "bcalc/cli/svg.hpp"
#include "bcalc/fields/registry.hpp"
#include "bcalc/manifolds/library.hpp"
#include "bcalc/verify/report.hpp"
#include "../support/expr_corpus.hpp"

using namespace bcalc;
using namespace bcalc::cli;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int rc = cli_run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("bcalc_cli_" + std::to_string(std::rand()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value) {
      setenv("BOUNDARY_CALC_ORDER", value, 1);
    } else {
      unsetenv("BOUNDARY_CALC_ORDER");
    }
  }
  ~EnvGuard() { unsetenv("BOUNDARY_CALC_ORDER"); }
};

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("expression examples") {
  const FieldExpr rot = parse_field_expr("-x2 e1 + x1 e2");
  CHECK(rot.dim() == 2);
  const auto f = rot.compile();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 100; ++k) {
    const calc::Point x{u(rng), u(rng)};
    REQUIRE(f(x) == calc::registered_field("rotor2d")(x));
  }
  const auto spin = parse_field_expr("x1 e23 + x2 e31 + x3 e12").compile();
  for (int k = 0; k < 100; ++k) {
    const calc::Point x{u(rng), u(rng), u(rng)};
    REQUIRE(spin(x) == calc::registered_field("radial_spin3d")(x));
  }
  CHECK(print_field_expr(parse_field_expr("e12 + e12")) == "2 e12");
  CHECK(print_field_expr(parse_field_expr("e12 - e12")) == "0");
  CHECK(print_field_expr(parse_field_expr("x2 e1 + 3 + x1^2")) == "3 + x1^2 + x2 e1");
  CHECK(print_field_expr(parse_field_expr("2*x1*x1 e11")) == "2 x1^2");
  CHECK(print_field_expr(parse_field_expr("0.5 x3 e21", 3)) == "-0.5 x3 e12");
  CHECK(parse_field_expr("x1", 4).dim() == 4);
}

TEST_CASE("expression errors carry positions") {
  auto position_of = [](const std::string& text, int dim = 0) -> std::size_t {
    try {
      parse_field_expr(text, dim);
    } catch (const ExprError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("x1 +") == 4);
  CHECK(position_of("x1 e") == 4);
  CHECK(position_of("2 x0") == 3);
  CHECK(position_of("x1 * + x2") == 5);
  CHECK(position_of("x1 x2 q") == 6);
  CHECK(position_of("") == 0);
  CHECK_THROWS_AS(parse_field_expr("x1 e14", 3), DimensionError);
  CHECK(position_of("x1 e14", 3) == 5);
  CHECK_THROWS_AS(parse_field_expr("x5", 4), DimensionError);
}

TEST_CASE("expression round trip on a 200-expression corpus") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const int dim = 1 + k % 4;
    const std::string text = corpus::random_expr_text(rng, dim);
    CAPTURE(text);
    const FieldExpr once = parse_field_expr(text, dim);
    const std::string printed = print_field_expr(once);
    const FieldExpr twice = parse_field_expr(printed, dim);
    REQUIRE(twice == once);
    REQUIRE(print_field_expr(twice) == printed);
  }
}

TEST_CASE("config parsing") {
  const Config c = Config::parse(
      "# comment\n[case]\nid = \"C3\"  # trailing\ntolerance = 1e-7\n\n[quadrature]\norder = 12\n[field]\n"
      "expr = \"x1 e23 # not a comment\"\n");
  CHECK(c.get_string("case", "id") == "C3");
  CHECK(c.get_double("case", "tolerance") == 1e-7);
  CHECK(c.get_int("quadrature", "order") == 12);
  CHECK(c.get_double("quadrature", "order") == 12.0);
  CHECK(c.get_string("field", "expr") == "x1 e23 # not a comment");
  CHECK(!c.get_string("render", "scene"));
  CHECK_THROWS_AS(Config::parse("[cases]\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse("[case]\ncolour = 1\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse("order = 3\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse("[quadrature]\norder = \"8\"\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse("[case]\nid = \"C1\nid2\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse("[case]\nid = \"C1\"\nid = \"C2\"\n"), ConfigError);
  CHECK_THROWS_AS(Config::load("/nonexistent/bcalc.toml"), ConfigError);
}

TEST_CASE("scene glyph counts") {
  const std::vector<std::pair<const char*, std::size_t>> expected = {
      {"fig3_gradient", 3},  {"fig4_green", 37},  {"fig5_div2d", 37},          {"fig6_radial_spin", 26},
      {"fig7_toroidal", 40}, {"fig8b_vector_potential", 48}, {"monopole_potential", 26}, {"projection_front_view", 32},
  };
  for (const auto& [name, n] : expected) {
    CAPTURE(name);
    const SceneSpec s = scene_spec(name);
    std::size_t lattice_times_grades = 0;
    for (const auto& l : s.layers) lattice_times_grades += l.lattice.size() * l.grades.size();
    CHECK(lattice_times_grades == n);
    CHECK(build_glyphs(s).size() == n);
    const std::string svg = render_svg(s);
    CHECK(count(svg, "<g class=\"glyph ") == n);
    CHECK(svg == render_svg(scene_spec(name)));
  }
  CHECK_THROWS_AS(scene_spec("fig9"), UnknownId);
  CHECK(scene_names().size() == expected.size());
}

TEST_CASE("fig3 endpoint dots scale with the endpoint values") {
  const std::string svg = render_svg(scene_spec("fig3_gradient"));
  const std::regex dot("class=\"glyph scalar\"[^>]*><circle [^>]* r=\"([0-9.]+)\"");
  std::vector<double> radii;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), dot); it != std::sregex_iterator(); ++it) {
    radii.push_back(std::stod((*it)[1]));
  }
  REQUIRE(radii.size() == 2);
  CHECK(radii[1] / radii[0] == doctest::Approx(8.0));
  CHECK(count(svg, "class=\"glyph vector\"") == 1);
}

TEST_CASE("fig6 glyphs are coherent with the sphere measure") {
  const SceneSpec s = scene_spec("fig6_radial_spin");
  const auto glyphs = build_glyphs(s);
  const geom::Manifold sphere = geom::boundary_of(geom::named_manifold("unit_ball"));
  const double q = std::numbers::pi / 2;
  for (const auto& g : glyphs) {
    REQUIRE(g.kind == GlyphKind::Disc);
    REQUIRE(g.coherence == 1);
    // Chart holding this point: polar patch i, azimuth patch k, nudged off the poles.
    const double polar = std::acos(std::clamp(g.position[2], -1.0, 1.0));
    double az = std::atan2(g.position[1], g.position[0]);
    if (az < 0) az += 2 * std::numbers::pi;
    const int i = std::min(1, static_cast<int>(polar / q));
    const int k = std::min(3, static_cast<int>(az / q));
    const double u[2] = {std::clamp(polar / q - i, 0.01, 0.99), std::clamp(az / q - k, 0.01, 0.99)};
    const auto dm = geom::directed_measure(sphere.charts()[static_cast<std::size_t>(4 * i + k)], u);
    REQUIRE(ga::scalar_product(g.value, ga::reverse(dm.mvector)) > 0.0);
  }
  CHECK(count(render_svg(s), "data-coherent=\"+1\"") == 26);
}

TEST_CASE("bivector screen orientation") {
  const std::string green = render_svg(scene_spec("fig4_green"));
  // Curl of the rotor field is +2 e12: every interior disc circulates counter-clockwise seen from above.
  CHECK(count(green, "class=\"glyph bivector\" data-layer=\"interior\" data-grade=\"2\" data-orient=\"+1\"") == 21);
  Glyph g;
  g.kind = GlyphKind::Disc;
  g.value = Multivector::blade(ga::Algebra(3), ga::blade_of({1, 2}), -1.0);
  CHECK(screen_orientation(g, View::Top) == -1);
  g.value = Multivector::blade(ga::Algebra(3), ga::blade_of({2, 3}), 1.0);
  CHECK(screen_orientation(g, View::Front) == 1);
  CHECK(screen_orientation(g, View::Top) == 0);
  const auto frame = plane_frame(Multivector::blade(ga::Algebra(3), ga::blade_of({1, 3}), 2.0));
  REQUIRE(frame);
  const Multivector w = ga::outer_product(calc::to_vector(ga::Algebra(3), frame->u), calc::to_vector(ga::Algebra(3), frame->v));
  CHECK((w - Multivector::blade(ga::Algebra(3), ga::blade_of({1, 3}))).norm() < 1e-15);
}

TEST_CASE("empty lattice renders a valid document") {
  SceneSpec s{.name = "empty", .title = "nothing"};
  s.layers.push_back({"none", calc::registered_field("rotor2d"), {}, {1}, {}});
  const std::string svg = render_svg(s, View::Top);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "class=\"glyph") == 0);
  CHECK(svg.find("nan") == std::string::npos);
}

TEST_CASE("projection scene lies in the e23 plane") {
  for (const auto& g : build_glyphs(scene_spec("projection_front_view"))) {
    REQUIRE(g.value[ga::blade_of({1, 2})] == 0.0);
    REQUIRE(g.value[ga::blade_of({1, 3})] == 0.0);
  }
  CHECK_THROWS_AS(parse_view("sideways"), UnknownId);
  CHECK(render_svg(scene_spec("fig7_toroidal"), View::Top) != render_svg(scene_spec("fig7_toroidal"), View::Iso));
}

TEST_CASE("verify exit codes") {
  EnvGuard env(nullptr);
  std::string out, err;
  CHECK(run({"verify", "--case", "C3", "--order", "8"}, &out) == kExitPass);
  CHECK(out.find("C3") != std::string::npos);
  CHECK(out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "--case", "C3", "--case", "C7", "--no-convergence"}, &out) == kExitPass);
  CHECK(out.find("C7") != std::string::npos);
  CHECK(out.find("C1 ") == std::string::npos);
  CHECK(run({"verify", "--case", "C9"}, nullptr, &err) == kExitUsage);
  CHECK(err.find("C9") != std::string::npos);
  CHECK(run({"verify", "--case", "C3", "--perturb", "1e-3"}, &out) == kExitFail);
  CHECK(out.find("FAIL") != std::string::npos);
  CHECK(run({"verify", "--case", "C3", "--field", "monopole_potential"}) == kExitFail);
  CHECK(run({"verify", "--case", "C3", "--field", "nope"}) == kExitUsage);
  CHECK(run({"verify", "--case", "C1", "--expr", "-x2 e1 + x1 e2"}) == kExitPass);
  CHECK(run({"verify", "--case", "C1", "--expr", "-x2 e1 +"}) == kExitUsage);
  CHECK(run({"verify", "--case", "C1", "--expr", "x3 e1"}) == kExitUsage);
  CHECK(run({"verify", "--bogus"}) == kExitUsage);
  CHECK(run({}) == kExitUsage);
  CHECK(run({"verify", "--order", "8", "--no-convergence"}) == kExitPass);
}

TEST_CASE("report files from verify") {
  EnvGuard env(nullptr);
  TempDir tmp;
  const auto json = tmp.path / "r.json";
  const auto csv = tmp.path / "r.csv";
  REQUIRE(run({"verify", "--case", "C0", "--json", json.string(), "--csv", csv.string()}) == kExitPass);
  const auto reports = verify::parse_json_reports(read_file(json));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].lhs.scalar_part() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(read_file(csv).rfind("case,grade,abs_err,rel_err,order,slope\n", 0) == 0);
  CHECK(run({"verify", "--case", "C0", "--json", (tmp.path / "no" / "r.json").string()}) == kExitUsage);
}

TEST_CASE("order precedence: default < environment < config < flag") {
  TempDir tmp;
  const auto json = tmp.path / "r.json";
  auto order_used = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = {"verify", "--case", "C0", "--no-convergence", "--json", json.string()};
    args.insert(args.end(), extra.begin(), extra.end());
    REQUIRE(run(args) == kExitPass);
    return verify::parse_json_reports(read_file(json)).at(0).order;
  };
  const auto cfg = tmp.path / "c.toml";
  std::ofstream(cfg) << "[quadrature]\norder = 6\n";
  {
    EnvGuard env(nullptr);
    CHECK(order_used({}) == 8);
  }
  {
    EnvGuard env("4");
    CHECK(order_used({}) == 4);
    CHECK(order_used({"--config", cfg.string()}) == 6);
    CHECK(order_used({"--config", cfg.string(), "--order", "5"}) == 5);
  }
  {
    EnvGuard env("many");
    CHECK(run({"verify", "--case", "C0"}) == kExitUsage);
  }
}

TEST_CASE("config-driven verify") {
  EnvGuard env(nullptr);
  TempDir tmp;
  const auto cfg = tmp.path / "c.toml";
  std::ofstream(cfg) << "[case]\nid = \"C1\"\n[field]\nexpr = \"-x2 e1 + x1 e2\"\ndim = 2\n";
  CHECK(run({"verify", "--config", cfg.string()}) == kExitPass);
  std::ofstream(cfg) << "[case]\nid = \"C1\"\nperturb = 0.01\n";
  CHECK(run({"verify", "--config", cfg.string()}) == kExitFail);
  CHECK(run({"verify", "--config", cfg.string(), "--perturb", "0"}) == kExitPass);
  std::ofstream(cfg) << "[case]\nidd = \"C1\"\n";
  CHECK(run({"verify", "--config", cfg.string()}) == kExitUsage);
}

TEST_CASE("render, table and list") {
  TempDir tmp;
  const auto svg = tmp.path / "s.svg";
  std::string out;
  CHECK(run({"render", "--scene", "fig6_radial_spin", "--out", svg.string()}, &out) == kExitPass);
  CHECK(out.find("26 glyphs") != std::string::npos);
  const std::string first = read_file(svg);
  CHECK(run({"render", "--scene", "fig6_radial_spin", "--out", svg.string()}) == kExitPass);
  CHECK(read_file(svg) == first);
  CHECK(run({"render", "--scene", "fig6_radial_spin", "--view", "top", "--out", "-"}, &out) == kExitPass);
  CHECK(out.find("data-view=\"top\"") != std::string::npos);
  CHECK(run({"render", "--scene", "fig99"}) == kExitUsage);
  CHECK(run({"render", "--scene", "fig4_green", "--view", "sideways"}) == kExitUsage);
  CHECK(run({"render"}) == kExitUsage);

  CHECK(run({"table"}, &out) == kExitPass);
  CHECK(out.find("[1] 4 [6] 4 [1]") != std::string::npos);
  CHECK(out.find("[1] 3 [3] 1") != std::string::npos);
  CHECK(run({"table", "--max-dim", "9"}) == kExitUsage);

  CHECK(run({"list"}, &out) == kExitPass);
  for (const char* id : {"C8", "radial_spin3d", "unit_ball_r4", "projection_front_view"}) {
    CHECK(out.find(id) != std::string::npos);
  }
  CHECK(run({"list", "scenes"}) == kExitPass);
  CHECK(run({"list", "planets"}) == kExitUsage);
}

}  // TEST_SUITE
