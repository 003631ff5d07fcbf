// SPDX-License-Identifier: Apache-2.0

#include "bcalc/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "bcalc/cli/config.hpp"
#include "bcalc/cli/expr.hpp"
#include "bcalc/cli/scene.hpp"
#include "bcalc/cli/svg.hpp"
#include "bcalc/fields/registry.hpp"
#include "bcalc/manifolds/library.hpp"
#include "bcalc/verify/report.hpp"

namespace bcalc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyArgs {
  std::string config;
  std::vector<std::string> case_ids;
  std::optional<int> order;
  std::optional<int> workers;
  std::string json;
  std::string csv;
  std::string field;
  std::string expr;
  std::optional<double> perturb;
  std::optional<double> tol;
  bool no_convergence = false;
};

struct RenderArgs {
  std::string config;
  std::string scene;
  std::string out;
  std::string view;
};

int parse_order(const std::string& text, const char* source) {
  int v = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || v < 1 || v > 128) {
    throw UsageError(std::string(source) + ": quadrature order must be an integer in 1..128, got '" + text + "'");
  }
  return v;
}

int resolve_order(const std::optional<int>& flag, const Config* cfg) {
  int order = 8;
  if (const char* env = std::getenv("BOUNDARY_CALC_ORDER"); env && *env) order = parse_order(env, "BOUNDARY_CALC_ORDER");
  if (cfg) {
    if (auto v = cfg->get_int("quadrature", "order")) order = parse_order(std::to_string(*v), "config");
  }
  if (flag) order = parse_order(std::to_string(*flag), "--order");
  return order;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<Config> cfg;
  if (!a.config.empty()) cfg = Config::load(a.config);
  const Config* c = cfg ? &*cfg : nullptr;
  auto pick_string = [&](const std::string& flag, const char* section, const char* key) {
    if (!flag.empty()) return flag;
    if (c) {
      if (auto v = c->get_string(section, key)) return *v;
    }
    return std::string();
  };
  auto pick_double = [&](const std::optional<double>& flag, const char* section, const char* key,
                         double fallback) {
    if (flag) return *flag;
    if (c) {
      if (auto v = c->get_double(section, key)) return *v;
    }
    return fallback;
  };

  const int order = resolve_order(a.order, c);
  verify::RunOptions options;
  options.tolerance = pick_double(a.tol, "case", "tolerance", 1e-6);
  options.convergence = !a.no_convergence;
  options.workers = a.workers.value_or(c && c->get_int("quadrature", "workers")
                                           ? static_cast<int>(*c->get_int("quadrature", "workers"))
                                           : 1);
  if (options.workers < 1) throw UsageError("workers must be positive");
  const double perturb = pick_double(a.perturb, "case", "perturb", 0.0);

  std::vector<std::string> ids = a.case_ids;
  if (ids.empty()) {
    if (auto v = c ? c->get_string("case", "id") : std::nullopt) ids.push_back(*v);
  }
  std::vector<verify::CaseSpec> specs;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    specs = verify::case_catalog();
  } else {
    for (const auto& id : ids) specs.push_back(verify::case_spec(id));
  }

  const std::string field_id = a.field;
  const std::string expr = pick_string(a.expr, "field", "expr");
  if (!field_id.empty() && !expr.empty()) throw UsageError("--field and --expr are mutually exclusive");
  for (auto& s : specs) {
    s.perturbation = perturb;
    const int dim = geom::named_manifold(s.manifold).ambient_dim();
    if (!field_id.empty()) {
      s.field_override = calc::registered_field(field_id);
    } else if (!expr.empty()) {
      if (c) {
        if (auto d = c->get_int("field", "dim"); d && *d != dim) {
          throw UsageError("[field] dim " + std::to_string(*d) + " does not match case " + s.id + " (R^" +
                           std::to_string(dim) + ")");
        }
      }
      s.field_override = parse_field_expr(expr, dim).compile("expr");
    }
  }

  const auto reports = verify::run_cases(specs, geom::QuadratureRule{order}, options);
  out << verify::format_text(reports);
  if (!a.json.empty()) verify::emit_report(reports, verify::ReportFormat::Json, a.json);
  if (!a.csv.empty()) verify::emit_report(reports, verify::ReportFormat::Csv, a.csv);
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed; });
  if (failed) {
    err << failed << " of " << reports.size() << " case(s) outside tolerance " << options.tolerance << "\n";
    return kExitFail;
  }
  return kExitPass;
}

int run_render(const RenderArgs& a, std::ostream& out) {
  std::optional<Config> cfg;
  if (!a.config.empty()) cfg = Config::load(a.config);
  auto pick = [&](const std::string& flag, const char* key) {
    if (!flag.empty()) return flag;
    if (cfg) {
      if (auto v = cfg->get_string("render", key)) return *v;
    }
    return std::string();
  };
  const std::string scene_name = pick(a.scene, "scene");
  if (scene_name.empty()) throw UsageError("render needs --scene");
  const SceneSpec scene = scene_spec(scene_name);
  const std::string view_text = pick(a.view, "view");
  const View view = view_text.empty() ? scene.view : parse_view(view_text);
  const std::string doc = render_svg(scene, view);
  const std::string path = pick(a.out, "out");
  if (path.empty() || path == "-") {
    out << doc;
    return kExitPass;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + path);
  f << doc;
  f.close();
  if (!f) throw UsageError("failed writing " + path);
  out << "wrote " << path << " (" << build_glyphs(scene).size() << " glyphs)\n";
  return kExitPass;
}

int run_table(int max_dim, std::ostream& out) {
  out << "n  blades by grade (even grades in brackets)  even  total\n";
  for (int n = 0; n <= max_dim; ++n) {
    const ga::Algebra alg(n);
    std::string row;
    for (int k = 0; k <= n; ++k) {
      const std::string d = std::to_string(alg.grade_dimension(k));
      if (!row.empty()) row += ' ';
      row += k % 2 == 0 ? "[" + d + "]" : d;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-2d %-41s %-5zu %zu\n", n, row.c_str(), alg.even_dimension(), alg.size());
    out << line;
  }
  return kExitPass;
}

int run_list(const std::string& what, std::ostream& out) {
  const bool all = what.empty() || what == "all";
  bool known = all;
  if (all || what == "cases") {
    known = true;
    out << "cases:\n";
    for (const auto& c : verify::case_catalog()) {
      out << "  " << c.id << "  " << c.manifold << " / " << c.field << "  " << c.title << "\n";
    }
  }
  if (all || what == "fields") {
    known = true;
    out << "fields:\n";
    for (const auto& f : calc::field_catalog()) out << "  " << f.id << "  " << f.description << "\n";
  }
  if (all || what == "manifolds") {
    known = true;
    out << "manifolds:\n";
    for (const auto& m : geom::manifold_catalog()) out << "  " << m.id << "  " << m.description << "\n";
  }
  if (all || what == "scenes") {
    known = true;
    out << "scenes:\n";
    for (const auto& s : scene_names()) out << "  " << s << "\n";
  }
  if (!known) throw UnknownId("list category", what);
  return kExitPass;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric-calculus boundary theorem verifier", "boundary-calc"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run boundary-theorem cases and print the report table");
  verify_cmd->add_option("--config", va.config, "TOML config file");
  verify_cmd->add_option("--case", va.case_ids, "Case id (C0..C8) or 'all'; repeatable");
  verify_cmd->add_option("--order", va.order, "Gauss-Legendre order per axis");
  verify_cmd->add_option("--workers", va.workers, "Parallel workers");
  verify_cmd->add_option("--json", va.json, "Write the JSON report here");
  verify_cmd->add_option("--csv", va.csv, "Write the CSV report here");
  verify_cmd->add_option("--field", va.field, "Replace the case field by a registered field");
  verify_cmd->add_option("--expr", va.expr, "Replace the case field by a polynomial expression");
  verify_cmd->add_option("--perturb", va.perturb, "Scale the boundary-side field by (1 + eps)");
  verify_cmd->add_option("--tol", va.tol, "Relative tolerance (default 1e-6)");
  verify_cmd->add_flag("--no-convergence", va.no_convergence, "Skip the convergence slope");

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand("render", "Emit an SVG glyph scene");
  render_cmd->add_option("--config", ra.config, "TOML config file");
  render_cmd->add_option("--scene", ra.scene, "Scene name");
  render_cmd->add_option("--out", ra.out, "Output file, '-' for stdout");
  render_cmd->add_option("--view", ra.view, "iso, top or front");

  int max_dim = 4;
  auto* table_cmd = app.add_subcommand("table", "Blade counts per grade and even-subalgebra dimensions");
  table_cmd->add_option("--max-dim", max_dim, "Largest n (0..6)")->check(CLI::Range(0, ga::kMaxDim));

  std::string list_what;
  auto* list_cmd = app.add_subcommand("list", "List cases, fields, manifolds and scenes");
  list_cmd->add_option("what", list_what, "cases, fields, manifolds, scenes or all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(va, out, err);
    if (render_cmd->parsed()) return run_render(ra, out);
    if (table_cmd->parsed()) return run_table(max_dim, out);
    if (list_cmd->parsed()) return run_list(list_what, out);
  } catch (const UnknownId& e) {
    err << "error: unknown " << e.kind() << " '" << e.id() << "'\n";
    return kExitUsage;
  } catch (const verify::GradeMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bcalc::cli
