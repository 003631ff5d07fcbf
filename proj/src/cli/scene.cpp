// SPDX-License-Identifier: Apache-2.0

#include "bcalc/cli/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bcalc/fields/derivative.hpp"
#include "bcalc/fields/registry.hpp"
#include "bcalc/manifolds/manifold.hpp"

namespace bcalc::cli {

namespace {

using calc::DerivativePart;
using ga::Algebra;
using ga::blade_of;
constexpr double kPi = std::numbers::pi;

Point p3(double x, double y, double z) { return Point{x, y, z}; }

double dot3(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Point cross3(const Point& a, const Point& b) {
  return p3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

std::vector<Point> circle_points(double r, int n, double z = 0.0, int dim = 2) {
  std::vector<Point> pts;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * k / n;
    Point p = p3(r * std::cos(t), r * std::sin(t), z);
    pts.push_back(p.embedded(dim));
  }
  return pts;
}

std::vector<Point> closed(std::vector<Point> pts) {
  if (!pts.empty()) pts.push_back(pts.front());
  return pts;
}

// Grid of spacing 0.4 inside the unit disk.
std::vector<Point> disk_grid() {
  std::vector<Point> pts;
  for (int j = -2; j <= 2; ++j) {
    for (int i = -2; i <= 2; ++i) {
      const Point p{0.4 * i, 0.4 * j};
      if (p.norm() < 1.0) pts.push_back(p);
    }
  }
  return pts;
}

std::vector<Point> torus_lattice(double ring, double tube, int around, int across) {
  std::vector<Point> pts;
  for (int a = 0; a < around; ++a) {
    const double phi = 2.0 * kPi * a / around;
    for (int b = 0; b < across; ++b) {
      const double th = 2.0 * kPi * b / across;
      const double rho = ring + tube * std::cos(th);
      pts.push_back(p3(rho * std::cos(phi), rho * std::sin(phi), tube * std::sin(th)));
    }
  }
  return pts;
}

std::vector<std::vector<Point>> torus_outline(double ring, double tube) {
  std::vector<std::vector<Point>> out = {closed(circle_points(ring + tube, 64, 0.0, 3)),
                                         closed(circle_points(ring - tube, 64, 0.0, 3))};
  for (int a = 0; a < 4; ++a) {
    const double phi = kPi * a / 2.0;
    std::vector<Point> m;
    for (int b = 0; b <= 32; ++b) {
      const double th = 2.0 * kPi * b / 32;
      const double rho = ring + tube * std::cos(th);
      m.push_back(p3(rho * std::cos(phi), rho * std::sin(phi), tube * std::sin(th)));
    }
    out.push_back(m);
  }
  return out;
}

std::vector<std::vector<Point>> sphere_outline(double r) {
  std::vector<Point> xy, xz, yz;
  for (int k = 0; k <= 64; ++k) {
    const double t = 2.0 * kPi * k / 64;
    const double c = r * std::cos(t), s = r * std::sin(t);
    xy.push_back(p3(c, s, 0));
    xz.push_back(p3(c, 0, s));
    yz.push_back(p3(0, c, s));
  }
  return {xy, xz, yz};
}

// Outward-normal reference I3 n on a sphere about the origin.
Multivector sphere_reference(const Point& x) {
  const Algebra g3(3);
  return geom::induced_boundary_blade(ga::pseudoscalar(g3), calc::to_vector(g3, x * (1.0 / x.norm())));
}

std::vector<Point> scaled(std::vector<Point> pts, double s) {
  for (auto& p : pts) p *= s;
  return pts;
}

SceneSpec fig3() {
  const FieldEvaluator& f = calc::registered_field("cubic1d");
  SceneSpec s{.name = "fig3_gradient", .title = "f = x^3 on [1, 2]: endpoint values and interior gradient",
              .view = View::Top};
  s.layers.push_back({"boundary", f, {Point{1.0}, Point{2.0}}, {0}, {}});
  s.layers.push_back({"gradient", calc::derivative_field(f, DerivativePart::Full), {Point{1.5}}, {1}, {}});
  s.outlines = {{Point{1.0}, Point{2.0}}};
  s.glyph_size = 0.4;
  return s;
}

SceneSpec plane_scene(std::string name, std::string title, const char* field, DerivativePart part, int part_grade) {
  const FieldEvaluator& f = calc::registered_field(field);
  SceneSpec s{.name = std::move(name), .title = std::move(title), .view = View::Top};
  s.layers.push_back({"boundary", f, circle_points(1.0, 16), {1}, {}});
  s.layers.push_back({"interior", calc::derivative_field(f, part), disk_grid(), {part_grade}, {}});
  s.outlines = {closed(circle_points(1.0, 64))};
  s.glyph_size = 0.25;
  return s;
}

SceneSpec fig6() {
  SceneSpec s{.name = "fig6_radial_spin", .title = "B = I3 x on the unit sphere", .view = View::Iso};
  s.layers.push_back(
      {"sphere", calc::registered_field("radial_spin3d"), cube_shell_directions(), {2}, sphere_reference});
  s.outlines = sphere_outline(1.0);
  s.glyph_size = 0.25;
  return s;
}

FieldEvaluator projected_onto(const FieldEvaluator& f, const Multivector& blade) {
  std::vector<int> grades = f.grades();
  return FieldEvaluator(f.name() + "_projected", f.algebra(), grades,
                        [f, blade](const Point& x) { return ga::project_reject(f(x), blade).projection; });
}

SceneSpec fig7() {
  const FieldEvaluator& b = calc::registered_field("toroidal_bivector");
  SceneSpec s{.name = "fig7_toroidal", .title = "toroidal bivector circulation and its divergence", .view = View::Iso};
  s.layers.push_back({"torus", b, torus_lattice(2.0, 0.5, 8, 4), {2}, {}});
  s.layers.push_back({"divergence", calc::derivative_field(b, DerivativePart::Divergence),
                      circle_points(2.0, 8, 0.0, 3), {1}, {}});
  s.outlines = torus_outline(2.0, 0.5);
  s.glyph_size = 0.3;
  return s;
}

SceneSpec fig8b() {
  const FieldEvaluator& a = calc::registered_field("line_potential3d");
  std::vector<Point> lattice;
  for (double r : {0.5, 1.0, 1.5}) {
    for (const auto& p : circle_points(r, 8, 0.0, 3)) lattice.push_back(p);
  }
  SceneSpec s{.name = "fig8b_vector_potential", .title = "vector potential of a line current and its curl",
              .view = View::Iso};
  s.layers.push_back({"potential", a, lattice, {1}, {}});
  s.layers.push_back({"curl", calc::curl_vector_field(a), lattice, {1}, {}});
  s.outlines = {{p3(0, 0, -1.5), p3(0, 0, 1.5)}};
  s.glyph_size = 0.3;
  return s;
}

SceneSpec monopole() {
  SceneSpec s{.name = "monopole_potential", .title = "B = I3 x / |x|^3 on a sphere of radius 1.5", .view = View::Iso};
  s.layers.push_back({"sphere", calc::registered_field("monopole_potential"), scaled(cube_shell_directions(), 1.5),
                      {2}, sphere_reference});
  s.outlines = sphere_outline(1.5);
  s.glyph_size = 0.3;
  return s;
}

SceneSpec front_view() {
  const Multivector e23 = Multivector::blade(Algebra(3), blade_of({2, 3}));
  SceneSpec s{.name = "projection_front_view", .title = "toroidal field projected onto the e23 plane, seen from +e1",
              .view = View::Front};
  s.layers.push_back(
      {"projection", projected_onto(calc::registered_field("toroidal_bivector"), e23), torus_lattice(2.0, 0.5, 8, 4),
       {2}, {}});
  s.outlines = torus_outline(2.0, 0.5);
  s.glyph_size = 0.3;
  return s;
}

}  // namespace

View parse_view(std::string_view name) {
  if (name == "iso") return View::Iso;
  if (name == "top") return View::Top;
  if (name == "front") return View::Front;
  throw UnknownId("view", std::string(name));
}

const char* view_name(View v) {
  switch (v) {
    case View::Iso:
      return "iso";
    case View::Top:
      return "top";
    case View::Front:
      return "front";
  }
  return "?";
}

GlyphKind glyph_kind(int grade) {
  switch (grade) {
    case 0:
      return GlyphKind::Dot;
    case 1:
      return GlyphKind::Arrow;
    case 2:
      return GlyphKind::Disc;
    default:
      return GlyphKind::Sphere;
  }
}

ScreenPoint project(const Point& p, View view) {
  const Point q = p.embedded(3);
  switch (view) {
    case View::Top:
      return {q[0], q[1]};
    case View::Front:
      return {q[1], q[2]};
    case View::Iso:
      return {(q[1] - q[0]) / std::sqrt(2.0), (2.0 * q[2] - q[0] - q[1]) / std::sqrt(6.0)};
  }
  return {};
}

std::optional<PlaneFrame> plane_frame(const Multivector& b) {
  const int n = b.algebra().dim();
  if (n < 2) return std::nullopt;
  const double b12 = b[blade_of({1, 2})];
  const double b13 = n >= 3 ? b[blade_of({1, 3})] : 0.0;
  const double b23 = n >= 3 ? b[blade_of({2, 3})] : 0.0;
  // u ^ v = I3 (u x v), so the unit normal u x v has components (b23, -b13, b12).
  Point normal = p3(b23, -b13, b12);
  const double len = normal.norm();
  if (len < 1e-300) return std::nullopt;
  normal *= 1.0 / len;
  const std::array<double, 3> mag = {std::abs(normal[0]), std::abs(normal[1]), std::abs(normal[2])};
  const auto axis = static_cast<int>(std::min_element(mag.begin(), mag.end()) - mag.begin());
  Point a = p3(0, 0, 0);
  a[axis] = 1.0;
  Point u = a - normal * dot3(a, normal);
  u *= 1.0 / u.norm();
  return PlaneFrame{u, cross3(normal, u)};
}

std::vector<Point> cube_shell_directions() {
  std::vector<Point> pts;
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      for (int k = -1; k <= 1; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        Point p = p3(i, j, k);
        pts.push_back(p * (1.0 / p.norm()));
      }
    }
  }
  return pts;
}

std::vector<Glyph> build_glyphs(const SceneSpec& scene) {
  std::vector<Glyph> glyphs;
  for (const auto& layer : scene.layers) {
    const std::size_t first = glyphs.size();
    for (const auto& x : layer.lattice) {
      const Multivector v = layer.field(x);
      for (int k : layer.grades) {
        Glyph g;
        g.layer = layer.label;
        g.kind = glyph_kind(k);
        g.grade = k;
        g.position = x.embedded(3);
        g.value = ga::grade_projection(v, k);
        if (layer.reference) {
          const double s = ga::scalar_product(g.value, ga::reverse(layer.reference(x)));
          g.coherence = s > 0 ? 1 : (s < 0 ? -1 : 0);
        }
        glyphs.push_back(std::move(g));
      }
    }
    for (int k : layer.grades) {
      double biggest = 0.0;
      for (std::size_t i = first; i < glyphs.size(); ++i) {
        if (glyphs[i].grade == k) biggest = std::max(biggest, glyphs[i].value.norm());
      }
      for (std::size_t i = first; i < glyphs.size(); ++i) {
        if (glyphs[i].grade == k) glyphs[i].relative_size = biggest > 0 ? glyphs[i].value.norm() / biggest : 0.0;
      }
    }
  }
  return glyphs;
}

int screen_orientation(const Glyph& g, View view) {
  auto cross2 = [](ScreenPoint a, ScreenPoint b) { return a.x * b.y - a.y * b.x; };
  switch (g.kind) {
    case GlyphKind::Dot:
      return 0;
    case GlyphKind::Arrow: {
      const ScreenPoint d = project(calc::to_point(g.value).embedded(3), view);
      return std::hypot(d.x, d.y) > 1e-9 * std::max(g.value.norm(), 1e-300) ? 1 : 0;
    }
    case GlyphKind::Disc: {
      const auto frame = plane_frame(g.value);
      if (!frame) return 0;
      const double s = cross2(project(frame->u, view), project(frame->v, view));
      return std::abs(s) < 1e-9 ? 0 : (s > 0 ? 1 : -1);
    }
    case GlyphKind::Sphere: {
      const std::size_t top = g.value.size() - 1;
      const double c = g.value.coeff(static_cast<std::uint32_t>(top));
      return c > 0 ? 1 : (c < 0 ? -1 : 0);
    }
  }
  return 0;
}

SceneSpec scene_spec(std::string_view name) {
  if (name == "fig3_gradient") return fig3();
  if (name == "fig4_green")
    return plane_scene("fig4_green", "rotor field on the unit circle and its curl", "rotor2d", DerivativePart::Curl, 2);
  if (name == "fig5_div2d")
    return plane_scene("fig5_div2d", "radial field on the unit circle and its divergence", "radial2d",
                       DerivativePart::Divergence, 0);
  if (name == "fig6_radial_spin") return fig6();
  if (name == "fig7_toroidal") return fig7();
  if (name == "fig8b_vector_potential") return fig8b();
  if (name == "monopole_potential") return monopole();
  if (name == "projection_front_view") return front_view();
  throw UnknownId("scene", std::string(name));
}

const std::vector<std::string>& scene_names() {
  static const std::vector<std::string> names = {"fig3_gradient",    "fig4_green",           "fig5_div2d",
                                                 "fig6_radial_spin", "fig7_toroidal",        "fig8b_vector_potential",
                                                 "monopole_potential", "projection_front_view"};
  return names;
}

}  // namespace bcalc::cli
