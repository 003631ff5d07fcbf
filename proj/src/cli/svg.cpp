// SPDX-License-Identifier: Apache-2.0

#include "bcalc/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace bcalc::cli {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 48.0;
constexpr double kTitle = 28.0;
constexpr double kPi = std::numbers::pi;

std::string f2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid "-0.00".
  return std::string(buf) == "-0.00" ? "0.00" : buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* kind_class(GlyphKind k) {
  switch (k) {
    case GlyphKind::Dot: return "scalar";
    case GlyphKind::Arrow: return "vector";
    case GlyphKind::Disc: return "bivector";
    case GlyphKind::Sphere: return "trivector";
  }
  return "?";
}

const char* sign_text(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); }

// World-to-canvas map fitted to every glyph position and outline point.
class Frame {
 public:
  Frame(const SceneSpec& scene, const std::vector<Glyph>& glyphs, View view) : view_(view) {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    auto include = [&](const Point& p, double pad) {
      const ScreenPoint s = project(p, view);
      lo_x = std::min(lo_x, s.x - pad);
      hi_x = std::max(hi_x, s.x + pad);
      lo_y = std::min(lo_y, s.y - pad);
      hi_y = std::max(hi_y, s.y + pad);
    };
    for (const auto& g : glyphs) include(g.position, scene.glyph_size);
    for (const auto& line : scene.outlines) {
      for (const auto& p : line) include(p, 0.0);
    }
    if (lo_x > hi_x) lo_x = hi_x = lo_y = hi_y = 0.0;
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    scale_ = (kCanvas - 2 * kMargin) / span;
    cx_ = 0.5 * (lo_x + hi_x);
    cy_ = 0.5 * (lo_y + hi_y);
  }

  ScreenPoint world(const Point& p) const { return canvas(project(p, view_)); }
  ScreenPoint canvas(ScreenPoint s) const {
    return {kCanvas / 2 + (s.x - cx_) * scale_, kTitle + kCanvas / 2 - (s.y - cy_) * scale_};
  }
  double scale() const { return scale_; }

 private:
  View view_;
  double scale_ = 1.0;
  double cx_ = 0.0;
  double cy_ = 0.0;
};

std::string points_attr(const std::vector<ScreenPoint>& pts) {
  std::string s;
  for (const auto& p : pts) {
    if (!s.empty()) s += ' ';
    s += f2(p.x) + "," + f2(p.y);
  }
  return s;
}

std::string arrowhead(ScreenPoint tip, double dx, double dy, double size, const char* fill) {
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return "";
  const double ux = dx / len, uy = dy / len;
  const ScreenPoint a{tip.x - size * ux + 0.5 * size * uy, tip.y - size * uy - 0.5 * size * ux};
  const ScreenPoint b{tip.x - size * ux - 0.5 * size * uy, tip.y - size * uy + 0.5 * size * ux};
  return "<polygon points=\"" + points_attr({tip, a, b}) + "\" fill=\"" + fill + "\"/>";
}

void draw_dot(std::ostream& os, const Glyph& g, const Frame& fr) {
  const ScreenPoint c = fr.world(g.position);
  const double r = 10.0 * g.relative_size;
  const double s = g.value.scalar_part();
  os << "<circle cx=\"" << f2(c.x) << "\" cy=\"" << f2(c.y) << "\" r=\"" << f2(r) << "\" fill=\""
     << (s < 0 ? "none" : "#1f4e79") << "\" stroke=\"#1f4e79\" stroke-width=\"1.00\"/>";
}

void draw_arrow(std::ostream& os, const Glyph& g, const Frame& fr, double size, View view) {
  const ScreenPoint base = fr.world(g.position);
  const double len = size * g.relative_size;
  const double n = g.value.norm();
  Point tip_world = g.position;
  if (n > 0) tip_world += calc::to_point(g.value).embedded(3) * (len / n);
  const ScreenPoint tip = fr.world(tip_world);
  if (screen_orientation(g, view) == 0) {
    // Parallel to the view direction: a ringed dot.
    os << "<circle cx=\"" << f2(base.x) << "\" cy=\"" << f2(base.y) << "\" r=\"4.00\" fill=\"none\" "
       << "stroke=\"#b03a2e\" stroke-width=\"1.20\"/><circle cx=\"" << f2(base.x) << "\" cy=\"" << f2(base.y)
       << "\" r=\"1.20\" fill=\"#b03a2e\"/>";
    return;
  }
  os << "<line x1=\"" << f2(base.x) << "\" y1=\"" << f2(base.y) << "\" x2=\"" << f2(tip.x) << "\" y2=\"" << f2(tip.y)
     << "\" stroke=\"#b03a2e\" stroke-width=\"1.50\"/>";
  os << arrowhead(tip, tip.x - base.x, tip.y - base.y, 6.0, "#b03a2e");
}

void draw_disc(std::ostream& os, const Glyph& g, const Frame& fr, double size) {
  const auto frame = plane_frame(g.value);
  const ScreenPoint c = fr.world(g.position);
  if (!frame) {
    os << "<circle cx=\"" << f2(c.x) << "\" cy=\"" << f2(c.y) << "\" r=\"1.50\" fill=\"#2e7d32\"/>";
    return;
  }
  const double r = size * (0.35 + 0.65 * g.relative_size);
  auto at = [&](double t) {
    return fr.world(g.position + frame->u * (r * std::cos(t)) + frame->v * (r * std::sin(t)));
  };
  std::vector<ScreenPoint> rim;
  for (int k = 0; k < 24; ++k) rim.push_back(at(2.0 * kPi * k / 24));
  os << "<polygon points=\"" << points_attr(rim)
     << "\" fill=\"#2e7d32\" fill-opacity=\"0.25\" stroke=\"#2e7d32\" stroke-width=\"0.80\"/>";
  // Circulation arrow running from u towards v.
  std::vector<ScreenPoint> arc;
  const double r_arc = 0.7;
  auto arc_at = [&](double t) {
    return fr.world(g.position + frame->u * (r * r_arc * std::cos(t)) + frame->v * (r * r_arc * std::sin(t)));
  };
  for (int k = 0; k <= 18; ++k) arc.push_back(arc_at(0.25 * kPi + 1.5 * kPi * k / 18));
  os << "<polyline points=\"" << points_attr(arc) << "\" fill=\"none\" stroke=\"#1b5e20\" stroke-width=\"1.20\"/>";
  const ScreenPoint tip = arc.back();
  const ScreenPoint prev = arc[arc.size() - 2];
  os << arrowhead(tip, tip.x - prev.x, tip.y - prev.y, 5.0, "#1b5e20");
}

void draw_sphere(std::ostream& os, const Glyph& g, const Frame& fr, double size) {
  const ScreenPoint c = fr.world(g.position);
  const double r = size * (0.35 + 0.65 * g.relative_size) * fr.scale();
  os << "<circle cx=\"" << f2(c.x) << "\" cy=\"" << f2(c.y) << "\" r=\"" << f2(r)
     << "\" fill=\"#6a1b9a\" fill-opacity=\"0.20\" stroke=\"#6a1b9a\" stroke-width=\"1.00\"/>";
}

}  // namespace

std::string render_svg(const SceneSpec& scene, View view) {
  const std::vector<Glyph> glyphs = build_glyphs(scene);
  const Frame fr(scene, glyphs, view);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f2(kCanvas) << "\" height=\""
     << f2(kCanvas + kTitle) << "\" viewBox=\"0 0 " << f2(kCanvas) << " " << f2(kCanvas + kTitle) << "\" data-scene=\""
     << escape(scene.name) << "\" data-view=\"" << view_name(view) << "\" data-glyphs=\"" << glyphs.size() << "\">\n";
  os << "<title>" << escape(scene.title) << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << f2(kCanvas) << "\" height=\"" << f2(kCanvas + kTitle)
     << "\" fill=\"#ffffff\"/>\n";
  os << "<text x=\"12.00\" y=\"20.00\" font-family=\"sans-serif\" font-size=\"13\">" << escape(scene.title)
     << "</text>\n";
  os << "<g class=\"outlines\" fill=\"none\" stroke=\"#9e9e9e\" stroke-width=\"1.00\">\n";
  for (const auto& line : scene.outlines) {
    std::vector<ScreenPoint> pts;
    for (const auto& p : line) pts.push_back(fr.world(p));
    os << "<polyline points=\"" << points_attr(pts) << "\"/>\n";
  }
  os << "</g>\n";
  for (const auto& g : glyphs) {
    os << "<g class=\"glyph " << kind_class(g.kind) << "\" data-layer=\"" << escape(g.layer) << "\" data-grade=\""
       << g.grade << "\" data-orient=\"" << sign_text(screen_orientation(g, view)) << "\"";
    if (g.coherence) os << " data-coherent=\"" << sign_text(*g.coherence) << "\"";
    os << " data-size=\"" << f2(g.relative_size) << "\">";
    switch (g.kind) {
      case GlyphKind::Dot:
        draw_dot(os, g, fr);
        break;
      case GlyphKind::Arrow:
        draw_arrow(os, g, fr, scene.glyph_size, view);
        break;
      case GlyphKind::Disc:
        draw_disc(os, g, fr, scene.glyph_size);
        break;
      case GlyphKind::Sphere:
        draw_sphere(os, g, fr, scene.glyph_size);
        break;
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bcalc::cli
