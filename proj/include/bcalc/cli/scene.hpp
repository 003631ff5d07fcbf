// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcalc/fields/field.hpp"
#include "bcalc/unknown_id.hpp"

namespace bcalc::cli {

using calc::FieldEvaluator;
using calc::Point;
using ga::Multivector;

enum class View {
  Iso,    // from the (1, 1, 1) direction
  Top,    // along -e3: screen (x, y)
  Front,  // along e1: screen (y, z)
};

// Throws UnknownId for anything but iso, top, front.
View parse_view(std::string_view name);
const char* view_name(View v);

// One field sampled on a lattice; every lattice point yields one glyph per
// declared grade.
struct SceneLayer {
  std::string label;
  FieldEvaluator field;
  std::vector<Point> lattice;
  std::vector<int> grades;
  // Optional reference blade at each point; glyphs record the sign of their
  // scalar product with its reverse.
  std::function<Multivector(const Point&)> reference;
};

struct SceneSpec {
  std::string name;
  std::string title;
  View view = View::Iso;
  std::vector<SceneLayer> layers;
  // Manifold outlines drawn beneath the glyphs.
  std::vector<std::vector<Point>> outlines;
  // World-space length of a full-size arrow or disc radius.
  double glyph_size = 0.3;
};

enum class GlyphKind { Dot, Arrow, Disc, Sphere };

struct Glyph {
  std::string layer;
  GlyphKind kind = GlyphKind::Dot;
  int grade = 0;
  Point position;  // in R^3, padded with zeros
  Multivector value{ga::Algebra(0)};
  // |value| relative to the largest glyph of the same grade in the layer.
  double relative_size = 0.0;
  std::optional<int> coherence;
};

GlyphKind glyph_kind(int grade);

struct ScreenPoint {
  double x = 0.0;
  double y = 0.0;  // up
};

// Orthographic projection of a point of R^3 (lower dimensions padded).
ScreenPoint project(const Point& p, View view);

// Orthonormal u, v in R^3 with value proportional to u ^ v, from the e12, e13,
// e23 components; nullopt when those vanish.
struct PlaneFrame {
  Point u;
  Point v;
};
std::optional<PlaneFrame> plane_frame(const Multivector& bivector);

// Glyphs in layer order, then lattice order, then grade order.
std::vector<Glyph> build_glyphs(const SceneSpec& scene);

// Screen sense of an oriented glyph in a view: +1 counter-clockwise, -1
// clockwise, 0 when edge-on or not oriented. For arrows, +1 unless the vector
// is parallel to the view direction.
int screen_orientation(const Glyph& g, View view);

// Shipped scenes: fig3_gradient, fig4_green, fig5_div2d, fig6_radial_spin,
// fig7_toroidal, fig8b_vector_potential, monopole_potential,
// projection_front_view. Throws UnknownId.
SceneSpec scene_spec(std::string_view name);
const std::vector<std::string>& scene_names();

// Unit vectors of the sampling lattices.
std::vector<Point> cube_shell_directions();  // 26 points of {-1,0,1}^3 \ 0, normalized

}  // namespace bcalc::cli
