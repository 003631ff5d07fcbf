// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "bcalc/cli/scene.hpp"

namespace bcalc::cli {

// Standalone SVG 1.1 document. Each glyph is a
//   <g class="glyph KIND" data-layer=".." data-grade="k" data-orient="s" ...>
// group with KIND in {scalar, vector, bivector, trivector}; data-orient is the
// screen sense (+1 counter-clockwise, -1 clockwise, 0 none) and data-coherent,
// when present, the sign against the layer's reference blade. Numbers are
// printed with two decimals, so equal inputs give byte-identical output.
std::string render_svg(const SceneSpec& scene, View view);
inline std::string render_svg(const SceneSpec& scene) { return render_svg(scene, scene.view); }

}  // namespace bcalc::cli
