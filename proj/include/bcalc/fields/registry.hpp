// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcalc/fields/field.hpp"
#include "bcalc/unknown_id.hpp"

namespace bcalc::calc {

struct FieldInfo {
  std::string id;
  std::string description;
};

// Named fields used by the verification cases and scenes:
//   cubic1d            f = x^3 on R^1
//   cubic_potential2d  phi = x^2 y on R^2
//   rotor2d            (-y, x)
//   radial2d           (x, y)
//   gaussian_rotor2d   exp(-|x|^2) (-y, x)
//   rotor3d            (-y, x, 0)
//   radial3d           x
//   radial_spin3d      I3 x
//   gaussian_spin3d    exp(-|x|^2) I3 x
//   linear_bivector    x e12
//   hyper_bivector     x1 e14 on R^4
//   toroidal_bivector  x ^ e3 (meridional-plane circulation about the e3 axis)
//   monopole_potential I3 x / |x|^3, singular at the origin
//   line_potential3d   -ln(rho) e3, potential of a line current on the e3 axis
//
// Throws UnknownId for anything else.
const FieldEvaluator& registered_field(std::string_view id);
const std::vector<FieldInfo>& field_catalog();

}  // namespace bcalc::calc
