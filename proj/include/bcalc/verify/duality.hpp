// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "bcalc/verify/cases.hpp"

namespace bcalc::verify {

struct DualityVerdict {
  std::string case_id;
  std::string partner_id;
  // Partner field equals the dualized field at sample points, exactly.
  bool field_identity = false;
  // Closed-form anchors satisfy the relation exactly.
  bool closed_form = false;
  // Relative mismatch of the relation on lhs and rhs (worst of the two).
  double numeric_err = 0.0;
  double tolerance = 1e-9;
  CaseReport partner;
  bool passed = false;
};

// 2D: for C1 on F the partner is C2 on F I2^{-1} (and back); the relation is
//   C2.lhs * I2 = C1.lhs, likewise for rhs.
// 3D: for C3 on B the partner is C7 on B I3^{-1} (and back); the relation is
//   C3 = I3^2 C7 = -C7.
// Throws std::invalid_argument for any other case.
DualityVerdict dualize_case(const CaseSpec& spec, const CaseReport& report, const geom::QuadratureRule& rule = {});

}  // namespace bcalc::verify
