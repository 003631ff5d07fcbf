// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bcalc::verify {

struct IdentityResult {
  std::string name;
  // Worst residual over all samples, relative to the polynomial's coefficient scale.
  double max_residual = 0.0;
  int samples = 0;
  double tolerance = 1e-6;
  bool passed = false;
};

struct IdentitySuiteOptions {
  std::uint64_t seed = 20240611;
  int fields = 10;          // random polynomials per identity
  int points = 10;          // random evaluation points per polynomial
  int max_degree = 3;
  double tolerance = 1e-6;
};

// Four residual checks on random polynomial potentials:
//   closed_path_gradient  oint dx . grad phi over the unit circle
//   curl_of_gradient      curl grad phi in R^3
//   div_of_curl           div curl A in R^3
//   laplacian             div grad phi minus the analytic Laplacian
std::vector<IdentityResult> identity_suite(const IdentitySuiteOptions& options = {});

}  // namespace bcalc::verify
