// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcalc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // a case missed its tolerance
inline constexpr int kExitUsage = 2;  // unknown id, bad input, unwritable output

// Subcommands verify, render, table, list. `args` excludes the program name.
// The quadrature order comes from, lowest priority first: the default 8, the
// BOUNDARY_CALC_ORDER environment variable, [quadrature] order in --config,
// and --order.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcalc::cli
