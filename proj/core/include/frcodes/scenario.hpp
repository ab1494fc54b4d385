// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace frcodes {

/// Executes a line-oriented storage scenario script:
///   place <fixture|file> M=<int> file=<path>
///   fail <i>
///   repair <i>
///   reconstruct <i,j,...>
/// Blank lines and lines starting with '#' are skipped. Transfer logs are
/// written as "packet <p>: node <helper> -> node <target> (<bytes> B)".
/// Returns the CLI exit code (0 ok, 1 refused/invalid, 2 budget, 3 I/O).
int run_scenario(std::istream& script, std::ostream& out, std::ostream& err);

}  // namespace frcodes
