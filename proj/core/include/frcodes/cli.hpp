// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frcodes/incidence.hpp"

namespace frcodes::cli {

enum class ExactMode { Auto, On, Off };

/// One parsed invocation. `input` is a fixture name or file path; for
/// `construct` it names the family and `args` carries the family
/// arguments; for `simulate` it is the script path or "-" for stdin.
struct CommandRequest {
    std::string subcommand;
    std::string input;
    std::vector<std::string> args;
    std::optional<std::pair<int, int>> k_range;
    std::string format = "table";  // table | structured
    bool lenient = false;
    std::optional<std::uint64_t> budget;  // else FRCODE_BUDGET, else default
    ExactMode exact = ExactMode::Auto;
    std::optional<FrParams> params;  // bounds on bare parameters
};

/// "6" -> (6,6); "2..4" -> (2,4).
std::pair<int, int> parse_k_range(const std::string& spec);

/// "n,alpha,v,rho" as four comma-separated integers.
FrParams parse_params(const std::string& spec);

/// Executes the request. Exit codes: 0 success, 1 validation failure,
/// 2 work budget exceeded, 3 I/O or format error.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

}  // namespace frcodes::cli
