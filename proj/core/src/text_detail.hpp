// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "frcodes/incidence.hpp"

namespace frcodes::detail {

std::vector<std::string_view> split_lines(std::string_view text);

/// Parses one incidence matrix whose header sits at lines[pos].
/// Advances pos past the last consumed row line. Line numbers in error
/// messages are 1-based.
IncidenceStructure parse_matrix_at(const std::vector<std::string_view>& lines,
                                   std::size_t& pos);

bool is_blank(std::string_view line);

}  // namespace frcodes::detail
