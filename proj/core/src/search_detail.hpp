// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frcodes/errors.hpp"
#include "frcodes/incidence.hpp"

namespace frcodes::detail {

/// Counts visited partial subsets across one top-level operation.
struct BudgetCounter {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;

    void tick() {
        if (++used > limit)
            throw ResourceError("exact search budget of " + std::to_string(limit) +
                                " visited partial subsets exceeded");
    }
};

/// Exact M_k by branch-and-bound; shared by the hierarchy operations and
/// the optimality certificate.
int min_union(const IncidenceStructure& s, int k, BudgetCounter& budget);

/// Lexicographically smallest k-subset of block indices whose union has
/// exactly `target` points. Empty result if none exists.
std::vector<std::size_t> lex_min_witness(const IncidenceStructure& s, int k, int target,
                                         BudgetCounter& budget);

}  // namespace frcodes::detail
