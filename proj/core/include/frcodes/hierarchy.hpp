// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "frcodes/incidence.hpp"

namespace frcodes {

/// Work limits for the exact subset searches. `budget` counts visited
/// partial subsets across one top-level operation; exceeding it raises
/// ResourceError rather than returning an approximate answer.
struct SearchOptions {
    std::uint64_t budget = 100'000'000;
    std::uint64_t bruteforce_cap = 10'000'000;
};

struct SearchStats {
    std::uint64_t visited = 0;
};

/// M_k: the smallest number of distinct points covered by any k blocks.
/// Exact branch-and-bound: blocks ordered by ascending row size (ties by
/// index), a branch is cut once its partial union already matches the
/// best complete union. Deterministic in both result and visit count.
int supported_file_size(const IncidenceStructure& s, int k,
                        const SearchOptions& options = {}, SearchStats* stats = nullptr);

/// Same contract as supported_file_size, by complete enumeration of all
/// C(n,k) subsets with no pruning. Cross-check oracle; refuses to run
/// when C(n,k) exceeds options.bruteforce_cap.
int supported_file_size_bruteforce(const IncidenceStructure& s, int k,
                                   const SearchOptions& options = {});

/// The vectors (M_0..M_n) and (N_0..N_n), with M_0 = 0 and N_0 = v.
/// N_k = v - M_k is the widest all-zero submatrix with k rows.
struct FileSizeHierarchy {
    std::vector<int> m;
    std::vector<int> n_vals;

    friend bool operator==(const FileSizeHierarchy&, const FileSizeHierarchy&) = default;
};

FileSizeHierarchy full_hierarchy(const IncidenceStructure& s,
                                 const SearchOptions& options = {});

/// N_k for 0 <= k <= n (N_0 = v by convention).
int n_value(const IncidenceStructure& s, int k, const SearchOptions& options = {});

/// Computes the hierarchy of s from its dual: M_k counts the indices i
/// with N_i(dual) < k. Equals full_hierarchy(s) for every structure,
/// regular or not.
FileSizeHierarchy hierarchy_via_dual(const IncidenceStructure& s,
                                     const SearchOptions& options = {});

/// A vertex (k0, l0) where the N-staircases of a structure and its dual
/// meet: l0 = N_{k0}(s), k0 = N_{l0}(dual), and both staircases drop
/// strictly after it. Points with k0 == 0 or l0 == 0 lean on the N_0
/// conventions and are flagged as boundary.
struct ParetoPoint {
    int k0 = 0;
    int l0 = 0;
    bool boundary = false;

    friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

/// All Pareto points, ordered by increasing k0.
std::vector<ParetoPoint> pareto_points(const IncidenceStructure& s,
                                       const SearchOptions& options = {});

}  // namespace frcodes
