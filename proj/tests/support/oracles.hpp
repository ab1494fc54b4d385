// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <vector>

#include "frcodes/hierarchy.hpp"
#include "frcodes/incidence.hpp"

namespace frtest {

/// Widest all-zero column set over all k-row subsets, found by direct
/// column scanning. Independent of the library's bitset union search.
inline int zero_submatrix_max_cols(const frcodes::IncidenceStructure& s, int k) {
    const int n = static_cast<int>(s.num_blocks());
    const int v = static_cast<int>(s.num_points());
    std::vector<int> idx;
    int best = -1;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            int zero_cols = 0;
            for (int j = 0; j < v; ++j) {
                bool all_zero = true;
                for (int i : idx) {
                    if (s.entry(i, j)) {
                        all_zero = false;
                        break;
                    }
                }
                if (all_zero) ++zero_cols;
            }
            best = std::max(best, zero_cols);
            return;
        }
        for (int i = start; i + remaining <= n; ++i) {
            idx.push_back(i);
            self(self, i + 1, remaining - 1);
            idx.pop_back();
        }
    };
    rec(rec, 0, k);
    return best;
}

/// The N_k staircase (k = 0..n) from the zero-submatrix definition.
inline std::vector<int> n_sequence_oracle(const frcodes::IncidenceStructure& s) {
    const int n = static_cast<int>(s.num_blocks());
    std::vector<int> out(n + 1);
    out[0] = static_cast<int>(s.num_points());
    for (int k = 1; k <= n; ++k) out[k] = zero_submatrix_max_cols(s, k);
    return out;
}

/// Pareto conditions evaluated literally on oracle staircases.
inline std::vector<frcodes::ParetoPoint> pareto_oracle(const frcodes::IncidenceStructure& s) {
    const std::vector<int> nc = n_sequence_oracle(s);
    const std::vector<int> nd = n_sequence_oracle(frcodes::dual(s));
    const int n = static_cast<int>(nc.size()) - 1;
    const int v = static_cast<int>(nd.size()) - 1;
    std::vector<frcodes::ParetoPoint> out;
    for (int k0 = 0; k0 <= n; ++k0) {
        const int l0 = nc[k0];
        if (l0 > v || nd[l0] != k0) continue;
        bool strict = true;
        for (int k = k0 + 1; k <= n && strict; ++k)
            if (nc[k] >= nc[k0]) strict = false;
        for (int l = l0 + 1; l <= v && strict; ++l)
            if (nd[l] >= nd[l0]) strict = false;
        if (strict) out.push_back(frcodes::ParetoPoint{k0, l0, k0 == 0 || l0 == 0});
    }
    return out;
}

/// Pairwise repeated-row check, quadratic and direct.
inline bool is_simple_oracle(const frcodes::IncidenceStructure& s) {
    for (std::size_t i = 0; i < s.num_blocks(); ++i)
        for (std::size_t j = i + 1; j < s.num_blocks(); ++j) {
            bool same = true;
            for (std::size_t p = 0; p < s.num_points() && same; ++p)
                if (s.entry(i, p) != s.entry(j, p)) same = false;
            if (same) return false;
        }
    return true;
}

}  // namespace frtest
