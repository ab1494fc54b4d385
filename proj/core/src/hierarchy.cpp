// SPDX-License-Identifier: Apache-2.0

#include "frcodes/hierarchy.hpp"

#include <algorithm>
#include <numeric>

#include "frcodes/errors.hpp"
#include "search_detail.hpp"

namespace frcodes {

namespace detail {
namespace {

void check_k(const IncidenceStructure& s, int k) {
    if (k < 1 || k > static_cast<int>(s.num_blocks()))
        throw ArgumentError("k = " + std::to_string(k) + " out of range [1," +
                            std::to_string(s.num_blocks()) + "]");
}

class MinUnionSearch {
  public:
    MinUnionSearch(const IncidenceStructure& s, int k, BudgetCounter& budget)
        : s_(s), k_(k), budget_(budget) {
        const std::size_t n = s.num_blocks();
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::vector<std::size_t> sizes(n);
        for (std::size_t i = 0; i < n; ++i) sizes[i] = s.row(i).count();
        // Ascending row size, ties by block index: small rows first keeps
        // partial unions tight and makes visit counts reproducible.
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
    }

    std::size_t run() {
        best_ = s_.num_points() + 1;
        dfs(0, k_, PointSet(s_.num_points()));
        return best_;
    }

  private:
    void dfs(std::size_t pos, int remaining, const PointSet& acc) {
        const std::size_t n = order_.size();
        for (std::size_t i = pos; i + remaining <= n; ++i) {
            budget_.tick();
            const PointSet& row = s_.row(order_[i]);
            const std::size_t cnt = acc.union_count(row);
            // A union never shrinks when blocks are added, so a partial
            // union at or above the incumbent cannot improve it.
            if (cnt >= best_) continue;
            if (remaining == 1) {
                best_ = cnt;
                continue;
            }
            PointSet next = acc;
            next |= row;
            dfs(i + 1, remaining - 1, next);
        }
    }

    const IncidenceStructure& s_;
    int k_;
    BudgetCounter& budget_;
    std::vector<std::size_t> order_;
    std::size_t best_ = 0;
};

}  // namespace

int min_union(const IncidenceStructure& s, int k, BudgetCounter& budget) {
    check_k(s, k);
    return static_cast<int>(MinUnionSearch(s, k, budget).run());
}

std::vector<std::size_t> lex_min_witness(const IncidenceStructure& s, int k, int target,
                                         BudgetCounter& budget) {
    check_k(s, k);
    const std::size_t n = s.num_blocks();
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> found;

    // Depth-first in ascending index order: the first complete subset
    // whose union hits the target is the lexicographically smallest.
    auto dfs = [&](auto&& self, std::size_t pos, int remaining, const PointSet& acc) -> bool {
        for (std::size_t i = pos; i + remaining <= n; ++i) {
            budget.tick();
            const PointSet& row = s.row(i);
            const std::size_t cnt = acc.union_count(row);
            if (cnt > static_cast<std::size_t>(target)) continue;
            chosen.push_back(i);
            if (remaining == 1) {
                if (cnt == static_cast<std::size_t>(target)) {
                    found = chosen;
                    return true;
                }
            } else {
                PointSet next = acc;
                next |= row;
                if (self(self, i + 1, remaining - 1, next)) return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    dfs(dfs, 0, k, PointSet(s.num_points()));
    return found;
}

}  // namespace detail

namespace {

FileSizeHierarchy hierarchy_impl(const IncidenceStructure& s, detail::BudgetCounter& budget) {
    const int n = static_cast<int>(s.num_blocks());
    const int v = static_cast<int>(s.num_points());
    FileSizeHierarchy h;
    h.m.resize(n + 1);
    h.n_vals.resize(n + 1);
    h.m[0] = 0;
    h.n_vals[0] = v;
    for (int k = 1; k <= n; ++k) {
        h.m[k] = detail::min_union(s, k, budget);
        h.n_vals[k] = v - h.m[k];
    }
    return h;
}

}  // namespace

int supported_file_size(const IncidenceStructure& s, int k, const SearchOptions& options,
                        SearchStats* stats) {
    detail::BudgetCounter budget{options.budget};
    const int result = detail::min_union(s, k, budget);
    if (stats) stats->visited = budget.used;
    return result;
}

int supported_file_size_bruteforce(const IncidenceStructure& s, int k,
                                   const SearchOptions& options) {
    detail::check_k(s, k);
    const std::size_t n = s.num_blocks();

    // C(n,k) with saturation just above the cap.
    unsigned long long subsets = 1;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) {
        const unsigned __int128 next =
            static_cast<unsigned __int128>(subsets) * (n - k + i) / i;
        if (next > options.bruteforce_cap) {
            throw ResourceError("C(" + std::to_string(n) + "," + std::to_string(k) +
                                ") exceeds the enumeration cap of " +
                                std::to_string(options.bruteforce_cap));
        }
        subsets = static_cast<unsigned long long>(next);
    }

    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::size_t best = s.num_points() + 1;
    while (true) {
        PointSet u(s.num_points());
        for (std::size_t i : idx) u |= s.row(i);
        best = std::min(best, u.count());

        // Next combination in lexicographic order.
        int j = k - 1;
        while (j >= 0 && idx[j] == n - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return static_cast<int>(best);
}

FileSizeHierarchy full_hierarchy(const IncidenceStructure& s, const SearchOptions& options) {
    detail::BudgetCounter budget{options.budget};
    return hierarchy_impl(s, budget);
}

int n_value(const IncidenceStructure& s, int k, const SearchOptions& options) {
    const int v = static_cast<int>(s.num_points());
    if (k == 0) return v;
    if (k < 0 || k > static_cast<int>(s.num_blocks()))
        throw ArgumentError("k = " + std::to_string(k) + " out of range [0," +
                            std::to_string(s.num_blocks()) + "]");
    detail::BudgetCounter budget{options.budget};
    return v - detail::min_union(s, k, budget);
}

FileSizeHierarchy hierarchy_via_dual(const IncidenceStructure& s,
                                     const SearchOptions& options) {
    const int n = static_cast<int>(s.num_blocks());
    const int v = static_cast<int>(s.num_points());
    detail::BudgetCounter budget{options.budget};
    const IncidenceStructure d = dual(s);

    // N_i(dual) = n - M_i(dual), i = 1..v.
    std::vector<int> n_dual(v + 1);
    n_dual[0] = n;
    for (int i = 1; i <= v; ++i) n_dual[i] = n - detail::min_union(d, i, budget);

    FileSizeHierarchy h;
    h.m.resize(n + 1);
    h.n_vals.resize(n + 1);
    h.m[0] = 0;
    h.n_vals[0] = v;
    for (int k = 1; k <= n; ++k) {
        int count = 0;
        for (int i = 1; i <= v; ++i)
            if (n_dual[i] < k) ++count;
        h.m[k] = count;
        h.n_vals[k] = v - count;
    }
    return h;
}

std::vector<ParetoPoint> pareto_points(const IncidenceStructure& s,
                                       const SearchOptions& options) {
    const int n = static_cast<int>(s.num_blocks());
    const int v = static_cast<int>(s.num_points());
    detail::BudgetCounter budget{options.budget};
    const FileSizeHierarchy h = hierarchy_impl(s, budget);
    const FileSizeHierarchy hd = hierarchy_impl(dual(s), budget);
    // hd.n_vals[l] = n - M_l(dual) is the dual staircase, indices 0..v.

    std::vector<ParetoPoint> out;
    for (int k0 = 0; k0 <= n; ++k0) {
        const int l0 = h.n_vals[k0];
        if (hd.n_vals[l0] != k0) continue;
        bool strict = true;
        for (int k = k0 + 1; k <= n && strict; ++k)
            if (h.n_vals[k] >= h.n_vals[k0]) strict = false;
        for (int l = l0 + 1; l <= v && strict; ++l)
            if (hd.n_vals[l] >= hd.n_vals[l0]) strict = false;
        if (strict) out.push_back(ParetoPoint{k0, l0, k0 == 0 || l0 == 0});
    }
    return out;
}

}  // namespace frcodes
