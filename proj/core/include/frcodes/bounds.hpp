// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frcodes/hierarchy.hpp"
#include "frcodes/incidence.hpp"

namespace frcodes {

/// floor(v * (1 - C(n-rho,k)/C(n,k))): the combinatorial upper bound on
/// M_k. Evaluated with exact big-integer binomials, floored once at the
/// end. C(a,b) = 0 when b > a.
long long binomial_bound(const FrParams& p, int k);

/// The recursive upper bound g(k) on M_k, k = 1..n:
///   g(1) = alpha,  g(k+1) = g(k) + alpha - ceil((rho*g(k) - k*alpha)/(n-k)),
/// with the mathematical ceiling (toward +infinity) of possibly negative
/// rationals. Values are returned unclamped; they may exceed v.
std::vector<long long> recursive_g(const FrParams& p);

/// The counterpart recursion on the dual code, g'(l) for l = 1..v:
///   g'(1) = rho,  g'(l+1) = g'(l) + rho - ceil((alpha*g'(l) - l*rho)/(v-l)).
/// Identical to recursive_g applied to the dual parameters (v,rho,n,alpha).
std::vector<long long> g_prime(const FrParams& p);

/// The dual bound on M_k: the number of indices i in 1..v with
/// g'(i) > n - k. Upper-bounds M_k for every (n,alpha,v,rho)-FR code.
long long dual_bound(const FrParams& p, int k);

/// Smallest reconstruction degree able to support a file of size M:
/// ceil(n * C(M-1,alpha) / C(v,alpha)) + 1, exact rational ceiling.
int silberstein_min_k(const FrParams& p, int M);

/// Per-k bound values with clamped display copies, the g' vector, the
/// reconstruction-degree lower bounds per file size, and (optionally)
/// the exact hierarchy for comparison.
struct BoundReport {
    FrParams params;
    std::vector<long long> binom;        // k = 1..n, inherently within [0,v]
    std::vector<long long> g;            // unclamped
    std::vector<long long> g_clamped;    // min(max(g,0),v)
    std::vector<long long> dual;         // k = 1..n
    std::vector<long long> gp;           // l = 1..v, unclamped
    std::vector<long long> gp_clamped;   // clamped to [0,n]
    std::vector<int> min_k_for_size;     // M = 1..v
    std::optional<std::vector<int>> exact_m;  // k = 1..n when computed
    // Empirical flags; neither monotonicity is guaranteed a priori.
    bool g_monotone = true;
    bool dual_monotone = true;
};

BoundReport bound_report(const FrParams& p,
                         const std::optional<std::vector<int>>& exact_m = std::nullopt);

/// Result of checking exact M_k against the dual bound. When they match,
/// `witness` holds the lexicographically smallest k-subset of block
/// indices achieving the minimum union.
struct CertificateResult {
    bool optimal = false;
    int exact = 0;
    long long bound = 0;  // dual bound at k
    std::vector<std::size_t> witness;
    // Tightest of the other upper bounds at this k, for context.
    long long best_other_bound = 0;
};

/// Requires a regular FR code (bounds need alpha and rho); throws
/// ArgumentError otherwise.
CertificateResult optimality_certificate(const IncidenceStructure& s, int k,
                                         const SearchOptions& options = {});

}  // namespace frcodes
