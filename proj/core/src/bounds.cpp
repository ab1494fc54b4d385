// SPDX-License-Identifier: Apache-2.0

#include "frcodes/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "frcodes/errors.hpp"
#include "search_detail.hpp"

namespace frcodes {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    cpp_int r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact: r is the binomial C(a-b+i, i) after each step
    }
    return r;
}

// Ceiling toward +infinity of a/b for b > 0 and any sign of a.
long long ceil_div(long long a, long long b) {
    if (a >= 0) return (a + b - 1) / b;
    return -((-a) / b);
}

void check_k_range(const FrParams& p, int k) {
    if (k < 1 || k > p.n)
        throw ArgumentError("k = " + std::to_string(k) + " out of range [1," +
                            std::to_string(p.n) + "]");
}

}  // namespace

long long binomial_bound(const FrParams& p, int k) {
    check_params(p);
    check_k_range(p, k);
    const cpp_int cn = binom(p.n, k);
    const cpp_int cnr = binom(p.n - p.rho, k);
    // floor(v * (cn - cnr) / cn), all quantities non-negative.
    const cpp_int value = (cpp_int(p.v) * (cn - cnr)) / cn;
    return value.convert_to<long long>();
}

std::vector<long long> recursive_g(const FrParams& p) {
    check_params(p);
    std::vector<long long> g(p.n);
    g[0] = p.alpha;
    for (int k = 1; k < p.n; ++k) {
        const long long num =
            static_cast<long long>(p.rho) * g[k - 1] - static_cast<long long>(k) * p.alpha;
        g[k] = g[k - 1] + p.alpha - ceil_div(num, p.n - k);
    }
    return g;
}

std::vector<long long> g_prime(const FrParams& p) {
    check_params(p);
    std::vector<long long> gp(p.v);
    gp[0] = p.rho;
    for (int l = 1; l < p.v; ++l) {
        const long long num =
            static_cast<long long>(p.alpha) * gp[l - 1] - static_cast<long long>(l) * p.rho;
        gp[l] = gp[l - 1] + p.rho - ceil_div(num, p.v - l);
    }
    return gp;
}

long long dual_bound(const FrParams& p, int k) {
    check_params(p);
    check_k_range(p, k);
    const std::vector<long long> gp = g_prime(p);
    long long count = 0;
    for (long long value : gp)
        if (value > p.n - k) ++count;
    return count;
}

int silberstein_min_k(const FrParams& p, int M) {
    check_params(p);
    if (M < 1 || M > p.v)
        throw ArgumentError("file size M = " + std::to_string(M) + " out of range [1," +
                            std::to_string(p.v) + "]");
    const cpp_int num = cpp_int(p.n) * binom(M - 1, p.alpha);
    const cpp_int den = binom(p.v, p.alpha);
    const cpp_int k = (num + den - 1) / den + 1;
    return k.convert_to<int>();
}

BoundReport bound_report(const FrParams& p, const std::optional<std::vector<int>>& exact_m) {
    check_params(p);
    BoundReport r;
    r.params = p;
    r.g = recursive_g(p);
    r.gp = g_prime(p);
    r.binom.reserve(p.n);
    r.dual.reserve(p.n);
    for (int k = 1; k <= p.n; ++k) {
        r.binom.push_back(binomial_bound(p, k));
        long long count = 0;
        for (long long value : r.gp)
            if (value > p.n - k) ++count;
        r.dual.push_back(count);
    }
    r.g_clamped.reserve(p.n);
    for (long long value : r.g)
        r.g_clamped.push_back(std::clamp<long long>(value, 0, p.v));
    r.gp_clamped.reserve(p.v);
    for (long long value : r.gp)
        r.gp_clamped.push_back(std::clamp<long long>(value, 0, p.n));
    r.min_k_for_size.reserve(p.v);
    for (int M = 1; M <= p.v; ++M) r.min_k_for_size.push_back(silberstein_min_k(p, M));
    for (int k = 1; k < p.n; ++k) {
        if (r.g[k] < r.g[k - 1]) r.g_monotone = false;
        if (r.dual[k] < r.dual[k - 1]) r.dual_monotone = false;
    }
    if (exact_m) {
        if (static_cast<int>(exact_m->size()) != p.n)
            throw ArgumentError("exact hierarchy must have one entry per k = 1..n");
        r.exact_m = exact_m;
    }
    return r;
}

CertificateResult optimality_certificate(const IncidenceStructure& s, int k,
                                         const SearchOptions& options) {
    const FrValidation val = validate_fr(s);
    if (!val.ok())
        throw ArgumentError("optimality certificate needs a regular FR code: " +
                            val.issue->describe());
    const FrParams p = *val.params;
    check_k_range(p, k);

    detail::BudgetCounter budget{options.budget};
    CertificateResult result;
    result.exact = detail::min_union(s, k, budget);
    result.bound = dual_bound(p, k);
    const std::vector<long long> g = recursive_g(p);
    result.best_other_bound =
        std::min(binomial_bound(p, k), std::clamp<long long>(g[k - 1], 0, p.v));
    if (result.exact == result.bound) {
        result.optimal = true;
        result.witness = detail::lex_min_witness(s, k, result.exact, budget);
    }
    return result;
}

}  // namespace frcodes
