// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: exercises the paper-scale regressions end to end and
// prints one PASS/FAIL line per criterion. Exits non-zero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frcodes/bounds.hpp"
#include "frcodes/constructions.hpp"
#include "frcodes/hierarchy.hpp"
#include "frcodes/storage.hpp"
#include "../support/random_structures.hpp"

using namespace frcodes;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

template <typename T>
std::string show(const std::vector<T>& xs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << "]";
    return os.str();
}

constexpr unsigned kCorpusSeed = 20250809;

// 200 random regular FR codes with n, v <= 12, shared by criteria 3-5.
const std::vector<FrCode>& corpus() {
    static const std::vector<FrCode> codes = [] {
        std::mt19937_64 rng(kCorpusSeed);
        std::vector<FrCode> out;
        out.reserve(200);
        for (int i = 0; i < 200; ++i) out.push_back(frtest::random_fr_code(rng, 12, 12));
        return out;
    }();
    return codes;
}

std::vector<std::uint8_t> padded_random_file(std::size_t base_len, int multiple,
                                             unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> byte(0, 255);
    std::vector<std::uint8_t> out(base_len);
    for (auto& b : out) b = static_cast<std::uint8_t>(byte(rng));
    while (out.size() % static_cast<std::size_t>(multiple) != 0) out.push_back(0);
    return out;
}

// --- criterion 1 -----------------------------------------------------------

void criterion1() {
    const IncidenceStructure& c = fixture("example2");
    const FileSizeHierarchy h = full_hierarchy(c);
    const std::vector<int> expected_m{0, 4, 7, 9, 10, 10};
    require(h.m == expected_m, "hierarchy of (5,4,10,2) is " + show(h.m) + ", expected " +
                                   show(expected_m));

    const IncidenceStructure& d = fixture("example2-dual");
    require(dual(c) == d, "transpose of the (5,4,10,2) fixture differs from its dual fixture");
    const FileSizeHierarchy hd = full_hierarchy(d);
    const std::vector<int> expected_dual_m{0, 2, 3, 3, 4, 4, 4, 5, 5, 5, 5};
    require(hd.m == expected_dual_m, "dual hierarchy is " + show(hd.m) + ", expected " +
                                         show(expected_dual_m));

    const std::vector<int> expected_n{5, 3, 2, 2, 1, 1, 1, 0, 0, 0, 0};
    require(hd.n_vals == expected_n,
            "dual N staircase is " + show(hd.n_vals) + ", expected " + show(expected_n));
}

// --- criterion 2 -----------------------------------------------------------

void criterion2() {
    const FrParams p{15, 2, 10, 3};
    require(binomial_bound(p, 6) == 8,
            "binomial bound at k=6 is " + std::to_string(binomial_bound(p, 6)) +
                ", expected 8");
    const auto g = recursive_g(p);
    require(g[5] == 7, "g(6) is " + std::to_string(g[5]) + ", expected 7");
    const std::vector<long long> expected_gp{3, 5, 7, 9, 11, 12, 13, 14, 15, 15};
    require(g_prime(p) == expected_gp, "g' is " + show(g_prime(p)) + ", expected " +
                                           show(expected_gp));
    require(dual_bound(p, 6) == 6,
            "dual bound at k=6 is " + std::to_string(dual_bound(p, 6)) + ", expected 6");

    const IncidenceStructure& s = fixture("example3-petersen");
    require(supported_file_size(s, 6) == 6, "exact M_6 differs from 6");

    const std::vector<std::size_t> witness{0, 1, 2, 3, 4, 9};
    PointSet u(s.num_points());
    for (std::size_t i : witness) u |= s.row(i);
    require(u.count() == 6, "witness rows cover " + std::to_string(u.count()) +
                                " points, expected exactly 6");

    const CertificateResult cert = optimality_certificate(s, 6);
    require(cert.optimal, "certificate at k=6 did not match the dual bound");
    require(cert.witness == witness,
            "lexicographically smallest witness is " + show(cert.witness));
}

// --- criterion 3 -----------------------------------------------------------

void criterion3() {
    for (std::size_t idx = 0; idx < corpus().size(); ++idx) {
        const IncidenceStructure& s = corpus()[idx].structure();
        const FileSizeHierarchy direct = full_hierarchy(s);
        const FileSizeHierarchy via_dual = hierarchy_via_dual(s);
        require(direct == via_dual,
                "code " + std::to_string(idx) + ": duality identity broken, direct " +
                    show(direct.m) + " vs dual route " + show(via_dual.m));
        for (int k = 1; k <= static_cast<int>(s.num_blocks()); ++k) {
            const int brute = supported_file_size_bruteforce(s, k);
            require(direct.m[k] == brute,
                    "code " + std::to_string(idx) + ": search found M_" + std::to_string(k) +
                        " = " + std::to_string(direct.m[k]) + " but enumeration found " +
                        std::to_string(brute));
        }
    }
}

// --- criterion 4 -----------------------------------------------------------

void criterion4() {
    std::vector<FrCode> codes = corpus();
    codes.push_back(FrCode(fixture("example2")));
    codes.push_back(FrCode(fixture("example3-petersen")));
    for (std::size_t idx = 0; idx < codes.size(); ++idx) {
        const FrParams p = codes[idx].params();
        const IncidenceStructure& s = codes[idx].structure();
        const FileSizeHierarchy h = full_hierarchy(s);
        const auto g = recursive_g(p);
        for (int k = 1; k <= p.n; ++k) {
            const std::string tag =
                "code " + std::to_string(idx) + " k=" + std::to_string(k) + ": ";
            require(h.m[k] <= binomial_bound(p, k), tag + "binomial bound violated");
            require(h.m[k] <= g[k - 1], tag + "recursive bound violated");
            require(h.m[k] <= dual_bound(p, k), tag + "dual bound violated");
            require(silberstein_min_k(p, h.m[k]) <= k,
                    tag + "reconstruction-degree bound violated");
        }
    }
}

// --- criterion 5 -----------------------------------------------------------

void criterion5() {
    std::mt19937_64 rng(kCorpusSeed + 1);
    for (int trial = 0; trial < 1000; ++trial) {
        const IncidenceStructure s = frtest::random_structure(rng, 12, 12);
        require(dual(dual(s)) == s, "double dual differs at trial " + std::to_string(trial));
    }
    for (const FrCode& code : corpus()) {
        const FrParams p = code.params();
        require(static_cast<long long>(p.n) * p.alpha == static_cast<long long>(p.v) * p.rho,
                "n*alpha != v*rho on a generated code");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const FrParams p = frtest::random_params(rng, 12, 12);
        const FrParams dual_params{p.v, p.rho, p.n, p.alpha};
        require(g_prime(p) == recursive_g(dual_params),
                "g' differs from g on dual parameters at trial " + std::to_string(trial));
    }
}

// --- criterion 6 -----------------------------------------------------------

void simulate_fixture(const std::string& name) {
    const FrCode code(fixture(name));
    const IncidenceStructure& s = code.structure();
    const int n = static_cast<int>(s.num_blocks());
    const FileSizeHierarchy h = full_hierarchy(s);

    for (int k = 1; k <= n; ++k) {
        const int file_size = h.m[k];
        for (unsigned seed = 0; seed < 5; ++seed) {
            const auto file = padded_random_file(1024, file_size, seed * 977 + k);
            const StorageSystem sys = StorageSystem::encode_and_place(code, file, file_size);

            std::vector<int> idx(k);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                const ReconstructOutcome outcome = sys.reconstruct_from(idx);
                require(outcome.data.has_value(),
                        name + ": k=" + std::to_string(k) + " subset gathered only " +
                            std::to_string(outcome.distinct_packets) + " packets for M=" +
                            std::to_string(file_size));
                require(*outcome.data == file,
                        name + ": recovered bytes differ at k=" + std::to_string(k));
                int j = k - 1;
                while (j >= 0 && idx[j] == n - k + j) --j;
                if (j < 0) break;
                ++idx[j];
                for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
            }
        }
    }

    // Single-failure repair restores content exactly, alpha packets moved.
    const auto file = padded_random_file(1024, code.alpha(), 4242);
    StorageSystem sys = StorageSystem::encode_and_place(code, file, code.alpha());
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<std::uint8_t>> before;
        for (int pkt : sys.node_packets(i)) before.push_back(sys.node_packet_bytes(i, pkt));
        sys.fail_node(i);
        const auto log = sys.repair_node(i);
        require(log.size() == static_cast<std::size_t>(code.alpha()),
                name + ": repair of node " + std::to_string(i) + " moved " +
                    std::to_string(log.size()) + " packets, expected " +
                    std::to_string(code.alpha()));
        const auto& packets = sys.node_packets(i);
        for (std::size_t pos = 0; pos < packets.size(); ++pos)
            require(sys.node_packet_bytes(i, packets[pos]) == before[pos],
                    name + ": node " + std::to_string(i) +
                        " bytes differ after repair (packet " +
                        std::to_string(packets[pos]) + ")");
    }
}

void criterion6() {
    simulate_fixture("example2");
    simulate_fixture("example3-petersen");
}

struct Criterion {
    int id;
    std::string name;
    std::function<void()> fn;
    double time_limit_s;  // 0 = no limit
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "hierarchy regression on the (5,4,10,2) code and its dual", criterion1, 1.0},
        {2, "bound and witness regression on the (15,2,10,3) code", criterion2, 5.0},
        {3, "duality identity vs enumeration on 200 random regular codes", criterion3, 60.0},
        {4, "upper-bound soundness across the corpus and fixtures", criterion4, 0.0},
        {5, "structural identities (involution, n*alpha=v*rho, g'=g-dual)", criterion5, 0.0},
        {6, "simulator round-trip and exact repair on both fixtures", criterion6, 30.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.fn();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && c.time_limit_s > 0 && elapsed > c.time_limit_s) {
            std::ostringstream os;
            os << "took " << elapsed << " s, limit " << c.time_limit_s << " s";
            error = os.str();
        }
        if (error.empty()) {
            std::printf("PASS  criterion %d: %s (%.2f s)\n", c.id, c.name.c_str(), elapsed);
        } else {
            std::printf("FAIL  criterion %d: %s: %s\n", c.id, c.name.c_str(), error.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
