// SPDX-License-Identifier: Apache-2.0

#include "frcodes/storage.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "frcodes/errors.hpp"
#include "frcodes/gf256.hpp"

namespace frcodes {

MdsCode::MdsCode(int length, int dimension) : length_(length), dim_(dimension) {
    if (length < 1 || length > 64)
        throw ArgumentError("MDS code length must be in [1,64], got " + std::to_string(length));
    if (dimension < 1 || dimension > length)
        throw ArgumentError("MDS dimension must be in [1," + std::to_string(length) +
                            "], got " + std::to_string(dimension));
    gen_.resize(static_cast<std::size_t>(dim_) * length_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < length_; ++j)
            gen_[i * length_ + j] =
                gf256::pow(static_cast<std::uint8_t>(j), static_cast<unsigned>(i));
    verify();
}

void MdsCode::verify() const {
    auto check = [&](const std::vector<int>& cols) {
        std::vector<std::uint8_t> sub(static_cast<std::size_t>(dim_) * dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) sub[r * dim_ + c] = gen(r, cols[c]);
        if (!gf256::invert_matrix(std::move(sub), dim_))
            throw std::logic_error("MDS verification failed: singular column subset");
    };

    if (length_ <= 16) {
        std::vector<int> cols(dim_);
        std::iota(cols.begin(), cols.end(), 0);
        while (true) {
            check(cols);
            int j = dim_ - 1;
            while (j >= 0 && cols[j] == length_ - dim_ + j) --j;
            if (j < 0) break;
            ++cols[j];
            for (int t = j + 1; t < dim_; ++t) cols[t] = cols[t - 1] + 1;
        }
        return;
    }
    std::mt19937 rng(0x5EED0CDE);
    std::vector<int> all(length_);
    std::iota(all.begin(), all.end(), 0);
    for (int trial = 0; trial < 10'000; ++trial) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> cols(all.begin(), all.begin() + dim_);
        check(cols);
    }
}

std::vector<std::vector<std::uint8_t>> MdsCode::encode(
    std::span<const std::uint8_t> file) const {
    if (file.size() % dim_ != 0)
        throw ArgumentError("file length " + std::to_string(file.size()) +
                            " is not a multiple of M = " + std::to_string(dim_));
    const std::size_t packet_len = file.size() / dim_;
    std::vector<std::vector<std::uint8_t>> out(length_,
                                               std::vector<std::uint8_t>(packet_len, 0));
    for (int j = 0; j < length_; ++j) {
        for (int i = 0; i < dim_; ++i) {
            const std::uint8_t coeff = gen(i, j);
            if (coeff == 0) continue;
            const std::uint8_t* src = file.data() + static_cast<std::size_t>(i) * packet_len;
            for (std::size_t t = 0; t < packet_len; ++t)
                out[j][t] ^= gf256::mul(coeff, src[t]);
        }
    }
    return out;
}

std::vector<std::uint8_t> MdsCode::decode(
    const std::vector<int>& packet_ids,
    const std::vector<const std::vector<std::uint8_t>*>& packets) const {
    if (static_cast<int>(packet_ids.size()) != dim_ || packets.size() != packet_ids.size())
        throw ArgumentError("decode needs exactly M distinct packets");
    std::vector<std::uint8_t> sub(static_cast<std::size_t>(dim_) * dim_);
    for (int r = 0; r < dim_; ++r)
        for (int i = 0; i < dim_; ++i) sub[r * dim_ + i] = gen(i, packet_ids[r]);
    auto inv = gf256::invert_matrix(std::move(sub), dim_);
    if (!inv)
        throw std::logic_error("singular submatrix for a verified MDS code");
    const std::size_t packet_len = packets.empty() ? 0 : packets[0]->size();
    std::vector<std::uint8_t> file(static_cast<std::size_t>(dim_) * packet_len, 0);

    // sources = inverse(sub) applied to the received packets, bytewise.
    // sub maps sources to packets: packet_r = sum_i gen(i, id_r) * source_i.
    for (int i = 0; i < dim_; ++i) {
        std::uint8_t* dst = file.data() + static_cast<std::size_t>(i) * packet_len;
        for (int r = 0; r < dim_; ++r) {
            const std::uint8_t coeff = (*inv)[i * dim_ + r];
            if (coeff == 0) continue;
            const std::vector<std::uint8_t>& y = *packets[r];
            for (std::size_t t = 0; t < packet_len; ++t) dst[t] ^= gf256::mul(coeff, y[t]);
        }
    }
    return file;
}

StorageSystem::StorageSystem(FrCode code, MdsCode mds, std::size_t packet_len)
    : code_(std::move(code)), mds_(std::move(mds)), packet_len_(packet_len) {}

StorageSystem StorageSystem::encode_and_place(const FrCode& code,
                                              std::span<const std::uint8_t> file,
                                              int mds_dim) {
    const IncidenceStructure& s = code.structure();
    const int v = static_cast<int>(s.num_points());
    if (v > 64) throw ArgumentError("simulator supports at most 64 packets, code has " +
                                    std::to_string(v));
    if (mds_dim < 1 || mds_dim > v)
        throw ArgumentError("M = " + std::to_string(mds_dim) + " out of range [1," +
                            std::to_string(v) + "]");
    if (file.size() % static_cast<std::size_t>(mds_dim) != 0)
        throw ArgumentError("file length " + std::to_string(file.size()) +
                            " is not a multiple of M = " + std::to_string(mds_dim) +
                            " (pad before placing)");

    MdsCode mds(v, mds_dim);
    auto stripe = mds.encode(file);

    StorageSystem sys(code, std::move(mds), file.size() / mds_dim);
    const std::size_t n = s.num_blocks();
    sys.node_packets_.resize(n);
    sys.node_bytes_.resize(n);
    sys.alive_.assign(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p : s.row(i).to_indices()) {
            sys.node_packets_[i].push_back(static_cast<int>(p));
            sys.node_bytes_[i].push_back(stripe[p]);  // independent replica copy
        }
    }
    return sys;
}

bool StorageSystem::node_alive(int i) const {
    if (i < 0 || i >= num_nodes())
        throw ArgumentError("node " + std::to_string(i) + " out of range");
    return alive_[i];
}

const std::vector<int>& StorageSystem::node_packets(int i) const {
    if (i < 0 || i >= num_nodes())
        throw ArgumentError("node " + std::to_string(i) + " out of range");
    return node_packets_[i];
}

std::size_t StorageSystem::packet_position(int node, int packet) const {
    const auto& ids = node_packets_[node];
    const auto it = std::lower_bound(ids.begin(), ids.end(), packet);
    if (it == ids.end() || *it != packet)
        throw ArgumentError("node " + std::to_string(node) + " does not hold packet " +
                            std::to_string(packet));
    return static_cast<std::size_t>(it - ids.begin());
}

const std::vector<std::uint8_t>& StorageSystem::node_packet_bytes(int i, int p) const {
    if (i < 0 || i >= num_nodes())
        throw ArgumentError("node " + std::to_string(i) + " out of range");
    return node_bytes_[i][packet_position(i, p)];
}

void StorageSystem::fail_node(int i) {
    if (!node_alive(i)) throw ArgumentError("node " + std::to_string(i) + " is already failed");
    for (int p : node_packets_[i]) {
        bool replica_left = false;
        for (int j = 0; j < num_nodes() && !replica_left; ++j)
            if (j != i && alive_[j] && code_.structure().entry(j, p)) replica_left = true;
        if (!replica_left)
            throw ToleranceError("failing node " + std::to_string(i) +
                                 " would leave packet " + std::to_string(p) +
                                 " with zero live replicas");
    }
    alive_[i] = false;
    for (auto& bytes : node_bytes_[i]) {
        bytes.clear();
        bytes.shrink_to_fit();
    }
}

std::vector<TransferRecord> StorageSystem::repair_node(int i) {
    if (node_alive(i)) throw ArgumentError("node " + std::to_string(i) + " is not failed");
    std::vector<TransferRecord> log;
    log.reserve(node_packets_[i].size());
    for (std::size_t pos = 0; pos < node_packets_[i].size(); ++pos) {
        const int p = node_packets_[i][pos];
        int helper = -1;
        for (int j = 0; j < num_nodes(); ++j) {
            if (j != i && alive_[j] && code_.structure().entry(j, p)) {
                helper = j;
                break;
            }
        }
        if (helper < 0)
            throw UnrecoverableError("packet " + std::to_string(p) +
                                     " has no live replica; node " + std::to_string(i) +
                                     " cannot be repaired");
        node_bytes_[i][pos] = node_bytes_[helper][packet_position(helper, p)];
        log.push_back(TransferRecord{p, helper, i, packet_len_});
    }
    alive_[i] = true;
    return log;
}

ReconstructOutcome StorageSystem::reconstruct_from(const std::vector<int>& nodes) const {
    // Deduplicate while keeping the caller's order for replica selection.
    std::vector<int> unique_nodes;
    for (int i : nodes) {
        if (!node_alive(i))
            throw ArgumentError("node " + std::to_string(i) + " is not alive");
        if (std::find(unique_nodes.begin(), unique_nodes.end(), i) == unique_nodes.end())
            unique_nodes.push_back(i);
    }

    // packet id -> first holding node in the given order
    std::vector<std::pair<int, int>> holders;  // (packet, node)
    for (int i : unique_nodes)
        for (int p : node_packets_[i])
            if (std::none_of(holders.begin(), holders.end(),
                             [&](const auto& h) { return h.first == p; }))
                holders.emplace_back(p, i);
    std::sort(holders.begin(), holders.end());

    ReconstructOutcome out;
    out.distinct_packets = holders.size();
    const int m = mds_.dimension();
    if (static_cast<int>(holders.size()) < m) return out;

    std::vector<int> ids(m);
    std::vector<const std::vector<std::uint8_t>*> packets(m);
    for (int r = 0; r < m; ++r) {
        ids[r] = holders[r].first;
        const int node = holders[r].second;
        packets[r] = &node_bytes_[node][packet_position(node, ids[r])];
    }
    out.data = mds_.decode(ids, packets);
    return out;
}

}  // namespace frcodes
