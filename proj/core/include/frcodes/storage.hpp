// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frcodes/incidence.hpp"

namespace frcodes {

/// A [v, M] erasure code over GF(256) with a Vandermonde generator:
/// column j evaluates the powers of field element j, so every M columns
/// form an invertible matrix. The MDS property is re-verified at
/// construction: exhaustively for v <= 16, by randomized spot checks of
/// 10^4 column subsets for larger v.
class MdsCode {
  public:
    MdsCode(int length, int dimension);

    int length() const { return length_; }
    int dimension() const { return dim_; }
    std::uint8_t gen(int row, int col) const { return gen_[row * length_ + col]; }

    /// file.size() must be a multiple of the dimension; packet j of the
    /// result is the j-th coded symbol of every stripe byte.
    std::vector<std::vector<std::uint8_t>> encode(std::span<const std::uint8_t> file) const;

    /// Recovers the file from exactly `dimension` distinct coded packets.
    /// Throws std::logic_error if the selected columns are singular
    /// (which would contradict the verified MDS property).
    std::vector<std::uint8_t> decode(
        const std::vector<int>& packet_ids,
        const std::vector<const std::vector<std::uint8_t>*>& packets) const;

  private:
    void verify() const;

    int length_;
    int dim_;
    std::vector<std::uint8_t> gen_;  // dim_ x length_, row-major
};

struct TransferRecord {
    int packet = 0;
    int helper = 0;
    int target = 0;
    std::size_t bytes = 0;
};

struct ReconstructOutcome {
    /// Set iff enough distinct packets were gathered.
    std::optional<std::vector<std::uint8_t>> data;
    std::size_t distinct_packets = 0;
};

/// The simulated pipeline: a file is MDS-encoded into v packets, each
/// replicated on the rho nodes its point is incident with. Nodes hold
/// real byte copies; failing a node discards them and repair copies them
/// back from live replicas, one whole packet per transfer.
class StorageSystem {
  public:
    /// Requires v <= 64, 1 <= M <= v, and file length divisible by M
    /// (callers pad; partial packets are rejected, not padded here).
    static StorageSystem encode_and_place(const FrCode& code,
                                          std::span<const std::uint8_t> file, int mds_dim);

    /// Marks node i failed and discards its bytes. Refused (ToleranceError)
    /// if any of its packets would lose the last live replica.
    void fail_node(int i);

    /// Restores a failed node byte-for-byte, fetching each packet from its
    /// lowest-index live holder. Returns one record per transferred packet
    /// (always exactly alpha of them).
    std::vector<TransferRecord> repair_node(int i);

    /// Gathers the distinct packets held by the given live nodes and, if at
    /// least M are present, decodes the original file.
    ReconstructOutcome reconstruct_from(const std::vector<int>& nodes) const;

    int num_nodes() const { return static_cast<int>(alive_.size()); }
    bool node_alive(int i) const;
    const FrCode& code() const { return code_; }
    const MdsCode& mds() const { return mds_; }
    int mds_dimension() const { return mds_.dimension(); }
    std::size_t packet_length() const { return packet_len_; }

    const std::vector<int>& node_packets(int i) const;
    /// The bytes node i currently stores for packet p (empty after failure).
    const std::vector<std::uint8_t>& node_packet_bytes(int i, int p) const;

  private:
    StorageSystem(FrCode code, MdsCode mds, std::size_t packet_len);

    std::size_t packet_position(int node, int packet) const;

    FrCode code_;
    MdsCode mds_;
    std::size_t packet_len_;
    std::vector<std::vector<int>> node_packets_;
    std::vector<std::vector<std::vector<std::uint8_t>>> node_bytes_;
    std::vector<bool> alive_;
};

}  // namespace frcodes
