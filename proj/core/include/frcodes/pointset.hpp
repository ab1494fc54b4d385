// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace frcodes {

/// Fixed-capacity set of point indices, stored as a packed bit vector.
///
/// All rows of one incidence structure share the same capacity, so unions
/// and popcounts always run over identically sized word arrays. Union-size
/// queries are the inner loop of the file-size search and never allocate.
class PointSet {
  public:
    PointSet() = default;
    explicit PointSet(std::size_t capacity)
        : bits_(capacity), words_((capacity + 63) / 64, 0) {}

    std::size_t capacity() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    PointSet& operator|=(const PointSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// |*this ∪ o| without materializing the union.
    std::size_t union_count(const PointSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] | o.words_[i]));
        return c;
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t i = 0; i < bits_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

  private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace frcodes
