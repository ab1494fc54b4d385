// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frcodes/pointset.hpp"

namespace frcodes {

/// Parameters (n, alpha, v, rho) of a fractional repetition code:
/// n storage nodes each holding alpha packets, v distinct packets each
/// replicated on rho nodes. A valid tuple satisfies n*alpha == v*rho.
struct FrParams {
    int n = 0;
    int alpha = 0;
    int v = 0;
    int rho = 0;

    friend bool operator==(const FrParams&, const FrParams&) = default;
};

/// Throws ArgumentError unless p is a plausible FR parameter tuple
/// (all positive, alpha <= v, rho <= n, n*alpha == v*rho).
void check_params(const FrParams& p);

/// A zero-one incidence relation between n blocks (storage nodes) and
/// v points (coded packets). Blocks and points carry 0-based indices;
/// repeated blocks are allowed and kept as distinct rows.
class IncidenceStructure {
  public:
    /// Representation cap: rows are fixed-width bitsets.
    static constexpr std::size_t kMaxPoints = 4096;

    IncidenceStructure(std::size_t num_points, std::vector<PointSet> rows);

    std::size_t num_blocks() const { return rows_.size(); }
    std::size_t num_points() const { return num_points_; }

    const PointSet& row(std::size_t i) const { return rows_[i]; }
    const std::vector<PointSet>& rows() const { return rows_; }

    bool entry(std::size_t block, std::size_t point) const { return rows_[block].test(point); }
    std::size_t row_sum(std::size_t i) const { return rows_[i].count(); }
    std::size_t col_sum(std::size_t j) const;

    std::size_t min_row_sum() const;
    std::size_t max_row_sum() const;

    friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

  private:
    std::size_t num_points_ = 0;
    std::vector<PointSet> rows_;
};

/// Builds a structure from an explicit zero-one matrix.
/// Throws FormatError for an empty matrix, ragged rows, or entries
/// outside {0,1}.
IncidenceStructure from_matrix(const std::vector<std::vector<int>>& rows);

/// Builds a structure from per-block point index lists.
IncidenceStructure from_rows(std::size_t num_points,
                             const std::vector<std::vector<std::size_t>>& rows);

/// Transpose: blocks and points swap roles. An (n,alpha,v,rho) code
/// dualizes to a (v,rho,n,alpha) code, and dual(dual(s)) == s.
IncidenceStructure dual(const IncidenceStructure& s);

/// True iff no two blocks are incident with the same point set.
bool is_simple(const IncidenceStructure& s);

/// Why a structure failed FR validation: the first row (or column) whose
/// sum differs from row 0's (column 0's) sum, or a degenerate all-zero case.
struct RegularityIssue {
    enum class Kind { Row, Column, Degenerate };
    Kind kind = Kind::Row;
    std::size_t index = 0;
    std::size_t sum = 0;
    std::size_t expected = 0;

    std::string describe() const;
};

class FrCode;

/// Outcome of validate_fr: either a code or the first regularity violation.
struct FrValidation {
    std::optional<RegularityIssue> issue;
    // Set iff issue is empty.
    std::optional<FrParams> params;

    bool ok() const { return !issue.has_value(); }
};

/// An incidence structure validated to have constant row sum alpha and
/// constant column sum rho. n*alpha == v*rho then holds automatically.
class FrCode {
  public:
    /// Throws ArgumentError if s is not regular; prefer validate_fr when
    /// the input is untrusted.
    explicit FrCode(IncidenceStructure s);

    const IncidenceStructure& structure() const { return structure_; }
    int alpha() const { return alpha_; }
    int rho() const { return rho_; }
    FrParams params() const;

    friend bool operator==(const FrCode&, const FrCode&) = default;

  private:
    IncidenceStructure structure_;
    int alpha_ = 0;
    int rho_ = 0;
};

/// Checks row and column regularity. Non-regularity is a reportable
/// outcome, not an error: heterogeneous structures stay usable for
/// hierarchy computations.
FrValidation validate_fr(const IncidenceStructure& s);

/// Text form, bit-exact: header "n v", then n rows of v chars from {0,1},
/// LF line endings, no trailing whitespace.
std::string serialize(const IncidenceStructure& s);

/// Inverse of serialize. Lines starting with '#' (and blank lines) before
/// the header are ignored. Throws FormatError with a 1-based line number
/// on malformed input.
IncidenceStructure parse_structure(std::string_view text);

}  // namespace frcodes
