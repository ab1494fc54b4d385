// SPDX-License-Identifier: Apache-2.0

#include "frcodes/incidence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "frcodes/errors.hpp"
#include "text_detail.hpp"

namespace frcodes {

void check_params(const FrParams& p) {
    if (p.n < 1 || p.alpha < 1 || p.v < 1 || p.rho < 1)
        throw ArgumentError("FR parameters must all be positive");
    if (p.alpha > p.v)
        throw ArgumentError("alpha exceeds the number of points");
    if (p.rho > p.n)
        throw ArgumentError("rho exceeds the number of blocks");
    if (static_cast<long long>(p.n) * p.alpha != static_cast<long long>(p.v) * p.rho)
        throw ArgumentError("n*alpha != v*rho");
}

IncidenceStructure::IncidenceStructure(std::size_t num_points, std::vector<PointSet> rows)
    : num_points_(num_points), rows_(std::move(rows)) {
    if (rows_.empty()) throw ArgumentError("incidence structure needs at least one block");
    if (num_points_ == 0) throw ArgumentError("incidence structure needs at least one point");
    if (num_points_ > kMaxPoints)
        throw ArgumentError("number of points exceeds the representation cap of " +
                            std::to_string(kMaxPoints));
    for (const PointSet& r : rows_)
        if (r.capacity() != num_points_)
            throw ArgumentError("row capacity does not match the number of points");
}

std::size_t IncidenceStructure::col_sum(std::size_t j) const {
    std::size_t c = 0;
    for (const PointSet& r : rows_) c += r.test(j) ? 1 : 0;
    return c;
}

std::size_t IncidenceStructure::min_row_sum() const {
    std::size_t best = num_points_;
    for (const PointSet& r : rows_) best = std::min(best, r.count());
    return best;
}

std::size_t IncidenceStructure::max_row_sum() const {
    std::size_t best = 0;
    for (const PointSet& r : rows_) best = std::max(best, r.count());
    return best;
}

IncidenceStructure from_matrix(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw FormatError("empty matrix");
    const std::size_t v = rows[0].size();
    if (v > IncidenceStructure::kMaxPoints)
        throw FormatError("matrix has more than " +
                          std::to_string(IncidenceStructure::kMaxPoints) + " columns");
    std::vector<PointSet> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != v)
            throw FormatError("ragged matrix: row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(v));
        PointSet r(v);
        for (std::size_t j = 0; j < v; ++j) {
            if (rows[i][j] == 1)
                r.set(j);
            else if (rows[i][j] != 0)
                throw FormatError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is " + std::to_string(rows[i][j]) + ", not in {0,1}");
        }
        out.push_back(std::move(r));
    }
    return IncidenceStructure(v, std::move(out));
}

IncidenceStructure from_rows(std::size_t num_points,
                             const std::vector<std::vector<std::size_t>>& rows) {
    if (rows.empty()) throw ArgumentError("incidence structure needs at least one block");
    std::vector<PointSet> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        PointSet r(num_points);
        for (std::size_t p : rows[i]) {
            if (p >= num_points)
                throw ArgumentError("block " + std::to_string(i) + " references point " +
                                    std::to_string(p) + " outside [0," +
                                    std::to_string(num_points) + ")");
            r.set(p);
        }
        out.push_back(std::move(r));
    }
    return IncidenceStructure(num_points, std::move(out));
}

IncidenceStructure dual(const IncidenceStructure& s) {
    const std::size_t n = s.num_blocks();
    const std::size_t v = s.num_points();
    std::vector<PointSet> cols(v, PointSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : s.row(i).to_indices()) cols[j].set(i);
    return IncidenceStructure(n, std::move(cols));
}

bool is_simple(const IncidenceStructure& s) {
    std::vector<const PointSet*> rows;
    rows.reserve(s.num_blocks());
    for (const PointSet& r : s.rows()) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(),
              [](const PointSet* a, const PointSet* b) { return a->words() < b->words(); });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (*rows[i] == *rows[i - 1]) return false;
    return true;
}

std::string RegularityIssue::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Row:
            os << "row " << index << " has sum " << sum << ", expected " << expected
               << " (sum of row 0)";
            break;
        case Kind::Column:
            os << "column " << index << " has sum " << sum << ", expected " << expected
               << " (sum of column 0)";
            break;
        case Kind::Degenerate:
            os << "all row sums are 0; an FR code needs alpha >= 1";
            break;
    }
    return os.str();
}

FrValidation validate_fr(const IncidenceStructure& s) {
    FrValidation out;
    const std::size_t alpha = s.row_sum(0);
    for (std::size_t i = 1; i < s.num_blocks(); ++i) {
        const std::size_t sum = s.row_sum(i);
        if (sum != alpha) {
            out.issue = RegularityIssue{RegularityIssue::Kind::Row, i, sum, alpha};
            return out;
        }
    }
    const std::size_t rho = s.col_sum(0);
    for (std::size_t j = 1; j < s.num_points(); ++j) {
        const std::size_t sum = s.col_sum(j);
        if (sum != rho) {
            out.issue = RegularityIssue{RegularityIssue::Kind::Column, j, sum, rho};
            return out;
        }
    }
    if (alpha == 0) {
        out.issue = RegularityIssue{RegularityIssue::Kind::Degenerate, 0, 0, 0};
        return out;
    }
    out.params = FrParams{static_cast<int>(s.num_blocks()), static_cast<int>(alpha),
                          static_cast<int>(s.num_points()), static_cast<int>(rho)};
    return out;
}

FrCode::FrCode(IncidenceStructure s) : structure_(std::move(s)) {
    FrValidation val = validate_fr(structure_);
    if (!val.ok()) throw ArgumentError("not an FR code: " + val.issue->describe());
    alpha_ = val.params->alpha;
    rho_ = val.params->rho;
}

FrParams FrCode::params() const {
    return FrParams{static_cast<int>(structure_.num_blocks()), alpha_,
                    static_cast<int>(structure_.num_points()), rho_};
}

std::string serialize(const IncidenceStructure& s) {
    std::string out;
    const std::size_t n = s.num_blocks();
    const std::size_t v = s.num_points();
    out.reserve((v + 1) * (n + 1));
    out += std::to_string(n);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < v; ++j) out += s.entry(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

namespace detail {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

namespace {

[[noreturn]] void fail(std::size_t line_index, const std::string& what) {
    throw FormatError("line " + std::to_string(line_index + 1) + ": " + what);
}

bool parse_uint(std::string_view tok, std::size_t& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

IncidenceStructure parse_matrix_at(const std::vector<std::string_view>& lines,
                                   std::size_t& pos) {
    if (pos >= lines.size()) throw FormatError("missing matrix header");
    const std::string_view header = lines[pos];
    if (header.find('\r') != std::string_view::npos)
        fail(pos, "carriage return found; LF line endings required");
    const std::size_t space = header.find(' ');
    std::size_t n = 0, v = 0;
    if (space == std::string_view::npos || !parse_uint(header.substr(0, space), n) ||
        !parse_uint(header.substr(space + 1), v))
        fail(pos, "header must be two space-separated integers \"n v\"");
    if (n == 0 || v == 0) fail(pos, "n and v must be positive");
    if (v > IncidenceStructure::kMaxPoints)
        fail(pos, "v exceeds the representation cap of " +
                      std::to_string(IncidenceStructure::kMaxPoints));
    ++pos;
    std::vector<PointSet> rows;
    rows.reserve(std::min(n, lines.size() - std::min(pos, lines.size())));
    for (std::size_t i = 0; i < n; ++i, ++pos) {
        if (pos >= lines.size())
            throw FormatError("line " + std::to_string(pos + 1) + ": expected row " +
                              std::to_string(i) + " of " + std::to_string(n) +
                              " but input ended");
        const std::string_view line = lines[pos];
        if (line.find('\r') != std::string_view::npos)
            fail(pos, "carriage return found; LF line endings required");
        if (line.size() != v)
            fail(pos, "row has " + std::to_string(line.size()) + " characters, expected " +
                          std::to_string(v));
        PointSet r(v);
        for (std::size_t j = 0; j < v; ++j) {
            if (line[j] == '1')
                r.set(j);
            else if (line[j] != '0')
                fail(pos, std::string("invalid character '") + line[j] +
                              "' in row (only 0 and 1 allowed)");
        }
        rows.push_back(std::move(r));
    }
    return IncidenceStructure(v, std::move(rows));
}

}  // namespace detail

IncidenceStructure parse_structure(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::size_t pos = 0;
    while (pos < lines.size() &&
           (detail::is_blank(lines[pos]) || lines[pos].starts_with('#')))
        ++pos;
    if (pos >= lines.size()) throw FormatError("empty input: no matrix header found");
    IncidenceStructure s = detail::parse_matrix_at(lines, pos);
    for (; pos < lines.size(); ++pos)
        if (!detail::is_blank(lines[pos]))
            throw FormatError("line " + std::to_string(pos + 1) +
                              ": unexpected content after matrix");
    return s;
}

}  // namespace frcodes
