// SPDX-License-Identifier: Apache-2.0

#include "frcodes/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "frcodes/errors.hpp"
#include "text_detail.hpp"

namespace frcodes {

FrCode from_regular_graph(const GraphSpec& g) {
    if (g.num_vertices == 0) throw ArgumentError("graph has no vertices");
    if (g.edges.empty()) throw ArgumentError("graph has no edges");
    std::vector<std::size_t> degree(g.num_vertices, 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto [a, b] = g.edges[i];
        if (a >= g.num_vertices || b >= g.num_vertices)
            throw ArgumentError("edge " + std::to_string(i) + " has an endpoint outside [0," +
                                std::to_string(g.num_vertices) + ")");
        if (a == b)
            throw ArgumentError("edge " + std::to_string(i) + " is a self-loop at vertex " +
                                std::to_string(a) +
                                "; a block cannot be incident with one point twice");
        ++degree[a];
        ++degree[b];
    }
    for (std::size_t vtx = 0; vtx < g.num_vertices; ++vtx)
        if (degree[vtx] != degree[0])
            throw ArgumentError("graph is not regular: vertex " + std::to_string(vtx) +
                                " has degree " + std::to_string(degree[vtx]) + ", vertex 0 has " +
                                std::to_string(degree[0]));

    std::vector<PointSet> rows;
    rows.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        PointSet r(g.num_vertices);
        r.set(a);
        r.set(b);
        rows.push_back(std::move(r));
    }
    return FrCode(IncidenceStructure(g.num_vertices, std::move(rows)));
}

FrCode complete_graph_code(int t) {
    if (t < 3) throw ArgumentError("complete graph construction needs t >= 3");
    const std::size_t tv = static_cast<std::size_t>(t);
    // Edge (a,b), a < b, gets its rank in lexicographic endpoint order.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
    std::size_t next = 0;
    for (std::size_t a = 0; a < tv; ++a)
        for (std::size_t b = a + 1; b < tv; ++b) edge_index[{a, b}] = next++;

    std::vector<PointSet> rows;
    rows.reserve(tv);
    for (std::size_t vtx = 0; vtx < tv; ++vtx) {
        PointSet r(next);
        for (std::size_t other = 0; other < tv; ++other) {
            if (other == vtx) continue;
            r.set(edge_index[{std::min(vtx, other), std::max(vtx, other)}]);
        }
        rows.push_back(std::move(r));
    }
    return FrCode(IncidenceStructure(next, std::move(rows)));
}

namespace {

constexpr std::string_view kLabelPrefix = "# label:";

std::string trim(std::string_view s) {
    const std::size_t first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const std::size_t last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

DatabaseLoad parse_database(std::string_view text, bool lenient) {
    const auto lines = detail::split_lines(text);
    DatabaseLoad out;
    std::size_t pos = 0;
    std::size_t record_index = 0;
    while (pos < lines.size()) {
        if (detail::is_blank(lines[pos])) {
            ++pos;
            continue;
        }
        std::string label;
        while (pos < lines.size() && lines[pos].starts_with('#')) {
            if (lines[pos].starts_with(kLabelPrefix))
                label = trim(lines[pos].substr(kLabelPrefix.size()));
            ++pos;
        }
        while (pos < lines.size() && detail::is_blank(lines[pos])) ++pos;
        if (pos >= lines.size()) break;  // trailing comments without a matrix
        if (lines[pos].starts_with('#')) continue;  // more comments after a gap

        const std::size_t header_line = pos + 1;
        try {
            IncidenceStructure s = detail::parse_matrix_at(lines, pos);
            if (pos < lines.size() && !detail::is_blank(lines[pos]) &&
                !lines[pos].starts_with('#'))
                throw FormatError("line " + std::to_string(pos + 1) +
                                  ": records must be separated by a blank line");
            FrValidation val = validate_fr(s);
            out.records.push_back(
                DatabaseRecord{std::move(label), std::move(s), std::move(val), header_line});
        } catch (const FormatError& e) {
            const std::string message =
                "record " + std::to_string(record_index) + ": " + e.what();
            if (!lenient) throw FormatError(message);
            out.errors.push_back(message);
            // Skip ahead to the blank line that ends this record.
            while (pos < lines.size() && !detail::is_blank(lines[pos])) ++pos;
        }
        ++record_index;
    }
    return out;
}

DatabaseLoad load_database(const std::filesystem::path& path, bool lenient) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path.string());
    try {
        return parse_database(buf.str(), lenient);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string serialize_database(const std::vector<DatabaseRecord>& records) {
    std::string out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i > 0) out += '\n';
        if (!records[i].label.empty()) {
            out += "# label: ";
            out += records[i].label;
            out += '\n';
        }
        out += serialize(records[i].structure);
    }
    return out;
}

namespace {

// The (5,4,10,2) code on the line graph of K_5; points are the edges of
// K_5 in lexicographic endpoint order.
constexpr std::string_view kExample2 =
    "5 10\n"
    "1111000000\n"
    "1000111000\n"
    "0100100110\n"
    "0010010101\n"
    "0001001011\n";

constexpr std::string_view kExample2Dual =
    "10 5\n"
    "11000\n"
    "10100\n"
    "10010\n"
    "10001\n"
    "01100\n"
    "01010\n"
    "01001\n"
    "00110\n"
    "00101\n"
    "00011\n";

// A (15,2,10,3) code whose M_6 = 6 meets the dual bound. Kept as a
// literal matrix so regressions compare against these exact rows.
constexpr std::string_view kExample3 =
    "15 10\n"
    "1100000000\n"
    "1010000000\n"
    "1001000000\n"
    "0100100000\n"
    "0100010000\n"
    "0010001000\n"
    "0010000100\n"
    "0001000010\n"
    "0001000001\n"
    "0000110000\n"
    "0000101000\n"
    "0000010100\n"
    "0000001010\n"
    "0000000101\n"
    "0000000011\n";

const std::vector<std::pair<std::string, IncidenceStructure>>& fixture_table() {
    static const std::vector<std::pair<std::string, IncidenceStructure>> table = {
        {"example2", parse_structure(kExample2)},
        {"example2-dual", parse_structure(kExample2Dual)},
        {"example3-petersen", parse_structure(kExample3)},
    };
    return table;
}

}  // namespace

const IncidenceStructure& fixture(std::string_view name) {
    for (const auto& [key, value] : fixture_table())
        if (key == name) return value;
    throw ArgumentError("unknown fixture \"" + std::string(name) + "\"");
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [key, value] : fixture_table()) names.push_back(key);
    return names;
}

bool is_fixture_name(std::string_view name) {
    for (const auto& [key, value] : fixture_table())
        if (key == name) return true;
    return false;
}

DatabaseLoad load_input(const std::string& input, bool lenient) {
    const bool forced_path = input.starts_with("./") || input.starts_with("/");
    if (!forced_path && is_fixture_name(input)) {
        const IncidenceStructure& s = fixture(input);
        DatabaseLoad out;
        out.records.push_back(DatabaseRecord{input, s, validate_fr(s), 1});
        return out;
    }
    return load_database(input, lenient);
}

}  // namespace frcodes
