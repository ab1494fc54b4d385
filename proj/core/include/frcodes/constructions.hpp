// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frcodes/incidence.hpp"

namespace frcodes {

/// An undirected multigraph given as an edge list. Multi-edges are
/// permitted; self-loops are not representable as incidence rows.
struct GraphSpec {
    std::size_t num_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Edge-vertex incidence of a rho-regular graph: block i is edge i,
/// incident with its two endpoints. Yields the (|edges|, 2, |vertices|,
/// rho)-FR code; multi-edges become repeated blocks. Throws ArgumentError
/// for self-loops or non-regular graphs (naming an offending vertex).
FrCode from_regular_graph(const GraphSpec& g);

/// Vertex-edge incidence of the complete graph K_t: points are the
/// t(t-1)/2 edges in lexicographic endpoint order, block i holds the t-1
/// edges touching vertex i. Yields the (t, t-1, t(t-1)/2, 2)-FR code.
/// Requires t >= 3.
FrCode complete_graph_code(int t);

/// One record of a code database file.
struct DatabaseRecord {
    std::string label;
    IncidenceStructure structure;
    FrValidation validation;
    std::size_t first_line = 0;  // 1-based line of the record's header
};

struct DatabaseLoad {
    std::vector<DatabaseRecord> records;
    // Per-record parse failures, only populated in lenient mode.
    std::vector<std::string> errors;
};

/// Parses a database: matrices in the standard text format, separated by
/// blank lines, each optionally preceded by comment lines of which a
/// "# label: NAME" line names the record. Strict mode throws FormatError
/// at the first malformed record; lenient mode skips it and keeps going.
DatabaseLoad parse_database(std::string_view text, bool lenient = false);

DatabaseLoad load_database(const std::filesystem::path& path, bool lenient = false);

/// Canonical text form: "# label:" comment, matrix, one blank line
/// between records.
std::string serialize_database(const std::vector<DatabaseRecord>& records);

/// Built-in codes addressable by name: "example2" (the (5,4,10,2) code on
/// the line graph of K_5), "example2-dual" (its (10,2,5,4) transpose) and
/// "example3-petersen" (a (15,2,10,3) code whose supported file size meets
/// the dual bound at k = 6).
const IncidenceStructure& fixture(std::string_view name);

std::vector<std::string> fixture_names();

bool is_fixture_name(std::string_view name);

/// Resolves `input` to records: a built-in fixture name unless prefixed
/// with "./" or "/" (or no fixture matches), otherwise a database file.
DatabaseLoad load_input(const std::string& input, bool lenient = false);

}  // namespace frcodes
