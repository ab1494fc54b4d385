// SPDX-License-Identifier: Apache-2.0

#include "frcodes/scenario.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "frcodes/constructions.hpp"
#include "frcodes/errors.hpp"
#include "frcodes/storage.hpp"

namespace frcodes {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError(what + " expects an integer, got \"" + tok + "\"");
    return value;
}

std::vector<int> parse_node_list(const std::string& tok) {
    std::vector<int> nodes;
    std::size_t start = 0;
    while (start <= tok.size()) {
        const std::size_t comma = tok.find(',', start);
        const std::string part =
            tok.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        nodes.push_back(parse_int(part, "node list"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return nodes;
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failure on " + path);
    return bytes;
}

struct ScenarioState {
    std::optional<StorageSystem> system;
    std::vector<std::uint8_t> payload;

    StorageSystem& require_system() {
        if (!system) throw ArgumentError("no system placed yet");
        return *system;
    }
};

void cmd_place(ScenarioState& state, const std::vector<std::string>& tokens,
               std::ostream& out) {
    if (tokens.size() != 4 || !tokens[2].starts_with("M=") || !tokens[3].starts_with("file="))
        throw FormatError("usage: place <fixture|file> M=<int> file=<path>");
    const std::string& input = tokens[1];
    const int mds_dim = parse_int(tokens[2].substr(2), "M");
    const std::string path = tokens[3].substr(5);

    DatabaseLoad load = load_input(input);
    if (load.records.empty()) throw FormatError(input + " contains no code records");
    const DatabaseRecord& record = load.records.front();
    if (!record.validation.ok())
        throw ArgumentError(input + " is not a regular FR code: " +
                            record.validation.issue->describe());
    FrCode code(record.structure);

    state.payload = read_file_bytes(path);
    state.system = StorageSystem::encode_and_place(code, state.payload, mds_dim);
    const FrParams p = code.params();
    out << "placed " << input << ": n=" << p.n << " alpha=" << p.alpha << " v=" << p.v
        << " rho=" << p.rho << " M=" << mds_dim
        << " packet_bytes=" << state.system->packet_length() << "\n";
}

void cmd_fail(ScenarioState& state, const std::vector<std::string>& tokens,
              std::ostream& out) {
    if (tokens.size() != 2) throw FormatError("usage: fail <i>");
    const int node = parse_int(tokens[1], "fail");
    state.require_system().fail_node(node);
    out << "failed node " << node << "\n";
}

void cmd_repair(ScenarioState& state, const std::vector<std::string>& tokens,
                std::ostream& out) {
    if (tokens.size() != 2) throw FormatError("usage: repair <i>");
    const int node = parse_int(tokens[1], "repair");
    const auto log = state.require_system().repair_node(node);
    for (const TransferRecord& rec : log)
        out << "packet " << rec.packet << ": node " << rec.helper << " -> node " << rec.target
            << " (" << rec.bytes << " B)\n";
    out << "repaired node " << node << ": " << log.size() << " packets transferred\n";
}

void cmd_reconstruct(ScenarioState& state, const std::vector<std::string>& tokens,
                     std::ostream& out) {
    if (tokens.size() != 2) throw FormatError("usage: reconstruct <i,j,...>");
    const std::vector<int> nodes = parse_node_list(tokens[1]);
    StorageSystem& sys = state.require_system();
    const ReconstructOutcome outcome = sys.reconstruct_from(nodes);
    if (!outcome.data) {
        out << "reconstruction insufficient: " << outcome.distinct_packets
            << " distinct packets, need M=" << sys.mds_dimension() << "\n";
        return;
    }
    const bool match = *outcome.data == state.payload;
    out << "reconstructed " << outcome.data->size() << " B from " << nodes.size()
        << " nodes (" << outcome.distinct_packets << " distinct packets); matches placed payload: "
        << (match ? "yes" : "no") << "\n";
}

}  // namespace

int run_scenario(std::istream& script, std::ostream& out, std::ostream& err) {
    ScenarioState state;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(script, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0].starts_with('#')) continue;
        try {
            if (tokens[0] == "place")
                cmd_place(state, tokens, out);
            else if (tokens[0] == "fail")
                cmd_fail(state, tokens, out);
            else if (tokens[0] == "repair")
                cmd_repair(state, tokens, out);
            else if (tokens[0] == "reconstruct")
                cmd_reconstruct(state, tokens, out);
            else
                throw FormatError("unknown command \"" + tokens[0] + "\"");
        } catch (const ResourceError& e) {
            err << "line " << line_no << ": " << e.what() << "\n";
            return 2;
        } catch (const FormatError& e) {
            err << "line " << line_no << ": " << e.what() << "\n";
            return 3;
        } catch (const IoError& e) {
            err << "line " << line_no << ": " << e.what() << "\n";
            return 3;
        } catch (const Error& e) {
            err << "line " << line_no << ": " << e.what() << "\n";
            return 1;
        }
    }
    return 0;
}

}  // namespace frcodes
