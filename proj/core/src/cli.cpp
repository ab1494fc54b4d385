// SPDX-License-Identifier: Apache-2.0

#include "frcodes/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frcodes/bounds.hpp"
#include "frcodes/constructions.hpp"
#include "frcodes/errors.hpp"
#include "frcodes/hierarchy.hpp"
#include "frcodes/scenario.hpp"

namespace frcodes::cli {

namespace {

using json = nlohmann::ordered_json;

long long parse_ll(const std::string& tok, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ArgumentError(what + " expects an integer, got \"" + tok + "\"");
    return value;
}

SearchOptions search_options(const CommandRequest& req) {
    SearchOptions opt;
    if (req.budget) {
        opt.budget = *req.budget;
    } else if (const char* env = std::getenv("FRCODE_BUDGET")) {
        const long long value = parse_ll(env, "FRCODE_BUDGET");
        if (value < 1) throw ArgumentError("FRCODE_BUDGET must be positive");
        opt.budget = static_cast<std::uint64_t>(value);
    }
    return opt;
}

std::pair<int, int> resolve_k_range(const CommandRequest& req, int n) {
    if (!req.k_range) return {1, n};
    const auto [lo, hi] = *req.k_range;
    if (lo < 1 || hi > n)
        throw ArgumentError("k range " + std::to_string(lo) + ".." + std::to_string(hi) +
                            " outside [1," + std::to_string(n) + "]");
    return *req.k_range;
}

std::vector<DatabaseRecord> load_records(const CommandRequest& req, std::ostream& err) {
    DatabaseLoad load = load_input(req.input, req.lenient);
    for (const std::string& message : load.errors) err << "warning: " << message << "\n";
    if (load.records.empty()) throw FormatError(req.input + " contains no code records");
    return std::move(load.records);
}

std::string params_line(const FrValidation& val) {
    if (val.ok()) {
        const FrParams& p = *val.params;
        std::ostringstream os;
        os << "n=" << p.n << " alpha=" << p.alpha << " v=" << p.v << " rho=" << p.rho;
        return os.str();
    }
    return "heterogeneous (" + val.issue->describe() + ")";
}

json params_json(const FrValidation& val) {
    if (!val.ok()) return nullptr;
    const FrParams& p = *val.params;
    return json{{"n", p.n}, {"alpha", p.alpha}, {"v", p.v}, {"rho", p.rho}};
}

void write_pareto_comment(std::ostream& out, const std::vector<ParetoPoint>& points) {
    out << "# pareto:";
    for (const ParetoPoint& pt : points) {
        out << " (" << pt.k0 << "," << pt.l0 << ")";
        if (pt.boundary) out << "[boundary]";
    }
    out << "\n";
}

json pareto_json(const std::vector<ParetoPoint>& points) {
    json arr = json::array();
    for (const ParetoPoint& pt : points)
        arr.push_back(json{{"k0", pt.k0}, {"l0", pt.l0}, {"boundary", pt.boundary}});
    return arr;
}

void write_hierarchy_table(std::ostream& out, const FileSizeHierarchy& h,
                           std::pair<int, int> range) {
    out << "k M_k N_k\n";
    for (int k = range.first; k <= range.second; ++k)
        out << k << " " << h.m[k] << " " << h.n_vals[k] << "\n";
}

json hierarchy_record_json(const DatabaseRecord& record, const FileSizeHierarchy& h,
                           const std::vector<ParetoPoint>& points) {
    json j;
    j["label"] = record.label;
    j["n"] = record.structure.num_blocks();
    j["v"] = record.structure.num_points();
    j["regular"] = record.validation.ok();
    j["params"] = params_json(record.validation);
    if (!record.validation.ok()) j["issue"] = record.validation.issue->describe();
    j["m"] = h.m;
    j["n_vals"] = h.n_vals;
    j["pareto"] = pareto_json(points);
    return j;
}

int cmd_hierarchy(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    const SearchOptions opt = search_options(req);
    const auto records = load_records(req, err);
    json doc = json::array();
    for (const DatabaseRecord& record : records) {
        const IncidenceStructure& s = record.structure;
        const auto range = resolve_k_range(req, static_cast<int>(s.num_blocks()));
        const FileSizeHierarchy h = full_hierarchy(s, opt);
        const auto points = pareto_points(s, opt);
        if (req.format == "structured") {
            doc.push_back(hierarchy_record_json(record, h, points));
        } else {
            if (!record.label.empty()) out << "# label: " << record.label << "\n";
            out << "# params: " << params_line(record.validation) << "\n";
            write_hierarchy_table(out, h, range);
            write_pareto_comment(out, points);
        }
    }
    if (req.format == "structured") out << doc.dump(2) << "\n";
    return 0;
}

int cmd_verify_duality(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    const SearchOptions opt = search_options(req);
    const auto records = load_records(req, err);
    bool all_pass = true;
    for (const DatabaseRecord& record : records) {
        if (!record.label.empty()) out << "# label: " << record.label << "\n";
        const FileSizeHierarchy direct = full_hierarchy(record.structure, opt);
        const FileSizeHierarchy via_dual = hierarchy_via_dual(record.structure, opt);
        const int n = static_cast<int>(record.structure.num_blocks());
        int agree = 0;
        for (int k = 1; k <= n; ++k) {
            const bool ok = direct.m[k] == via_dual.m[k];
            agree += ok ? 1 : 0;
            all_pass = all_pass && ok;
            out << "k=" << k << " direct=" << direct.m[k] << " via_dual=" << via_dual.m[k]
                << " " << (ok ? "PASS" : "FAIL") << "\n";
        }
        out << "verify-duality: " << (agree == n ? "PASS" : "FAIL") << " (" << agree << "/"
            << n << " values agree)\n";
    }
    return all_pass ? 0 : 1;
}

std::optional<std::vector<int>> exact_column(const CommandRequest& req,
                                             const IncidenceStructure& s,
                                             const SearchOptions& opt, std::ostream& err) {
    if (req.exact == ExactMode::Off) return std::nullopt;
    try {
        const FileSizeHierarchy h = full_hierarchy(s, opt);
        return std::vector<int>(h.m.begin() + 1, h.m.end());
    } catch (const ResourceError&) {
        if (req.exact == ExactMode::On) throw;
        err << "note: exact hierarchy dropped (budget exceeded); rerun with a larger "
               "--budget or --exact to insist\n";
        return std::nullopt;
    }
}

void write_bounds_table(std::ostream& out, const BoundReport& r, std::pair<int, int> range) {
    out << "# params: n=" << r.params.n << " alpha=" << r.params.alpha << " v=" << r.params.v
        << " rho=" << r.params.rho << "\n";
    out << "# g_prime:";
    for (long long value : r.gp) out << " " << value;
    out << "\n";
    out << "k binom g(k) dual" << (r.exact_m ? " exact" : "") << "\n";
    for (int k = range.first; k <= range.second; ++k) {
        out << k << " " << r.binom[k - 1] << " " << r.g_clamped[k - 1] << " " << r.dual[k - 1];
        if (r.exact_m) out << " " << (*r.exact_m)[k - 1];
        out << "\n";
    }
    out << "# min_k_for_size:";
    for (std::size_t i = 0; i < r.min_k_for_size.size(); ++i)
        out << " " << (i + 1) << ":" << r.min_k_for_size[i];
    out << "\n";
    out << "# g_monotone: " << (r.g_monotone ? "yes" : "no") << "\n";
    out << "# dual_monotone: " << (r.dual_monotone ? "yes" : "no") << "\n";
}

json bounds_json(const BoundReport& r, const std::string& label) {
    json j;
    j["label"] = label;
    j["params"] = json{{"n", r.params.n},
                       {"alpha", r.params.alpha},
                       {"v", r.params.v},
                       {"rho", r.params.rho}};
    j["binom"] = r.binom;
    j["g"] = r.g;
    j["g_clamped"] = r.g_clamped;
    j["dual"] = r.dual;
    j["g_prime"] = r.gp;
    j["g_prime_clamped"] = r.gp_clamped;
    j["min_k_for_size"] = r.min_k_for_size;
    if (r.exact_m) j["exact_m"] = *r.exact_m;
    j["g_monotone"] = r.g_monotone;
    j["dual_monotone"] = r.dual_monotone;
    return j;
}

int cmd_bounds(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    const SearchOptions opt = search_options(req);
    json doc = json::array();

    if (req.params) {
        if (req.exact == ExactMode::On)
            throw ArgumentError("--exact needs a code input, not bare --params");
        const BoundReport r = bound_report(*req.params);
        const auto range = resolve_k_range(req, r.params.n);
        if (req.format == "structured") {
            doc.push_back(bounds_json(r, ""));
            out << doc.dump(2) << "\n";
        } else {
            write_bounds_table(out, r, range);
        }
        return 0;
    }

    const auto records = load_records(req, err);
    for (const DatabaseRecord& record : records) {
        if (!record.validation.ok())
            throw ArgumentError("bounds need a regular FR code: " +
                                record.validation.issue->describe());
        const FrParams p = *record.validation.params;
        const auto exact = exact_column(req, record.structure, opt, err);
        const BoundReport r = bound_report(p, exact);
        const auto range = resolve_k_range(req, p.n);
        if (req.format == "structured") {
            doc.push_back(bounds_json(r, record.label));
        } else {
            if (!record.label.empty()) out << "# label: " << record.label << "\n";
            write_bounds_table(out, r, range);
        }
    }
    if (req.format == "structured") out << doc.dump(2) << "\n";
    return 0;
}

int cmd_analyze(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    const SearchOptions opt = search_options(req);
    const auto records = load_records(req, err);
    json doc = json::array();
    for (const DatabaseRecord& record : records) {
        const IncidenceStructure& s = record.structure;
        const auto range = resolve_k_range(req, static_cast<int>(s.num_blocks()));
        const FileSizeHierarchy h = full_hierarchy(s, opt);
        const auto points = pareto_points(s, opt);
        const bool regular = record.validation.ok();
        std::optional<BoundReport> bounds;
        if (regular) {
            std::vector<int> exact(h.m.begin() + 1, h.m.end());
            bounds = bound_report(*record.validation.params, exact);
        }
        if (req.format == "structured") {
            json j = hierarchy_record_json(record, h, points);
            j["simple"] = is_simple(s);
            if (bounds) j["bounds"] = bounds_json(*bounds, record.label);
            doc.push_back(std::move(j));
        } else {
            if (!record.label.empty()) out << "# label: " << record.label << "\n";
            out << "params: " << params_line(record.validation) << "\n";
            out << "simple: " << (is_simple(s) ? "yes" : "no") << "\n";
            write_hierarchy_table(out, h, range);
            write_pareto_comment(out, points);
            if (bounds)
                write_bounds_table(out, *bounds, range);
            else
                out << "# bounds skipped: needs a regular FR code\n";
        }
    }
    if (req.format == "structured") out << doc.dump(2) << "\n";
    return 0;
}

json matrix_json(const std::string& label, const IncidenceStructure& s) {
    json j;
    j["label"] = label;
    j["n"] = s.num_blocks();
    j["v"] = s.num_points();
    json rows = json::array();
    for (std::size_t i = 0; i < s.num_blocks(); ++i) {
        std::string row;
        for (std::size_t jcol = 0; jcol < s.num_points(); ++jcol)
            row += s.entry(i, jcol) ? '1' : '0';
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

int cmd_dual(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    const auto records = load_records(req, err);
    std::vector<DatabaseRecord> duals;
    for (const DatabaseRecord& record : records) {
        IncidenceStructure d = dual(record.structure);
        FrValidation val = validate_fr(d);
        duals.push_back(DatabaseRecord{record.label, std::move(d), std::move(val),
                                       record.first_line});
    }
    if (req.format == "structured") {
        json doc = json::array();
        for (const DatabaseRecord& record : duals)
            doc.push_back(matrix_json(record.label, record.structure));
        out << doc.dump(2) << "\n";
    } else {
        out << serialize_database(duals);
    }
    return 0;
}

GraphSpec parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    GraphSpec g;
    std::string line;
    std::size_t line_no = 0;
    long long expected_edges = -1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first.starts_with('#')) continue;
        if (expected_edges < 0) {
            long long nv = parse_ll(first, "vertex count");
            long long ne = 0;
            std::string second;
            if (!(ls >> second)) throw FormatError(path + ": line " + std::to_string(line_no) +
                                                   ": expected \"<vertices> <edges>\"");
            ne = parse_ll(second, "edge count");
            if (nv < 1 || ne < 0)
                throw FormatError(path + ": line " + std::to_string(line_no) +
                                  ": invalid graph header");
            g.num_vertices = static_cast<std::size_t>(nv);
            expected_edges = ne;
            continue;
        }
        std::string second;
        if (!(ls >> second))
            throw FormatError(path + ": line " + std::to_string(line_no) +
                              ": expected \"<u> <v>\"");
        g.edges.emplace_back(static_cast<std::size_t>(parse_ll(first, "endpoint")),
                             static_cast<std::size_t>(parse_ll(second, "endpoint")));
    }
    if (expected_edges < 0) throw FormatError(path + ": missing graph header");
    if (static_cast<long long>(g.edges.size()) != expected_edges)
        throw FormatError(path + ": header promises " + std::to_string(expected_edges) +
                          " edges, found " + std::to_string(g.edges.size()));
    return g;
}

int cmd_construct(const CommandRequest& req, std::ostream& out, std::ostream&) {
    const std::string& family = req.input;
    std::string label;
    std::optional<IncidenceStructure> s;
    if (family == "complete-graph") {
        if (req.args.size() != 1)
            throw ArgumentError("usage: construct complete-graph <t>");
        const long long t = parse_ll(req.args[0], "t");
        s = complete_graph_code(static_cast<int>(t)).structure();
        label = "complete-graph-" + req.args[0];
    } else if (family == "regular-graph") {
        if (req.args.size() != 1)
            throw ArgumentError("usage: construct regular-graph <edge-list-file>");
        s = from_regular_graph(parse_graph_file(req.args[0])).structure();
        label = "regular-graph";
    } else if (family == "fixture") {
        if (req.args.size() != 1) throw ArgumentError("usage: construct fixture <name>");
        s = fixture(req.args[0]);
        label = req.args[0];
    } else {
        throw ArgumentError("unknown family \"" + family +
                            "\" (families: complete-graph, regular-graph, fixture)");
    }
    if (req.format == "structured") {
        json doc = json::array();
        doc.push_back(matrix_json(label, *s));
        out << doc.dump(2) << "\n";
    } else {
        out << "# label: " << label << "\n" << serialize(*s);
    }
    return 0;
}

int cmd_simulate(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    if (req.input == "-") return run_scenario(std::cin, out, err);
    std::ifstream in(req.input);
    if (!in) throw IoError("cannot open " + req.input);
    return run_scenario(in, out, err);
}

}  // namespace

std::pair<int, int> parse_k_range(const std::string& spec) {
    const std::size_t dots = spec.find("..");
    if (dots == std::string::npos) {
        const int k = static_cast<int>(parse_ll(spec, "--k"));
        return {k, k};
    }
    const int lo = static_cast<int>(parse_ll(spec.substr(0, dots), "--k"));
    const int hi = static_cast<int>(parse_ll(spec.substr(dots + 2), "--k"));
    if (lo > hi) throw ArgumentError("--k range has lo > hi");
    return {lo, hi};
}

FrParams parse_params(const std::string& spec) {
    std::vector<long long> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        const std::string part =
            spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        parts.push_back(parse_ll(part, "--params"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 4) throw ArgumentError("--params expects n,alpha,v,rho");
    return FrParams{static_cast<int>(parts[0]), static_cast<int>(parts[1]),
                    static_cast<int>(parts[2]), static_cast<int>(parts[3])};
}

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    try {
        if (req.format != "table" && req.format != "structured")
            throw ArgumentError("--format must be table or structured");
        if (req.subcommand == "analyze") return cmd_analyze(req, out, err);
        if (req.subcommand == "dual") return cmd_dual(req, out, err);
        if (req.subcommand == "hierarchy") return cmd_hierarchy(req, out, err);
        if (req.subcommand == "bounds") return cmd_bounds(req, out, err);
        if (req.subcommand == "verify-duality") return cmd_verify_duality(req, out, err);
        if (req.subcommand == "construct") return cmd_construct(req, out, err);
        if (req.subcommand == "simulate") return cmd_simulate(req, out, err);
        throw ArgumentError("unknown subcommand \"" + req.subcommand + "\"");
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace frcodes::cli
