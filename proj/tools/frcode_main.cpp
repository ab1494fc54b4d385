// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "frcodes/cli.hpp"
#include "frcodes/errors.hpp"

namespace {

struct CommonFlags {
    std::string k_spec;
    std::string format = "table";
    bool lenient = false;
    std::optional<std::uint64_t> budget;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--k", flags.k_spec, "Reconstruction degree or range, e.g. 6 or 2..4");
    sub->add_option("--format", flags.format, "Output format: table or structured")
        ->check(CLI::IsMember({"table", "structured"}));
    sub->add_flag("--lenient", flags.lenient, "Skip malformed database records");
    sub->add_option("--budget", flags.budget,
                    "Visited-subset budget for exact searches (default 10^8, or "
                    "FRCODE_BUDGET)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional repetition codes: exact file-size hierarchies, duality, "
                 "bounds, and a repair-by-transfer storage simulator"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string input;
    std::string params_spec;
    std::vector<std::string> construct_args;

    auto* analyze = app.add_subcommand("analyze", "Parameters, hierarchy, and bounds");
    analyze->add_option("input", input, "Fixture name or file path")->required();
    add_common(analyze, flags);

    auto* dual_cmd = app.add_subcommand("dual", "Serialize the transpose code");
    dual_cmd->add_option("input", input, "Fixture name or file path")->required();
    add_common(dual_cmd, flags);

    auto* hierarchy = app.add_subcommand("hierarchy", "Exact M_k/N_k table and Pareto points");
    hierarchy->add_option("input", input, "Fixture name or file path")->required();
    add_common(hierarchy, flags);

    auto* bounds = app.add_subcommand("bounds", "Upper bounds on the supported file size");
    bounds->add_option("input", input, "Fixture name or file path");
    bounds->add_option("--params", params_spec, "Bare parameters n,alpha,v,rho");
    auto* exact_on = bounds->add_flag("--exact", "Insist on the exact M_k column");
    auto* exact_off = bounds->add_flag("--no-exact", "Skip the exact M_k column");
    add_common(bounds, flags);

    auto* verify = app.add_subcommand("verify-duality",
                                      "Check that the hierarchy computed through the dual "
                                      "matches the direct computation");
    verify->add_option("input", input, "Fixture name or file path")->required();
    add_common(verify, flags);

    auto* construct = app.add_subcommand("construct", "Emit a named code family instance");
    construct->add_option("family", input, "complete-graph | regular-graph | fixture")
        ->required();
    construct->add_option("args", construct_args, "Family arguments");
    add_common(construct, flags);

    auto* simulate = app.add_subcommand("simulate", "Run a storage scenario script");
    simulate->add_option("script", input, "Script path, or - for stdin")->required();
    add_common(simulate, flags);

    CLI11_PARSE(app, argc, argv);

    frcodes::cli::CommandRequest req;
    for (const auto* sub :
         {analyze, dual_cmd, hierarchy, bounds, verify, construct, simulate})
        if (sub->parsed()) req.subcommand = sub->get_name();
    req.input = input;
    req.args = construct_args;
    req.format = flags.format;
    req.lenient = flags.lenient;
    req.budget = flags.budget;
    if (exact_on->count() > 0) req.exact = frcodes::cli::ExactMode::On;
    if (exact_off->count() > 0) req.exact = frcodes::cli::ExactMode::Off;
    try {
        if (!flags.k_spec.empty()) req.k_range = frcodes::cli::parse_k_range(flags.k_spec);
        if (!params_spec.empty()) req.params = frcodes::cli::parse_params(params_spec);
        if (req.subcommand == "bounds" && input.empty() && params_spec.empty())
            throw frcodes::ArgumentError("bounds needs an input or --params");
    } catch (const frcodes::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return frcodes::cli::run(req, std::cout, std::cerr);
}
