#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "trilie/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace trilie::cli;

    CLI::App app{"Invariants of 3-Lie algebras given by structure constants"};
    app.require_subcommand(1);

    Options opt;
    std::string format = "text";
    std::optional<std::string> input;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("input", input, "algebra file or catalog:NAME");
        if (needs_input) {
            in->required();
        }
        sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--max-exhaustive", opt.max_exhaustive, "cap on exhaustive 5-tuple scans");
        sub->add_option("--seed", opt.seed, "seed for sampled maps and tuples");
    };

    auto* check = app.add_subcommand("check", "validate the fundamental identity");
    add_common(check, true);

    auto* spaces = app.add_subcommand("spaces", "dimensions and bases of map spaces");
    add_common(spaces, true);
    spaces->add_option("--which", opt.which, "subset of der, ad, zder, centroid, qcentroid, qder, gder")
        ->delimiter(',');

    auto* extend = app.add_subcommand("extend", "tensor extension and the embedding of QDer");
    add_common(extend, true);

    auto* kernel = app.add_subcommand("kernel", "kernel criterion and coboundary checks");
    add_common(kernel, true);
    kernel->add_option("--map", opt.map, "a map as a JSON array of rows; column j is the image of e_j");
    kernel->add_option("--random-maps", opt.random_maps, "number of seeded random probe maps");

    auto* weights = app.add_subcommand("weights", "root and weight decompositions for a torus");
    add_common(weights, true);
    weights->add_option("--torus", opt.torus, "torus generators as a JSON array of vectors");

    auto* verify = app.add_subcommand("verify", "run every applicable check");
    add_common(verify, true);
    verify->add_option("--torus", opt.torus, "torus generators as a JSON array of vectors");
    verify->add_option("--random-maps", opt.random_maps, "number of seeded random probe maps");

    auto* catalog = app.add_subcommand("catalog", "list or print built-in algebras");
    add_common(catalog, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParse;
    }
    opt.structured = format == "structured";

    std::string command = app.get_subcommands().front()->get_name();
    std::optional<std::string> arg = input;
    if (command == "catalog" && arg && arg->rfind("catalog:", 0) == 0) {
        arg = arg->substr(8);
    }
    return dispatch(command, arg, opt, std::cout, std::cerr);
}
