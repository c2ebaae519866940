// Command-line front-end: enumerate graph classes, run reconstruction
// protocols on the clique simulator, and run the verification suites.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cliquerec/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"congested-clique graph reconstruction testbed"};
    app.require_subcommand(1);

    std::string class_name;
    int n = 0;

    CLI::App* enumerate = app.add_subcommand("enumerate", "list class members of size n");
    enumerate->add_option("--class", class_name, "graph class name")->required();
    enumerate->add_option("--n", n, "graph size")->required();

    cliquerec::RunConfig config;
    std::string out_path;
    CLI::App* run = app.add_subcommand("run", "execute a protocol and print a summary");
    run->add_option("--class", config.class_name, "graph class name")->required();
    run->add_option("--n", config.n, "graph size")->required();
    run->add_option("--protocol", config.protocol_id,
                    "hereditary-1r | weak-2r | strong-3r | strong-2r-rand | general-1r-weak | "
                    "general-1r-strong")
        ->required();
    run->add_option("--graph", config.graph_spec,
                    "file:PATH | member:IDX | all-members | all-graphs");
    run->add_option("--seed", config.seed, "master seed of the first trial");
    run->add_option("--trials", config.trials, "trials per graph (seeds increment)");
    run->add_option("--out", out_path, "write the summary to a file instead of stdout");
    run->add_option("--format", config.format, "csv | json");
    run->add_option("--bandwidth-cap", config.bandwidth_cap, "per-link bit cap to enforce");
    run->add_option("--transcript", config.transcript_path,
                    "write the transcript JSON (single graph, single trial)");

    std::string suite = "all";
    std::vector<std::string> class_filter;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "lemma1 | distance | protocols | hereditary | all");
    verify->add_option("--class", class_filter, "restrict suites to these classes");

    CLI11_PARSE(app, argc, argv);

    if (enumerate->parsed()) {
        return cliquerec::cmd_enumerate(std::cout, std::cerr, class_name, n);
    }
    if (run->parsed()) {
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) {
                std::cerr << "error: cannot open output file '" << out_path << "'\n";
                return 2;
            }
            return cliquerec::cmd_run(f, std::cerr, config);
        }
        return cliquerec::cmd_run(std::cout, std::cerr, config);
    }
    return cliquerec::cmd_verify(std::cout, std::cerr, suite, class_filter);
}
