#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "moddom/harness.hpp"

namespace {

int run_mode(moddom::RunConfig config) {
    try {
        const moddom::Report report = moddom::run(config);
        if (config.output.empty()) {
            std::cout << report.text;
        } else {
            std::ofstream out(config.output, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write '" << config.output << "'\n";
                return 2;
            }
            out << report.text;
        }
        return moddom::report_exit_code(report);
    } catch (const moddom::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}

void add_common(CLI::App* cmd, moddom::RunConfig& config) {
    cmd->add_option("--inputs", config.inputs,
                    "family specs (e.g. petersen, path:10, kminusm:3, complement:path:8) "
                    "or graph6 files, one graph per line");
    cmd->add_option("--max-n", config.max_n, "enumeration cap");
    cmd->add_option("--threads", config.threads, "worker count");
    cmd->add_option("--seed", config.seed, "seed for sampled checks");
    cmd->add_option("--output", config.output, "report path (default: stdout)");
    std::map<std::string, moddom::RunConfig::Format> formats{
        {"jsonl", moddom::RunConfig::Format::Jsonl}, {"csv", moddom::RunConfig::Format::Csv}};
    cmd->add_option("--format", config.format, "report format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_flag("--timings", config.timings, "add timing fields to records");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination computations on modular products of graphs"};
    app.require_subcommand(1);

    moddom::RunConfig config;
    int budget = -1;

    auto* compute = app.add_subcommand(
        "compute", "bounds, exact values and classification for input pairs");
    add_common(compute, config);
    compute->add_option("--budget", budget, "domination budget (report '> budget' beyond it)");

    auto* verify = app.add_subcommand("verify", "run every invariant suite up to --max-n");
    add_common(verify, config);
    verify->add_flag("--selftest", config.selftest, "inject a failing check");

    auto* p1 = app.add_subcommand(
        "search-p1", "scan admissible pairs for a product domination number of 5");
    add_common(p1, config);
    auto* p2 = app.add_subcommand(
        "search-p2", "tabulate diameter-2 pairs against the factor domination numbers");
    add_common(p2, config);
    auto* p3 = app.add_subcommand(
        "search-p3", "scan graphs whose self-product exceeds gamma+1");
    add_common(p3, config);
    bool all_graphs = false;
    bool no_diam_filter = false;
    for (auto* cmd : {p1, p2, p3})
        cmd->add_flag("--all-graphs", all_graphs, "include disconnected graphs in the scan");
    p3->add_flag("--no-diameter-filter", no_diam_filter, "scan beyond diameter-2 candidates");

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) {
        config.mode = moddom::RunConfig::Mode::Compute;
        if (budget >= 0) config.budget = budget;
    } else if (verify->parsed()) {
        config.mode = moddom::RunConfig::Mode::Verify;
    } else if (p1->parsed()) {
        config.mode = moddom::RunConfig::Mode::SearchP1;
    } else if (p2->parsed()) {
        config.mode = moddom::RunConfig::Mode::SearchP2;
    } else {
        config.mode = moddom::RunConfig::Mode::SearchP3;
    }
    config.connected_only = !all_graphs;
    config.diameter_filter = !no_diam_filter;

    return run_mode(std::move(config));
}
