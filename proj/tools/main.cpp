#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    using namespace affine::cli;

    CLI::App app{"Exact simulator for affine finite and affine counter automata"};
    app.require_subcommand(1);

    std::string path;
    auto *validate = app.add_subcommand("validate", "Parse a machine file and check well-formedness");
    validate->add_option("path", path, "Machine file")->required();

    std::string word;
    bool show_state = false;
    auto *run = app.add_subcommand("run", "Print acceptance probabilities for one word");
    run->add_option("path", path, "Machine file")->required();
    run->add_option("--word", word, "Input word without end-markers")->required();
    run->add_flag("--show-state", show_state, "Also print the final state as exact rationals");

    std::string zoo_name;
    std::int64_t k = 0;
    std::string out_path;
    auto *zoo = app.add_subcommand("zoo", "Export a built-in machine");
    zoo->add_option("name", zoo_name, "end | pal-npal | pal-npal-restart | manytwins")->required();
    auto *zoo_k = zoo->add_option("--k", k, "Success parameter k >= 1");
    zoo->add_option("--out", out_path, "Output file (default: stdout)");

    affine::SweepOptions sweep_options;
    auto *sweep = app.add_subcommand("sweep", "Compare a machine with an oracle on every word up to a length");
    sweep->add_option("path", path, "Machine file")->required();
    sweep->add_option("--oracle", sweep_options.oracle, "end | pal | pal-npal | manytwins | twin-t:<t>")->required();
    sweep->add_option("--alphabet", sweep_options.alphabet, "Symbols to enumerate (default: machine alphabet)");
    sweep->add_option("--max-len", sweep_options.max_length, "Longest word length")->required();
    sweep->add_option("--k", sweep_options.k, "Error parameter for the claimed bounds")->default_val(1);
    sweep->add_option("--out", out_path, "TSV report file (default: stdout)");
    sweep->add_option("--threads", sweep_options.threads, "Worker threads (default: all cores)");
    sweep->add_flag("--force", sweep_options.force, "Allow more than 10^6 words");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*validate)
        return cmd_validate(path, std::cout, std::cerr);
    if (*run)
        return cmd_run(path, word, show_state, std::cout, std::cerr);
    if (*zoo)
        return cmd_zoo(zoo_name, *zoo_k ? std::optional<std::int64_t>(k) : std::nullopt, out_path, std::cout,
                       std::cerr);
    return cmd_sweep(path, sweep_options, out_path, std::cout, std::cerr);
}
