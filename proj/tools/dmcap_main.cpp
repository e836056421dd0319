#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmcap/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Discrete-memoryless-channel capacity toolkit: "
                 "Blahut-Arimoto bounds, divergence comparisons, and a "
                 "Monte-Carlo LLR distinguisher"};
    app.require_subcommand(1);

    std::string kind, table, out_path;
    double d = 0.0, epsilon = 1e-4;
    unsigned n = 8, k = 1;
    std::size_t max_iterations = 1'000'000;

    auto* cap = app.add_subcommand(
        "capacity", "Capacity bounds for one channel");
    cap->add_option("--channel", kind, "bsc | nonsym | wht")
        ->required()
        ->check(CLI::IsMember({"bsc", "nonsym", "wht"}));
    cap->add_option("--d", d, "bias / coefficient magnitude")->required();
    cap->add_option("--n", n, "bit dimension (wht)");
    cap->add_option("--k", k, "spectral sparsity (wht)");
    cap->add_option("--epsilon", epsilon, "accuracy target (default 1e-4)");
    cap->add_option("--max-iterations", max_iterations);

    auto* rep = app.add_subcommand(
        "reproduce", "Regenerate a built-in reference grid as CSV");
    rep->add_option("--table", table, "table1 | table2")->required();
    rep->add_option("--out", out_path, "output CSV path")->required();

    std::vector<unsigned> k_list{1, 2, 4};
    double d_min = 0.01, d_step = 0.01;
    double d_max_val = 0.0;
    auto* swp = app.add_subcommand(
        "sweep", "Capacity vs. estimate over sparse-spectrum channels");
    swp->add_option("--n", n, "bit dimension (default 8)");
    swp->add_option("--k", k_list, "sparsity list (default 1 2 4)");
    swp->add_option("--d-min", d_min);
    auto* dmax_opt = swp->add_option("--d-max", d_max_val,
                                     "default: per-k min(0.99, 1/k - 0.01)");
    swp->add_option("--d-step", d_step);
    swp->add_option("--epsilon", epsilon);
    swp->add_option("--out", out_path, "output CSV path")->required();

    std::vector<std::uint64_t> samples;
    std::size_t trials = 2000;
    std::uint64_t seed = 42;
    auto* dis = app.add_subcommand(
        "distinguish", "Empirical LLR-distinguisher error rates");
    dis->add_option("--n", n, "bit dimension (default 8)");
    dis->add_option("--k", k, "spectral sparsity (default 1)");
    dis->add_option("--d", d, "coefficient magnitude")->required();
    dis->add_option("--samples", samples, "sample counts, one CSV row each")
        ->required();
    dis->add_option("--trials", trials, "experiments per source (default 2000)");
    dis->add_option("--seed", seed, "base RNG seed (default 42)");
    dis->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return dmcap::exit_usage;
    }

    if (*cap)
        return dmcap::cmd_capacity(kind, d, n, k, epsilon, max_iterations,
                                   std::cout, std::cerr);
    if (*rep) return dmcap::cmd_reproduce(table, out_path, std::cerr);
    if (*swp) {
        std::optional<double> d_max;
        if (dmax_opt->count()) d_max = d_max_val;
        return dmcap::cmd_sweep(n, k_list, d_min, d_max, d_step, epsilon,
                                out_path, std::cerr);
    }
    if (*dis)
        return dmcap::cmd_distinguish(n, k, d, samples, trials, seed, out_path,
                                      std::cerr);
    return dmcap::exit_usage;  // unreachable with require_subcommand(1)
}
