#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "arbormatch/errors.hpp"
#include "arbormatch/harness.hpp"

namespace {

void print_report(const arbormatch::RunReport& report) {
    std::cout << report.to_json().dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Streaming matching-size estimation for bounded-arboricity graphs"};
    app.require_subcommand(1);

    std::string file;
    std::string out_file;
    std::uint32_t alpha = 0;
    double epsilon = 0.2;
    std::uint64_t seed = 0;
    std::uint64_t seeds = 1;
    std::optional<std::size_t> capacity;
    std::uint32_t n = 2;
    double threshold = 0.9;
    std::size_t match_cap = arbormatch::kDefaultMatchingEdgeCap;
    std::size_t arb_cap = arbormatch::kDefaultArboricityVertexCap;
    arbormatch::VerifyOptions verify_options;

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Master RNG seed")->envname("ARBORMATCH_SEED");
    };

    CLI::App* exact = app.add_subcommand("exact", "Exact oracle quantities for a stream file");
    exact->add_option("file", file, "Edge-list file")->required();
    exact->add_option("--alpha", alpha, "Arboricity parameter")->required();
    exact->add_option("--match-cap", match_cap, "Edge cap for the exact matching oracle");
    exact->add_option("--arb-cap", arb_cap, "Vertex cap for the arboricity oracle");

    CLI::App* estimate = app.add_subcommand("estimate", "One-pass estimate for a stream file");
    estimate->add_option("file", file, "Edge-list file")->required();
    estimate->add_option("--alpha", alpha, "Arboricity parameter")->required();
    estimate->add_option("--epsilon", epsilon, "Accuracy parameter in (0,1)")->required();
    estimate->add_option("--capacity", capacity, "Tracked-set capacity override");
    add_seed(estimate);

    CLI::App* generate = app.add_subcommand("generate", "Write a random forest-union instance");
    generate->add_option("--n", n, "Vertex count (>= 2)")->required();
    generate->add_option("--alpha", alpha, "Number of spanning forests (>= 1)")->required();
    generate->add_option("--out", out_file, "Output edge-list file")->required();
    add_seed(generate);

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the matching bounds and classification identities on random instances");
    verify->add_option("--trials", verify_options.trials, "Number of generated instances");
    verify->add_option("--n-min", verify_options.n_min, "Smallest vertex count");
    verify->add_option("--n-max", verify_options.n_max, "Largest vertex count (<= 16)");
    verify->add_option("--alpha-min", verify_options.alpha_min, "Smallest alpha");
    verify->add_option("--alpha-max", verify_options.alpha_max, "Largest alpha (<= 4)");
    verify->add_option("--seed", verify_options.seed, "Master RNG seed")
        ->envname("ARBORMATCH_SEED");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Run the estimator across derived seeds and compare to the exact peak");
    sweep->add_option("file", file, "Edge-list file")->required();
    sweep->add_option("--alpha", alpha, "Arboricity parameter")->required();
    sweep->add_option("--epsilon", epsilon, "Accuracy parameter in (0,1)")->required();
    sweep->add_option("--seeds", seeds, "Number of derived seeds (>= 1)")->required();
    sweep->add_option("--capacity", capacity, "Tracked-set capacity override");
    sweep->add_option("--threshold", threshold, "Required within-(1±epsilon) fraction");
    add_seed(sweep);

    CLI11_PARSE(app, argc, argv);

    try {
        arbormatch::RunReport report;
        if (exact->parsed()) {
            report = arbormatch::cmd_exact(file, alpha, match_cap, arb_cap);
        } else if (estimate->parsed()) {
            report = arbormatch::cmd_estimate(file, alpha, epsilon, seed, capacity);
        } else if (generate->parsed()) {
            report = arbormatch::cmd_generate(n, alpha, seed, out_file);
        } else if (verify->parsed()) {
            report = arbormatch::cmd_verify(verify_options);
        } else {
            report = arbormatch::cmd_sweep(file, alpha, epsilon, seeds, seed, capacity, threshold);
        }
        print_report(report);
        if (!report.ok) {
            std::cerr << "arbormatch: verification below threshold\n";
            return 2;
        }
        return 0;
    } catch (const std::exception& err) {
        std::cerr << "arbormatch: " << err.what() << "\n";
        return 1;
    }
}
