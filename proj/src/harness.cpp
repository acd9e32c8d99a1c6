#include "arbormatch/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "arbormatch/edge_list_io.hpp"
#include "arbormatch/errors.hpp"
#include "arbormatch/estimator.hpp"
#include "arbormatch/generate.hpp"
#include "arbormatch/oracles.hpp"
#include "arbormatch/rng.hpp"

namespace arbormatch {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
    return out;
}

// Per-seed estimator run shared by estimate and sweep so their result
// fields agree field-for-field.
struct SeedRun {
    std::uint64_t estimate = 0;
    double match_lower = 0.0;
    double match_upper = 0.0;
    std::uint32_t final_level = 0;
    std::size_t peak_tracked_edges = 0;
};

SeedRun run_one_seed(const EdgeStream& stream, const EstimatorConfig& config) {
    SurvivorSampler sampler(config);
    for (const Edge& e : stream.edges()) sampler.process(e);
    SeedRun run;
    run.estimate = sampler.estimate();
    const double value = static_cast<double>(run.estimate);
    run.match_lower = value / ((1.0 + config.epsilon) * (config.alpha + 2.0));
    run.match_upper = value / (1.0 - config.epsilon);
    run.final_level = sampler.level();
    run.peak_tracked_edges = sampler.peak_tracked();
    return run;
}

EstimatorConfig make_config(const EdgeStream& stream, std::uint32_t alpha, double epsilon,
                            std::uint64_t seed, std::optional<std::size_t> capacity_override) {
    EstimatorConfig config;
    config.alpha = alpha;
    config.epsilon = epsilon;
    config.n = std::max<VertexId>(stream.vertex_count(), 2);
    config.capacity = capacity_override.value_or(0);
    config.seed = seed;
    return config;
}

}  // namespace

Json RunReport::to_json() const {
    Json out = Json::object();
    out["command"] = command;
    out["parameters"] = parameters;
    out["results"] = results;
    out["timing_ms"] = timing_ms;
    return out;
}

LoadedStream load_stream_file(const std::string& path) {
    EdgeListFile file = read_edge_list_file(path);
    VertexId n;
    bool inferred = false;
    if (file.declared_n) {
        n = *file.declared_n;
        if (n < 1) throw ParseError(1, "declared n must be at least 1");
    } else {
        inferred = true;
        n = 1;
        for (const auto& [a, b] : file.edges) n = std::max({n, a + 1, b + 1});
    }
    try {
        return LoadedStream{EdgeStream::validate(file.edges, n), inferred};
    } catch (const StreamValidationError& err) {
        throw ParseError(file.lines.at(err.position()),
                         std::string(StreamValidationError::kind_name(err.kind())));
    }
}

RunReport cmd_exact(const std::string& file, std::uint32_t alpha, std::size_t match_cap,
                    std::size_t arb_cap) {
    const auto start = Clock::now();
    RunReport report;
    report.command = "exact";

    LoadedStream loaded = load_stream_file(file);
    const EdgeStream& stream = loaded.stream;
    report.parameters = Json{{"file", file},
                             {"alpha", alpha},
                             {"match_cap", match_cap},
                             {"arb_cap", arb_cap},
                             {"n", stream.vertex_count()},
                             {"n_inferred", loaded.n_inferred}};

    const SurvivorSet sur = survivors(stream, alpha);
    const PrefixProfile profile = survivor_profile(stream, alpha);
    report.results["e_alpha"] = sur.count;
    report.results["e_star"] = profile.peak;
    report.results["argmax_t"] = profile.peak_prefix;

    const Graph graph = stream.to_graph();
    try {
        report.results["matching"] = maximum_matching_size(graph, match_cap);
    } catch (const InstanceTooLarge& err) {
        std::cerr << "arbormatch: matching oracle skipped: " << err.what() << "\n";
        report.results["matching"] = nullptr;
    }
    try {
        report.results["arboricity"] = exact_arboricity(graph, arb_cap);
    } catch (const InstanceTooLarge& err) {
        std::cerr << "arbormatch: arboricity oracle skipped: " << err.what() << "\n";
        report.results["arboricity"] = nullptr;
    } catch (const EmptyGraphError&) {
        report.results["arboricity"] = nullptr;
    }
    report.results["edge_count"] = stream.size();

    report.timing_ms = elapsed_ms(start);
    return report;
}

RunReport cmd_estimate(const std::string& file, std::uint32_t alpha, double epsilon,
                       std::uint64_t seed, std::optional<std::size_t> capacity_override) {
    const auto start = Clock::now();
    RunReport report;
    report.command = "estimate";

    LoadedStream loaded = load_stream_file(file);
    const EdgeStream& stream = loaded.stream;
    const EstimatorConfig config = make_config(stream, alpha, epsilon, seed, capacity_override);
    const std::size_t effective_capacity =
        config.capacity != 0 ? config.capacity : default_capacity(epsilon, config.n);

    report.parameters = Json{{"file", file},
                             {"alpha", alpha},
                             {"epsilon", epsilon},
                             {"seed", seed},
                             {"capacity", effective_capacity},
                             {"n", config.n},
                             {"n_inferred", loaded.n_inferred}};

    const SeedRun run = run_one_seed(stream, config);
    report.results["estimate"] = run.estimate;
    report.results["match_lower"] = run.match_lower;
    report.results["match_upper"] = run.match_upper;
    report.results["final_level"] = run.final_level;
    report.results["peak_tracked_edges"] = run.peak_tracked_edges;

    report.timing_ms = elapsed_ms(start);
    return report;
}

RunReport cmd_generate(VertexId n, std::uint32_t alpha, std::uint64_t seed,
                       const std::string& out_file) {
    const auto start = Clock::now();
    RunReport report;
    report.command = "generate";
    report.parameters =
        Json{{"n", n}, {"alpha", alpha}, {"seed", seed}, {"out", out_file}};

    const EdgeStream stream = generate_forest_union(n, alpha, seed);
    write_edge_list_file(out_file, stream);
    report.results["edge_count"] = stream.size();

    report.timing_ms = elapsed_ms(start);
    return report;
}

RunReport cmd_verify(const VerifyOptions& options) {
    const auto start = Clock::now();
    if (options.n_min < 2 || options.n_min > options.n_max)
        throw std::invalid_argument("verify needs 2 <= n_min <= n_max");
    if (options.n_max > 16)
        throw std::invalid_argument("verify n_max capped at 16 for the matching oracle");
    if (options.alpha_min < 1 || options.alpha_min > options.alpha_max)
        throw std::invalid_argument("verify needs 1 <= alpha_min <= alpha_max");
    if (options.alpha_max > 4)
        throw std::invalid_argument("verify alpha_max capped at 4 for the matching oracle");

    RunReport report;
    report.command = "verify";
    report.parameters = Json{{"trials", options.trials},
                             {"n_min", options.n_min},
                             {"n_max", options.n_max},
                             {"alpha_min", options.alpha_min},
                             {"alpha_max", options.alpha_max},
                             {"seed", options.seed}};

    std::uint64_t passed = 0;
    Json first_counterexample = nullptr;

    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
        Rng trial_rng(derive_seed(options.seed, trial));
        const VertexId n = options.n_min + static_cast<VertexId>(uniform_below(
                                               trial_rng, options.n_max - options.n_min + 1));
        const std::uint32_t alpha =
            options.alpha_min + static_cast<std::uint32_t>(uniform_below(
                                    trial_rng, options.alpha_max - options.alpha_min + 1));
        const std::uint64_t gen_seed = trial_rng();
        const std::uint64_t shuffle_seed = trial_rng();

        const EdgeStream stream =
            shuffle_stream(generate_forest_union(n, alpha, gen_seed), shuffle_seed);
        const Graph graph = stream.to_graph();

        const std::size_t match = maximum_matching_size(graph, 64);
        std::int64_t survivor_count =
            static_cast<std::int64_t>(survivors(stream, alpha).count) +
            options.inject_fault_for_self_test;
        const PrefixProfile profile = survivor_profile(stream, alpha);
        const DiagnosticReport diag = classify_edges(stream, alpha);
        const std::size_t heavy = diag.heavy.size();

        std::vector<std::string> failed_checks;
        auto check = [&](bool condition, const char* name) {
            if (!condition) failed_checks.emplace_back(name);
        };

        const std::int64_t bound = static_cast<std::int64_t>((alpha + 2) * match);
        check(static_cast<std::int64_t>(match) <= survivor_count, "match <= e_alpha");
        check(survivor_count <= bound, "e_alpha <= (alpha+2)*match");
        check(match <= profile.peak, "match <= e_star");
        check(profile.peak <= static_cast<std::size_t>(bound), "e_star <= (alpha+2)*match");
        check(profile.peak >= static_cast<std::size_t>(std::max<std::int64_t>(
                                  survivor_count, 0)),
              "e_star >= e_alpha");
        check(static_cast<std::int64_t>(diag.survivor_count) == survivor_count,
              "classification total == e_alpha");
        check(diag.survivor_count ==
                  diag.good_no_heavy + diag.good_one_heavy + diag.good_two_heavy,
              "good split sums to e_alpha");
        check(diag.good_no_heavy == diag.light_edge_count, "light goods == light edges");
        check(diag.good_one_heavy + 2 * diag.good_two_heavy + diag.wasted_two_heavy ==
                  static_cast<std::size_t>(alpha + 1) * heavy,
              "retained-per-heavy identity");
        // The generator caps arboricity at alpha, so the conditional
        // inequalities must hold as well.
        check(diag.good_two_heavy + diag.wasted_two_heavy <=
                  static_cast<std::size_t>(alpha) * heavy,
              "heavy-heavy retained <= alpha*|H|");
        check(diag.good_one_heavy + diag.good_two_heavy >= heavy, "goods cover heavy set");
        if (n <= kDefaultArboricityVertexCap && !stream.empty())
            check(exact_arboricity(graph) <= alpha, "generated arboricity <= alpha");

        if (failed_checks.empty()) {
            ++passed;
        } else if (first_counterexample.is_null()) {
            first_counterexample = Json{{"trial", trial},
                                        {"n", n},
                                        {"alpha", alpha},
                                        {"gen_seed", gen_seed},
                                        {"shuffle_seed", shuffle_seed},
                                        {"failed_checks", failed_checks},
                                        {"edges", edges_to_json(stream.edges())},
                                        {"match", match},
                                        {"e_alpha", survivor_count},
                                        {"e_star", profile.peak}};
        }
    }

    report.results["trials"] = options.trials;
    report.results["passed"] = passed;
    report.results["failed"] = options.trials - passed;
    report.results["first_counterexample"] = first_counterexample;
    report.ok = passed == options.trials;

    report.timing_ms = elapsed_ms(start);
    return report;
}

RunReport cmd_sweep(const std::string& file, std::uint32_t alpha, double epsilon,
                    std::uint64_t seed_count, std::uint64_t master_seed,
                    std::optional<std::size_t> capacity_override, double threshold) {
    const auto start = Clock::now();
    if (seed_count < 1) throw std::invalid_argument("sweep needs at least one seed");
    if (!(threshold >= 0.0) || !(threshold <= 1.0))
        throw std::invalid_argument("sweep threshold must lie in [0, 1]");

    RunReport report;
    report.command = "sweep";

    LoadedStream loaded = load_stream_file(file);
    const EdgeStream& stream = loaded.stream;
    const EstimatorConfig base =
        make_config(stream, alpha, epsilon, master_seed, capacity_override);
    const std::size_t effective_capacity =
        base.capacity != 0 ? base.capacity : default_capacity(epsilon, base.n);

    report.parameters = Json{{"file", file},
                             {"alpha", alpha},
                             {"epsilon", epsilon},
                             {"seed", master_seed},
                             {"seeds", seed_count},
                             {"capacity", effective_capacity},
                             {"threshold", threshold},
                             {"n", base.n},
                             {"n_inferred", loaded.n_inferred}};

    const std::size_t oracle_peak = survivor_profile(stream, alpha).peak;

    // Trials are independent; run them across threads and assemble the
    // report in trial order so the output never depends on scheduling.
    std::vector<SeedRun> runs(seed_count);
    std::vector<std::uint64_t> seeds(seed_count);
    for (std::uint64_t i = 0; i < seed_count; ++i) seeds[i] = derive_seed(master_seed, i);

    const std::size_t workers =
        std::min<std::size_t>(seed_count, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (std::uint64_t i = w; i < seed_count; i += workers) {
                EstimatorConfig config = base;
                config.seed = seeds[i];
                runs[i] = run_one_seed(stream, config);
            }
        }));
    }
    for (auto& f : futures) f.get();

    Json per_seed = Json::array();
    std::uint64_t within_count = 0;
    long double estimate_sum = 0.0L;
    std::uint64_t min_estimate = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_estimate = 0;
    for (std::uint64_t i = 0; i < seed_count; ++i) {
        const SeedRun& run = runs[i];
        const double peak = static_cast<double>(oracle_peak);
        Json relative_error;
        bool within;
        if (oracle_peak > 0) {
            const double rel =
                std::abs(static_cast<double>(run.estimate) - peak) / peak;
            relative_error = rel;
            within = rel <= epsilon;
        } else {
            within = run.estimate == 0;
            if (within) relative_error = 0.0;
        }
        within_count += within ? 1 : 0;
        estimate_sum += run.estimate;
        min_estimate = std::min(min_estimate, run.estimate);
        max_estimate = std::max(max_estimate, run.estimate);
        per_seed.push_back(Json{{"seed", seeds[i]},
                                {"estimate", run.estimate},
                                {"match_lower", run.match_lower},
                                {"match_upper", run.match_upper},
                                {"final_level", run.final_level},
                                {"peak_tracked_edges", run.peak_tracked_edges},
                                {"relative_error", relative_error},
                                {"within", within}});
    }

    const double fraction = static_cast<double>(within_count) / static_cast<double>(seed_count);
    report.results["e_star"] = oracle_peak;
    report.results["per_seed"] = per_seed;
    report.results["fraction_within"] = fraction;
    report.results["mean_estimate"] = static_cast<double>(estimate_sum / seed_count);
    report.results["min_estimate"] = min_estimate;
    report.results["max_estimate"] = max_estimate;
    report.results["pass"] = fraction >= threshold;
    report.ok = fraction >= threshold;

    report.timing_ms = elapsed_ms(start);
    return report;
}

}  // namespace arbormatch
