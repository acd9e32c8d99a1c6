#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "arbormatch/arboricity.hpp"
#include "arbormatch/matching.hpp"
#include "arbormatch/stream.hpp"

namespace arbormatch {

using Json = nlohmann::ordered_json;

// One report object per invocation: stable field schema per command, every
// numeric result reproducible bit-for-bit from (input, parameters). Timing
// is the one field exempt from reproducibility. `ok` drives the process
// exit code and is not serialized.
struct RunReport {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::object();
    std::int64_t timing_ms = 0;
    bool ok = true;

    Json to_json() const;
};

// Validated stream plus how its vertex count was determined. When the file
// lacks a "# n=" header the count is inferred from a pre-scan, a convenience
// that departs from the one-pass model and is flagged in reports.
struct LoadedStream {
    EdgeStream stream;
    bool n_inferred = false;
};

LoadedStream load_stream_file(const std::string& path);

RunReport cmd_exact(const std::string& file, std::uint32_t alpha,
                    std::size_t match_cap = kDefaultMatchingEdgeCap,
                    std::size_t arb_cap = kDefaultArboricityVertexCap);

RunReport cmd_estimate(const std::string& file, std::uint32_t alpha, double epsilon,
                       std::uint64_t seed,
                       std::optional<std::size_t> capacity_override = std::nullopt);

RunReport cmd_generate(VertexId n, std::uint32_t alpha, std::uint64_t seed,
                       const std::string& out_file);

struct VerifyOptions {
    std::uint64_t trials = 100;
    VertexId n_min = 2;
    VertexId n_max = 12;
    std::uint32_t alpha_min = 1;
    std::uint32_t alpha_max = 3;
    std::uint64_t seed = 0;
    // Self-test hook: shifts the survivor count before the assertions so
    // tests can confirm that a broken oracle is actually caught. Not
    // reachable from the CLI.
    std::int64_t inject_fault_for_self_test = 0;
};

RunReport cmd_verify(const VerifyOptions& options);

RunReport cmd_sweep(const std::string& file, std::uint32_t alpha, double epsilon,
                    std::uint64_t seed_count, std::uint64_t master_seed,
                    std::optional<std::size_t> capacity_override = std::nullopt,
                    double threshold = 0.9);

}  // namespace arbormatch
