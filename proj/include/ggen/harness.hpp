// Experiment driver behind the CLI verbs: generate, compare, scaling,
// stats. Each verb is a plain function over an options struct so tests
// can call them without spawning processes.
#ifndef GGEN_HARNESS_HPP
#define GGEN_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ggen/generator.hpp"
#include "ggen/report.hpp"

namespace ggen {

// "m=78,t=45,n=34": n required, unspecified statistics default to 0.
std::pair<std::int64_t, SubgraphCounts> parse_inline_targets(const std::string& text);
// "m=2,q=0.5": unspecified weights default to 1.
std::array<double, kStatCount> parse_weights(const std::string& text);
// "m,s,t": the active statistic subset.
std::array<bool, kStatCount> parse_stat_subset(const std::string& text);

struct RunOptions {
    std::string input_path;                 // edge-list file; or
    std::optional<std::pair<std::int64_t, SubgraphCounts>> inline_targets;
    std::string generator = "gg";           // gg | er | mr | cl | ws | ba
    std::uint64_t seed = 1;
    double epsilon = 0.01;
    std::optional<std::int64_t> max_iterations;
    std::array<double, kStatCount> weights = {1, 1, 1, 1, 1, 1};
    std::array<bool, kStatCount> active = {true, true, true, true, true, true};
    ReturnPolicy return_policy = ReturnPolicy::best_seen;
    std::string out_dir;                    // empty: GGEN_OUT_DIR or ./ggen-out
    bool write_json = true;
    bool write_csv = false;
    std::set<std::string> series;           // degree, clustering, distance, spectrum
    bool timing = true;                     // false writes 0s for byte-stable output
    bool single_core = true;                // informational; all code is single-threaded
};

std::filesystem::path resolve_out_dir(const std::string& requested);

struct GenerateOutcome {
    ComparisonReport report;
    RunTrace trace; // empty for baseline generators
    std::filesystem::path edges_path;
    std::filesystem::path report_json_path; // empty if not written
};

GenerateOutcome run_generate(const RunOptions& opts);

struct CompareOptions {
    std::string input_path;
    std::vector<std::string> generators = {"gg", "er", "mr", "cl", "ws", "ba"};
    std::uint64_t seed = 1;
    double epsilon = 0.01;
    std::optional<std::int64_t> max_iterations;
    std::array<double, kStatCount> weights = {1, 1, 1, 1, 1, 1};
    std::array<bool, kStatCount> active = {true, true, true, true, true, true};
    std::string out_dir;
    bool write_json = true;
    bool write_csv = false;
    bool timing = true;
};

struct CompareOutcome {
    std::vector<ComparisonReport> rows;                  // one per generator
    std::vector<std::pair<double, double>> gg_error_vs_runtime; // (seconds, E)
};

CompareOutcome run_compare(const CompareOptions& opts);

struct ScalingOptions {
    std::vector<std::int64_t> sizes;
    double mean_degree = 10;
    int repeats = 1;
    std::uint64_t seed = 1;
    double epsilon = 0.01;
    std::string out_dir;
    bool write_json = true;
    bool write_csv = false;
};

struct ScalingPoint {
    std::int64_t n = 0;
    double runtime_median = 0;
    double runtime_mean = 0;
    double runtime_variance = 0;
    double error_mean = 0;
};

struct ScalingOutcome {
    std::vector<ScalingPoint> points;
    double loglog_slope = 0; // least squares on (ln n, ln median runtime)
};

ScalingOutcome run_scaling(const ScalingOptions& opts);

struct StatsOptions {
    std::string input_path;
    std::string out_dir;
    bool write_json = true;
    bool write_csv = false;
    std::set<std::string> series;
};

struct StatsOutcome {
    ComparisonReport report;
};

StatsOutcome run_stats(const StatsOptions& opts);

} // namespace ggen

#endif
