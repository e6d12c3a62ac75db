// The guided optimization loop: start from an Erdős–Rényi seed with the
// target edge count, then repeatedly pick a random pivot and toggle the
// incident edge that minimizes the weighted squared relative error of
// the six maintained subgraph counts. Stops after ceil(n * ln(1/eps))
// consecutive iterations without a new strict error minimum.
#ifndef GGEN_GENERATOR_HPP
#define GGEN_GENERATOR_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "ggen/counts.hpp"
#include "ggen/delta.hpp"
#include "ggen/graph.hpp"
#include "ggen/rng.hpp"

namespace ggen {

// (value - target) / target; for target = 0 the deviation is taken
// absolutely (denominator 1), callers flag such statistics.
double relative_error(std::int64_t value, std::int64_t target);

// sqrt((1/|S|) * sum w_i e_i^2). Equal weights reproduce the plain
// root-mean-square relative error.
double total_error(const std::array<double, kStatCount>& errors,
                   const std::array<double, kStatCount>& weights,
                   const std::array<bool, kStatCount>& active);

struct TargetSpec {
    std::int64_t n = 0;
    SubgraphCounts targets;

    static TargetSpec from_graph(const Graph& g);
    static TargetSpec from_counts(std::int64_t n, const SubgraphCounts& targets);

    void validate() const; // n >= 2, counts >= 0, m <= C(n,2)
};

enum class ReturnPolicy { best_seen, final_state };
enum class StopReason { window, iteration_cap };

struct GeneratorConfig {
    double epsilon = 0.01;
    std::uint64_t seed = 1;
    std::optional<std::int64_t> max_iterations;
    std::array<double, kStatCount> weights = {1, 1, 1, 1, 1, 1};
    std::array<bool, kStatCount> active = {true, true, true, true, true, true};
    ReturnPolicy return_policy = ReturnPolicy::best_seen;
    // 0 = auto: every iteration for n <= 1000, decimated above.
    std::int64_t trace_stride = 0;
    // Optional replacement for the Erdős–Rényi seed graph (testing,
    // warm starts). Must have exactly n nodes.
    std::optional<Graph> initial_graph;

    void validate(std::int64_t n) const;
};

struct TraceRecord {
    std::int64_t iteration = 0; // 0 = seed graph, before any toggle
    double total_error = 0;
    std::array<double, kStatCount> stat_errors{};
    SubgraphCounts counts;

    bool operator==(const TraceRecord&) const = default;
};

struct RunTrace {
    std::vector<TraceRecord> records;
    std::int64_t iterations = 0;
    StopReason stop_reason = StopReason::window;
    std::int64_t window = 0;
    double final_error = 0;
    double best_error = 0;
    std::int64_t best_iteration = 0;
};

// Sink receives each recorded trace point plus the elapsed wall-clock
// seconds since the run started (timing is observational only; the
// trace itself is deterministic).
using ProgressSink = std::function<void(const TraceRecord&, double elapsed_seconds)>;

// Erdős–Rényi G(n, p) with p = m_target / C(n,2).
Graph init_seed_graph(std::int64_t n, std::int64_t m_target, std::uint64_t seed);

struct StepResult {
    NodeId chosen = -1;
    SubgraphCounts counts;
    double error = 0; // total error after the toggle
};

// One optimization step with a fixed pivot: evaluates all candidates,
// toggles the argmin edge (a toggle always happens), returns updated
// running counts. `counts` must equal the true counts of `g`.
StepResult guided_step(Graph& g, NodeId pivot, const SubgraphCounts& counts,
                       const TargetSpec& spec, const GeneratorConfig& cfg,
                       DeltaEngine& engine, DeltaBatch& batch);

// Stepwise driver; used directly by tests that need per-iteration access.
class GuidedOptimizer {
public:
    GuidedOptimizer(const TargetSpec& spec, const GeneratorConfig& cfg);

    const Graph& graph() const { return graph_; }
    const SubgraphCounts& counts() const { return counts_; }
    std::int64_t iteration() const { return iteration_; }
    std::int64_t window() const { return window_; }
    double current_error() const { return current_error_; }
    double best_error() const { return best_error_; }
    std::int64_t best_iteration() const { return best_iteration_; }

    bool finished() const;
    StopReason stop_reason() const;
    void iterate(); // one random-pivot step

    TraceRecord current_record() const;
    bool should_record() const { return iteration_ % stride_ == 0; }

    // Graph according to the return policy (best-seen replays the toggle
    // log on a copy of the seed graph).
    Graph result_graph() const;

private:
    std::array<double, kStatCount> stat_errors(const SubgraphCounts& c) const;

    TargetSpec spec_;
    GeneratorConfig cfg_;
    Rng rng_;
    Graph seed_graph_;
    Graph graph_;
    SubgraphCounts counts_;
    DeltaEngine engine_;
    DeltaBatch batch_;
    std::vector<std::pair<NodeId, NodeId>> toggle_log_;
    std::int64_t iteration_ = 0;
    std::int64_t window_ = 0;
    std::int64_t since_improvement_ = 0;
    std::int64_t stride_ = 1;
    double current_error_ = 0;
    double best_error_ = 0;
    std::int64_t best_iteration_ = 0;
};

struct GuidedResult {
    Graph graph;
    RunTrace trace;
};

GuidedResult run_guided(const TargetSpec& spec, const GeneratorConfig& cfg,
                        const ProgressSink& sink = {});

} // namespace ggen

#endif
