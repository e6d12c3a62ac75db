#include "ggen/generator.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ggen/errors.hpp"

namespace ggen {

double relative_error(std::int64_t value, std::int64_t target) {
    if (target == 0)
        return static_cast<double>(value);
    return (static_cast<double>(value) - static_cast<double>(target)) /
           static_cast<double>(target);
}

double total_error(const std::array<double, kStatCount>& errors,
                   const std::array<double, kStatCount>& weights,
                   const std::array<bool, kStatCount>& active) {
    double acc = 0;
    int used = 0;
    for (int i = 0; i < kStatCount; ++i) {
        if (!active[static_cast<std::size_t>(i)])
            continue;
        const double e = errors[static_cast<std::size_t>(i)];
        acc += weights[static_cast<std::size_t>(i)] * e * e;
        ++used;
    }
    if (used == 0)
        throw std::invalid_argument("total_error needs at least one statistic");
    return std::sqrt(acc / used);
}

TargetSpec TargetSpec::from_graph(const Graph& g) {
    TargetSpec spec;
    spec.n = g.node_count();
    spec.targets = count_all(g);
    spec.validate();
    return spec;
}

TargetSpec TargetSpec::from_counts(std::int64_t n, const SubgraphCounts& targets) {
    TargetSpec spec;
    spec.n = n;
    spec.targets = targets;
    spec.validate();
    return spec;
}

void TargetSpec::validate() const {
    if (n < 2)
        throw InfeasibleError("target node count must be at least 2");
    for (std::int64_t v : targets.to_array())
        if (v < 0)
            throw InfeasibleError("target counts must be nonnegative");
    const std::int64_t pairs = n * (n - 1) / 2;
    if (targets.edges > pairs)
        throw InfeasibleError("target edge count exceeds C(n,2)");
}

void GeneratorConfig::validate(std::int64_t n) const {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0,1)");
    for (double w : weights)
        if (!(w > 0))
            throw std::invalid_argument("statistic weights must be positive");
    bool any = false;
    for (bool a : active)
        any = any || a;
    if (!any)
        throw std::invalid_argument("at least one statistic must be active");
    if (max_iterations && *max_iterations < 0)
        throw std::invalid_argument("max_iterations must be nonnegative");
    if (initial_graph && initial_graph->node_count() != n)
        throw std::invalid_argument("initial graph node count differs from targets");
}

Graph init_seed_graph(std::int64_t n, std::int64_t m_target, std::uint64_t seed) {
    if (n < 2)
        throw InfeasibleError("seed graph needs at least 2 nodes");
    const std::int64_t pairs = n * (n - 1) / 2;
    if (m_target < 0 || m_target > pairs)
        throw InfeasibleError("edge target outside [0, C(n,2)]");
    const double p = static_cast<double>(m_target) / static_cast<double>(pairs);

    Graph g(static_cast<NodeId>(n));
    if (p <= 0.0)
        return g;
    Rng rng(seed);
    if (p >= 1.0) {
        for (NodeId u = 0; u < g.node_count(); ++u)
            for (NodeId w = u + 1; w < g.node_count(); ++w)
                g.add_edge(u, w);
        return g;
    }
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId w = u + 1; w < g.node_count(); ++w)
            if (rng.next_unit() < p)
                g.add_edge(u, w);
    return g;
}

namespace {

// Candidate objective and the post-toggle error share this exact
// arithmetic so that E' after the toggle equals the evaluated objective
// of the chosen candidate bit for bit.
double weighted_goal(const std::array<std::int64_t, kStatCount>& values,
                     const std::array<std::int64_t, kStatCount>& targets,
                     const GeneratorConfig& cfg) {
    double acc = 0;
    for (int i = 0; i < kStatCount; ++i) {
        const auto iz = static_cast<std::size_t>(i);
        if (!cfg.active[iz])
            continue;
        const double e = relative_error(values[iz], targets[iz]);
        acc += cfg.weights[iz] * e * e;
    }
    return acc;
}

// Pivot draws use a stream derived from the seed so they stay
// independent of the seed-graph pair draws (splitmix64 scramble).
std::uint64_t derive_pivot_seed(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

StepResult guided_step(Graph& g, NodeId pivot, const SubgraphCounts& counts,
                       const TargetSpec& spec, const GeneratorConfig& cfg,
                       DeltaEngine& engine, DeltaBatch& batch) {
    StepResult r;
    const auto y = counts.to_array();
    const auto x = spec.targets.to_array();

    engine.compute(g, pivot, batch);

    double best = std::numeric_limits<double>::infinity();
    NodeId best_w = -1;
    std::array<std::int64_t, kStatCount> candidate{};
    for (NodeId w = 0; w < g.node_count(); ++w) {
        if (w == pivot)
            continue;
        const auto wz = static_cast<std::size_t>(w);
        for (int i = 0; i < kStatCount; ++i)
            candidate[static_cast<std::size_t>(i)] =
                y[static_cast<std::size_t>(i)] + batch.by_stat(i)[wz];
        const double goal = weighted_goal(candidate, x, cfg);
        if (goal < best) { // ties keep the lowest candidate index
            best = goal;
            best_w = w;
        }
    }

    g.toggle_edge(pivot, best_w);
    const auto bz = static_cast<std::size_t>(best_w);
    std::array<std::int64_t, kStatCount> updated{};
    for (int i = 0; i < kStatCount; ++i)
        updated[static_cast<std::size_t>(i)] =
            y[static_cast<std::size_t>(i)] + batch.by_stat(i)[bz];

    r.chosen = best_w;
    r.counts = SubgraphCounts::from_array(updated);
    std::array<double, kStatCount> errors{};
    for (int i = 0; i < kStatCount; ++i)
        errors[static_cast<std::size_t>(i)] =
            relative_error(updated[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]);
    r.error = total_error(errors, cfg.weights, cfg.active);
    return r;
}

GuidedOptimizer::GuidedOptimizer(const TargetSpec& spec, const GeneratorConfig& cfg)
    : spec_(spec),
      cfg_(cfg),
      rng_(derive_pivot_seed(cfg.seed)),
      seed_graph_(cfg.initial_graph ? *cfg.initial_graph
                                    : init_seed_graph(spec.n, spec.targets.edges, cfg.seed)),
      graph_(seed_graph_),
      counts_(count_all(graph_)),
      engine_(graph_.node_count()) {
    spec_.validate();
    cfg_.validate(spec_.n);
    window_ = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(spec_.n) * std::log(1.0 / cfg_.epsilon)));
    stride_ = cfg_.trace_stride > 0
                  ? cfg_.trace_stride
                  : (spec_.n <= 1000 ? 1 : (spec_.n + 999) / 1000);
    current_error_ = total_error(stat_errors(counts_), cfg_.weights, cfg_.active);
    best_error_ = current_error_;
    best_iteration_ = 0;
}

std::array<double, kStatCount> GuidedOptimizer::stat_errors(const SubgraphCounts& c) const {
    std::array<double, kStatCount> e{};
    const auto y = c.to_array();
    const auto x = spec_.targets.to_array();
    for (int i = 0; i < kStatCount; ++i)
        e[static_cast<std::size_t>(i)] =
            relative_error(y[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]);
    return e;
}

bool GuidedOptimizer::finished() const {
    if (cfg_.max_iterations && iteration_ >= *cfg_.max_iterations)
        return true;
    return since_improvement_ >= window_;
}

StopReason GuidedOptimizer::stop_reason() const {
    return since_improvement_ >= window_ ? StopReason::window : StopReason::iteration_cap;
}

void GuidedOptimizer::iterate() {
    const NodeId pivot = static_cast<NodeId>(rng_.next_index(static_cast<std::uint64_t>(spec_.n)));
    const StepResult step = guided_step(graph_, pivot, counts_, spec_, cfg_, engine_, batch_);
    counts_ = step.counts;
    current_error_ = step.error;
    toggle_log_.emplace_back(pivot, step.chosen);
    ++iteration_;
    if (current_error_ < best_error_) { // strict improvement resets the window
        best_error_ = current_error_;
        best_iteration_ = iteration_;
        since_improvement_ = 0;
    } else {
        ++since_improvement_;
    }
}

TraceRecord GuidedOptimizer::current_record() const {
    TraceRecord rec;
    rec.iteration = iteration_;
    rec.counts = counts_;
    rec.stat_errors = stat_errors(counts_);
    rec.total_error = current_error_;
    return rec;
}

Graph GuidedOptimizer::result_graph() const {
    if (cfg_.return_policy == ReturnPolicy::final_state)
        return graph_;
    Graph g = seed_graph_;
    for (std::int64_t i = 0; i < best_iteration_; ++i)
        g.toggle_edge(toggle_log_[static_cast<std::size_t>(i)].first,
                      toggle_log_[static_cast<std::size_t>(i)].second);
    return g;
}

GuidedResult run_guided(const TargetSpec& spec, const GeneratorConfig& cfg,
                        const ProgressSink& sink) {
    GuidedOptimizer opt(spec, cfg);
    const auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    };

    RunTrace trace;
    trace.window = opt.window();
    trace.records.push_back(opt.current_record());
    if (sink)
        sink(trace.records.back(), elapsed());

    while (!opt.finished()) {
        opt.iterate();
        if (opt.should_record()) {
            trace.records.push_back(opt.current_record());
            if (sink)
                sink(trace.records.back(), elapsed());
        }
    }

    trace.iterations = opt.iteration();
    trace.stop_reason = opt.stop_reason();
    trace.final_error = opt.current_error();
    trace.best_error = opt.best_error();
    trace.best_iteration = opt.best_iteration();
    return GuidedResult{opt.result_graph(), std::move(trace)};
}

} // namespace ggen
