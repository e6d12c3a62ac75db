#include <doctest.h>

#include <cmath>

#include "ggen/errors.hpp"
#include "ggen/generator.hpp"
#include "test_util.hpp"

using namespace ggen;

namespace {
const std::array<double, kStatCount> kUnitWeights = {1, 1, 1, 1, 1, 1};
const std::array<bool, kStatCount> kAllActive = {true, true, true, true, true, true};
} // namespace

TEST_CASE("relative error") {
    CHECK(relative_error(110, 100) == doctest::Approx(0.1));
    CHECK(relative_error(100, 100) == 0.0);
    CHECK(relative_error(50, 0) == 50.0); // zero-target: absolute deviation
}

TEST_CASE("total error") {
    CHECK(total_error({0, 0, 0, 0, 0, 0}, kUnitWeights, kAllActive) == 0.0);

    std::array<bool, kStatCount> two{};
    two[0] = two[1] = true;
    CHECK(total_error({0.3, 0.4, 0, 0, 0, 0}, kUnitWeights, two) ==
          doctest::Approx(std::sqrt(0.125)));

    std::array<bool, kStatCount> one{};
    one[4] = true;
    CHECK(total_error({0, 0, 0, 0, 0.2, 0}, kUnitWeights, one) == doctest::Approx(0.2));
}

TEST_CASE("seed graph extremes") {
    const Graph empty = init_seed_graph(6, 0, 1);
    CHECK(empty.edge_count() == 0);
    const Graph full = init_seed_graph(6, 15, 1);
    CHECK(full.edge_count() == 15);
}

TEST_CASE("seed graph edge counts stay within four sigma") {
    const std::int64_t n = 1000, m = 5000;
    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    const double p = static_cast<double>(m) / pairs;
    const double sigma = std::sqrt(pairs * p * (1 - p));
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Graph g = init_seed_graph(n, m, seed);
        CHECK(std::abs(static_cast<double>(g.edge_count()) - static_cast<double>(m)) <
              4.0 * sigma);
    }
}

TEST_CASE("a step always toggles, even at the optimum") {
    Graph k3 = test::complete_graph(3);
    const TargetSpec spec = TargetSpec::from_graph(k3);
    GeneratorConfig cfg;
    DeltaEngine engine(3);
    DeltaBatch batch;
    const StepResult r = guided_step(k3, 0, spec.targets, spec, cfg, engine, batch);
    CHECK(r.chosen == 1); // symmetric candidates, lowest index wins
    CHECK(k3.edge_count() == 2);
    // E = sqrt((1/6) ((1/3)^2 + (2/3)^2 + 1)) for the forced removal
    CHECK(r.error == doctest::Approx(std::sqrt(14.0 / 54.0)));
    CHECK(r.error > 0.0);
}

TEST_CASE("a step closes the single missing edge") {
    const Graph g0 = test::random_graph(10, 0.35, 3);
    REQUIRE(g0.has_edge(0, 1) == g0.has_edge(0, 1)); // touch to silence lints
    Graph g = g0;
    // remove one edge, then ask the step to restore it from pivot a
    const auto edge = g.edges().front();
    g.toggle_edge(edge.first, edge.second);
    const TargetSpec spec = TargetSpec::from_graph(g0);
    GeneratorConfig cfg;
    DeltaEngine engine(g.node_count());
    DeltaBatch batch;
    const StepResult r = guided_step(g, edge.first, count_all(g), spec, cfg, engine, batch);
    CHECK(r.chosen == edge.second);
    CHECK(r.error == 0.0);
    CHECK(g == g0);
}

TEST_CASE("running counts stay in sync with recounts") {
    const Graph g0 = test::random_graph(12, 0.3, 8);
    TargetSpec spec = TargetSpec::from_graph(g0);
    GeneratorConfig cfg;
    cfg.seed = 5;
    cfg.max_iterations = 200;
    GuidedOptimizer opt(spec, cfg);
    while (!opt.finished()) {
        opt.iterate();
        CHECK(opt.counts() == count_all(opt.graph()));
    }
}

TEST_CASE("already-optimal targets stop exactly one window later") {
    const Graph g0 = test::random_graph(12, 0.4, 17);
    TargetSpec spec = TargetSpec::from_graph(g0);
    GeneratorConfig cfg;
    cfg.seed = 17;
    cfg.initial_graph = g0; // start at the optimum
    const GuidedResult result = run_guided(spec, cfg);
    const std::int64_t window =
        static_cast<std::int64_t>(std::ceil(12.0 * std::log(100.0)));
    CHECK(result.trace.window == window);
    CHECK(result.trace.iterations == window);
    CHECK(result.trace.stop_reason == StopReason::window);
    CHECK(result.trace.best_iteration == 0);
    CHECK(result.graph == g0); // best-seen snapshot is the seed
}

TEST_CASE("iteration cap stops the run") {
    const Graph g0 = test::random_graph(10, 0.4, 2);
    TargetSpec spec = TargetSpec::from_graph(g0);
    GeneratorConfig cfg;
    cfg.max_iterations = 7;
    const GuidedResult result = run_guided(spec, cfg);
    CHECK(result.trace.iterations == 7);
    CHECK(result.trace.stop_reason == StopReason::iteration_cap);
}

TEST_CASE("every trace record's total error is recomputable from its parts") {
    const Graph g0 = test::random_graph(14, 0.35, 12);
    const TargetSpec spec = TargetSpec::from_graph(g0);
    GeneratorConfig cfg;
    cfg.seed = 2;
    cfg.max_iterations = 150;
    const GuidedResult result = run_guided(spec, cfg);
    for (const TraceRecord& rec : result.trace.records) {
        CHECK(rec.total_error ==
              doctest::Approx(total_error(rec.stat_errors, cfg.weights, cfg.active))
                  .epsilon(1e-12));
        const auto x = spec.targets.to_array();
        const auto y = rec.counts.to_array();
        for (int i = 0; i < kStatCount; ++i)
            CHECK(rec.stat_errors[static_cast<std::size_t>(i)] ==
                  relative_error(y[static_cast<std::size_t>(i)],
                                 x[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("identical config gives identical runs") {
    const Graph g0 = test::random_graph(15, 0.3, 4);
    const TargetSpec spec = TargetSpec::from_graph(g0);
    GeneratorConfig cfg;
    cfg.seed = 31;
    const GuidedResult a = run_guided(spec, cfg);
    const GuidedResult b = run_guided(spec, cfg);
    CHECK(a.graph == b.graph);
    REQUIRE(a.trace.records.size() == b.trace.records.size());
    for (std::size_t i = 0; i < a.trace.records.size(); ++i)
        CHECK(a.trace.records[i] == b.trace.records[i]);
    CHECK(a.trace.iterations == b.trace.iterations);
}

TEST_CASE("best-seen snapshot beats or matches the final state") {
    const Graph g0 = test::random_graph(16, 0.25, 9);
    const TargetSpec spec = TargetSpec::from_graph(g0);
    GeneratorConfig cfg;
    cfg.seed = 77;
    const GuidedResult best = run_guided(spec, cfg);

    // best error is the running minimum of the trace
    double running = best.trace.records.front().total_error;
    for (const TraceRecord& rec : best.trace.records)
        running = std::min(running, rec.total_error);
    CHECK(best.trace.best_error == doctest::Approx(running).epsilon(1e-12));
    CHECK(best.trace.best_error <= best.trace.final_error);

    // the returned graph really is the best-seen state
    const auto achieved = count_all(best.graph);
    std::array<double, kStatCount> errs{};
    const auto x = spec.targets.to_array();
    const auto y = achieved.to_array();
    for (int i = 0; i < kStatCount; ++i)
        errs[static_cast<std::size_t>(i)] =
            relative_error(y[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]);
    CHECK(total_error(errs, cfg.weights, cfg.active) ==
          doctest::Approx(best.trace.best_error).epsilon(1e-12));

    GeneratorConfig final_cfg = cfg;
    final_cfg.return_policy = ReturnPolicy::final_state;
    const GuidedResult fin = run_guided(spec, final_cfg);
    CHECK(count_all(fin.graph) == fin.trace.records.back().counts);
}

TEST_CASE("scaling the weights by a power of two never changes the moves") {
    const Graph g0 = test::random_graph(14, 0.3, 23);
    const TargetSpec spec = TargetSpec::from_graph(g0);
    GeneratorConfig cfg;
    cfg.seed = 6;
    cfg.max_iterations = 120;
    cfg.return_policy = ReturnPolicy::final_state;
    const GuidedResult base = run_guided(spec, cfg);

    for (double scale : {0.5, 4.0, 1024.0}) {
        GeneratorConfig scaled = cfg;
        for (double& w : scaled.weights)
            w *= scale;
        const GuidedResult other = run_guided(spec, scaled);
        CHECK(other.graph == base.graph);
    }
}

TEST_CASE("zero-valued targets keep the objective finite") {
    SubgraphCounts targets;
    targets.edges = 5; // everything else stays 0
    const TargetSpec spec = TargetSpec::from_counts(8, targets);
    GeneratorConfig cfg;
    cfg.max_iterations = 100;
    const GuidedResult result = run_guided(spec, cfg);
    for (const TraceRecord& rec : result.trace.records) {
        CHECK(std::isfinite(rec.total_error));
        for (double e : rec.stat_errors)
            CHECK(std::isfinite(e));
    }
}

TEST_CASE("infeasible edge targets are rejected at construction") {
    SubgraphCounts targets;
    targets.edges = 100; // C(5,2) = 10
    CHECK_THROWS_AS(TargetSpec::from_counts(5, targets), InfeasibleError);
}

TEST_CASE("complete-graph targets reproduce K5 exactly") {
    const Graph k5 = test::complete_graph(5);
    const TargetSpec spec = TargetSpec::from_graph(k5);
    GeneratorConfig cfg;
    cfg.seed = 3;
    const GuidedResult result = run_guided(spec, cfg);
    CHECK(result.trace.best_error == 0.0);
    CHECK(result.graph == k5);
}

TEST_CASE("karate targets converge to a small error") {
    const TargetSpec spec = TargetSpec::from_graph(test::karate_graph());
    GeneratorConfig cfg;
    cfg.seed = 1;
    const GuidedResult result = run_guided(spec, cfg);
    CHECK(result.trace.best_error <= 0.05);
}
