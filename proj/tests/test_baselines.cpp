#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ggen/baselines.hpp"
#include "ggen/counts.hpp"
#include "ggen/stats.hpp"
#include "test_util.hpp"

using namespace ggen;

TEST_CASE("erdos-renyi extremes and mean edge count") {
    CHECK(gen_erdos_renyi(50, 0.0, 1).edge_count() == 0);
    CHECK(gen_erdos_renyi(10, 1.0, 1).edge_count() == 45);

    const std::int64_t n = 2000;
    const double p = 0.005;
    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    double mean = 0;
    const int seeds = 50;
    for (int s = 1; s <= seeds; ++s)
        mean += static_cast<double>(gen_erdos_renyi(n, p, static_cast<std::uint64_t>(s)).edge_count());
    mean /= seeds;
    const double sigma_of_mean = std::sqrt(pairs * p * (1 - p) / seeds);
    CHECK(std::abs(mean - pairs * p) < 3.0 * sigma_of_mean);
}

TEST_CASE("molloy-reed realizes exact degrees when no stubs collide") {
    SUBCASE("all degrees two gives a union of cycles") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const MolloyReedResult r = gen_molloy_reed({2, 2, 2, 2, 2}, seed);
            if (r.dropped_self_loops == 0 && r.collapsed_multi_edges == 0)
                for (NodeId u = 0; u < 5; ++u)
                    CHECK(r.graph.degree(u) == 2);
        }
    }
    SUBCASE("the only simple realization of [3,1,1,1] is the star") {
        int clean = 0;
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const MolloyReedResult r = gen_molloy_reed({3, 1, 1, 1}, seed);
            if (r.dropped_self_loops == 0 && r.collapsed_multi_edges == 0) {
                ++clean;
                CHECK(r.graph.degree(0) == 3);
                CHECK(r.graph.edge_count() == 3);
            }
        }
        CHECK(clean > 0); // collision-free pairings do occur
    }
    SUBCASE("odd degree sums are rejected") {
        CHECK_THROWS_AS(gen_molloy_reed({3, 1, 1}, 1), std::invalid_argument);
    }
}

TEST_CASE("molloy-reed erasure on the karate sequence matches its expectation") {
    const Graph karate = test::karate_graph();
    std::vector<std::int64_t> degrees(karate.degrees().begin(), karate.degrees().end());
    const std::int64_t stub_total = 2 * karate.edge_count();
    std::int64_t deviated = 0;
    std::int64_t self_loops = 0;
    const int seeds = 50;
    for (int s = 1; s <= seeds; ++s) {
        const MolloyReedResult r = gen_molloy_reed(degrees, static_cast<std::uint64_t>(s));
        CHECK(2 * r.graph.edge_count() <= stub_total); // erasure only removes
        CHECK(deviated + 2 * (r.dropped_self_loops + r.collapsed_multi_edges) ==
              [&] { // reported erasure accounts for every missing stub
                  std::int64_t d = deviated;
                  for (NodeId u = 0; u < karate.node_count(); ++u)
                      d += std::abs(static_cast<std::int64_t>(r.graph.degree(u)) -
                                    degrees[static_cast<std::size_t>(u)]);
                  return d;
              }());
        self_loops += r.dropped_self_loops;
        for (NodeId u = 0; u < karate.node_count(); ++u)
            deviated += std::abs(static_cast<std::int64_t>(r.graph.degree(u)) -
                                 degrees[static_cast<std::size_t>(u)]);
    }
    // measured stub erasure on this hub-heavy sequence sits near 15%;
    // expected self-loops are sum C(d_i,2) / (2m-1) = 528/155 per draw
    const double rate = static_cast<double>(deviated) /
                        static_cast<double>(stub_total * seeds);
    CHECK(rate > 0.08);
    CHECK(rate < 0.22);
    CHECK(std::abs(static_cast<double>(self_loops) / seeds - 528.0 / 155.0) < 1.0);
}

TEST_CASE("chung-lu follows the expected-degree law") {
    SUBCASE("all-zero degrees give the empty graph") {
        const Graph g = gen_chung_lu({0, 0, 0, 0}, 1);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("two nodes of degree one connect half the time") {
        int present = 0;
        const int seeds = 1000;
        for (int s = 1; s <= seeds; ++s)
            present += gen_chung_lu({1, 1}, static_cast<std::uint64_t>(s)).edge_count() > 0;
        const double sigma = std::sqrt(0.25 * seeds);
        CHECK(std::abs(present - seeds / 2.0) < 3.0 * sigma);
    }
    SUBCASE("expected total edge count matches the empirical mean") {
        Rng deg_rng(40);
        std::vector<std::int64_t> degrees;
        for (int i = 0; i < 50; ++i)
            degrees.push_back(1 + static_cast<std::int64_t>(deg_rng.next_index(8)));
        double expected = 0, var = 0;
        const double total = static_cast<double>(
            std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0}));
        for (std::size_t i = 0; i < degrees.size(); ++i)
            for (std::size_t j = i + 1; j < degrees.size(); ++j) {
                const double p = std::min(
                    1.0, static_cast<double>(degrees[i] * degrees[j]) / total);
                expected += p;
                var += p * (1.0 - p);
            }
        const int seeds = 200;
        double mean = 0;
        for (int s = 1; s <= seeds; ++s)
            mean += static_cast<double>(
                gen_chung_lu(degrees, static_cast<std::uint64_t>(s)).edge_count());
        mean /= seeds;
        CHECK(std::abs(mean - expected) < 3.0 * std::sqrt(var / seeds));
    }
    SUBCASE("per-node mean degree tracks the capped-model expectation on karate") {
        const Graph karate = test::karate_graph();
        std::vector<std::int64_t> degrees(karate.degrees().begin(), karate.degrees().end());
        const double total = 156.0;
        const int seeds = 100;
        std::vector<double> mean(degrees.size(), 0.0);
        for (int s = 1; s <= seeds; ++s) {
            const Graph g = gen_chung_lu(degrees, static_cast<std::uint64_t>(s));
            for (std::size_t u = 0; u < degrees.size(); ++u)
                mean[u] += static_cast<double>(g.degree(static_cast<NodeId>(u)));
        }
        for (std::size_t u = 0; u < degrees.size(); ++u) {
            mean[u] /= seeds;
            // exact expectation and variance of the capped Bernoulli sums;
            // hubs fall short of their raw target because p is capped at 1
            double expected = 0, var = 0;
            for (std::size_t j = 0; j < degrees.size(); ++j) {
                if (j == u)
                    continue;
                const double p = std::min(
                    1.0, static_cast<double>(degrees[u] * degrees[j]) / total);
                expected += p;
                var += p * (1.0 - p);
            }
            const double sigma_of_mean = std::sqrt(var / seeds);
            CHECK(std::abs(mean[u] - expected) < 3.0 * sigma_of_mean + 0.05);
            // away from the cap the expectation is the target itself
            if (degrees[u] * karate.max_degree() < total)
                CHECK(expected ==
                      doctest::Approx(static_cast<double>(degrees[u]) *
                                      (total - static_cast<double>(degrees[u])) / total));
        }
    }
}

TEST_CASE("watts-strogatz lattice and rewiring behavior") {
    SUBCASE("beta = 0 keeps the ring lattice at clustering one half") {
        const WattsStrogatzParams params = fit_watts_strogatz(50, 4, 0.5);
        CHECK(params.ring_degree == 4);
        CHECK(params.beta == 0.0);
        const Graph ring = gen_watts_strogatz(50, 4, 0.5, 1);
        CHECK(ring.edge_count() == 100);
        const SubgraphCounts c = count_all(ring);
        CHECK(3.0 * static_cast<double>(c.triangles) / static_cast<double>(c.wedges) ==
              doctest::Approx(0.5));
    }
    SUBCASE("requesting more clustering than the lattice flags a warning") {
        const WattsStrogatzParams params = fit_watts_strogatz(50, 4, 0.9);
        CHECK(params.beta == 0.0);
        CHECK(params.clustering_unreachable);
    }
    SUBCASE("full rewiring reaches near-random clustering") {
        const Graph g = gen_watts_strogatz(500, 4, 0.0, 7);
        const SubgraphCounts c = count_all(g);
        const double clustering =
            c.wedges > 0 ? 3.0 * static_cast<double>(c.triangles) /
                               static_cast<double>(c.wedges)
                         : 0.0;
        CHECK(clustering < 0.1);
    }
    SUBCASE("the fitted beta lands near the requested clustering") {
        const WattsStrogatzParams params = fit_watts_strogatz(200, 4, 0.25);
        CHECK(params.beta == doctest::Approx(1.0 - std::cbrt(0.5)).epsilon(1e-12));
        double mean = 0;
        const int seeds = 50;
        for (int s = 1; s <= seeds; ++s) {
            const Graph g = gen_watts_strogatz(200, 4, 0.25, static_cast<std::uint64_t>(s));
            const SubgraphCounts c = count_all(g);
            mean += 3.0 * static_cast<double>(c.triangles) / static_cast<double>(c.wedges);
        }
        mean /= seeds;
        CHECK(std::abs(mean - 0.25) < 0.05);
    }
}

TEST_CASE("barabasi-albert growth accounting") {
    SUBCASE("one edge per arrival grows a tree") {
        const Graph g = gen_barabasi_albert(200, 1, 3);
        CHECK(g.edge_count() == 199);
        CHECK(largest_component(g).size() == 200);
    }
    SUBCASE("edge count is exact") {
        const std::int64_t n = 300, epn = 3;
        const Graph g = gen_barabasi_albert(n, epn, 5);
        const std::int64_t clique = (epn + 1) * epn / 2;
        CHECK(g.edge_count() == clique + (n - (epn + 1)) * epn);
    }
    SUBCASE("degree tail exponent lands near three") {
        const Graph g = gen_barabasi_albert(5000, 2, 11);
        // the exponent of the tail: restrict to degrees >= 10, where the
        // preferential-attachment distribution is in its power-law regime
        std::vector<std::int64_t> tail;
        for (NodeId d : g.degrees())
            if (d >= 10)
                tail.push_back(d);
        REQUIRE(tail.size() > 100);
        const Flagged gamma = power_law_exponent_from_degrees(tail);
        CHECK(gamma.defined);
        CHECK(std::abs(gamma.value - 3.0) < 0.3);
    }
}

TEST_CASE("parameter fitting from an input graph") {
    const Graph karate = test::karate_graph();
    const BaselineFit fit = fit_baseline_params(karate);
    CHECK(fit.er_p == doctest::Approx(78.0 / 561.0));
    CHECK(fit.degrees == std::vector<std::int64_t>(karate.degrees().begin(),
                                                   karate.degrees().end()));
    CHECK(fit.ws_mean_degree == doctest::Approx(156.0 / 34.0));
    CHECK(fit.ba_edges_per_node == 2);

    // 4-regular graph: round(m/n) = round(2) = 2
    const Graph ring = gen_watts_strogatz(30, 4, 0.5, 1);
    CHECK(fit_baseline_params(ring).ba_edges_per_node == 2);
}

TEST_CASE("all baselines are deterministic in the seed") {
    const Graph karate = test::karate_graph();
    for (const char* tag : {"er", "mr", "cl", "ws", "ba"}) {
        const BaselineOutcome a = generate_fitted(baseline_from_tag(tag), karate, 9);
        const BaselineOutcome b = generate_fitted(baseline_from_tag(tag), karate, 9);
        CHECK(a.graph == b.graph);
    }
}
