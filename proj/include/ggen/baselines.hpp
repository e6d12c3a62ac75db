// Reference generators the guided generator is compared against:
// Erdős–Rényi, Molloy–Reed (configuration model), Chung–Lu,
// Watts–Strogatz, Barabási–Albert, plus parameter fitting from an
// input graph. All deterministic given the seed.
#ifndef GGEN_BASELINES_HPP
#define GGEN_BASELINES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ggen/graph.hpp"

namespace ggen {

enum class BaselineModel { erdos_renyi, molloy_reed, chung_lu, watts_strogatz, barabasi_albert };

const char* baseline_tag(BaselineModel m); // "er", "mr", "cl", "ws", "ba"
BaselineModel baseline_from_tag(const std::string& tag);

Graph gen_erdos_renyi(std::int64_t n, double p, std::uint64_t seed);

struct MolloyReedResult {
    Graph graph;
    std::int64_t dropped_self_loops = 0;
    std::int64_t collapsed_multi_edges = 0;
};

// Random half-edge pairing; colliding stubs are erased (dropped
// self-loops, collapsed multi-edges) and the erasure is reported.
MolloyReedResult gen_molloy_reed(const std::vector<std::int64_t>& degrees, std::uint64_t seed);

// Edge {i,j} present independently with probability min(1, d_i d_j / sum d).
Graph gen_chung_lu(const std::vector<std::int64_t>& degrees, std::uint64_t seed);

struct WattsStrogatzParams {
    std::int64_t ring_degree = 0; // even k of the start lattice
    double beta = 0;              // rewiring probability
    double lattice_clustering = 0;
    bool clustering_unreachable = false; // target above c(0), beta forced to 0
};

// beta solved from c(beta) = c(0) (1-beta)^3 with c(0) = 3(k-2)/(4(k-1)).
WattsStrogatzParams fit_watts_strogatz(std::int64_t n, double mean_degree,
                                       double target_clustering);

Graph gen_watts_strogatz(std::int64_t n, double mean_degree, double target_clustering,
                         std::uint64_t seed);

// Preferential attachment from a clique seed of edges_per_node + 1 nodes.
Graph gen_barabasi_albert(std::int64_t n, std::int64_t edges_per_node, std::uint64_t seed);

struct BaselineFit {
    double er_p = 0;
    std::vector<std::int64_t> degrees;
    double ws_mean_degree = 0;
    double ws_clustering = 0;
    std::int64_t ba_edges_per_node = 1;
};

BaselineFit fit_baseline_params(const Graph& g0);

struct BaselineOutcome {
    Graph graph;
    std::vector<std::string> notes; // e.g. Molloy–Reed erasure counts
};

// Fits parameters from g0 and runs the chosen model.
BaselineOutcome generate_fitted(BaselineModel model, const Graph& g0, std::uint64_t seed);

} // namespace ggen

#endif
