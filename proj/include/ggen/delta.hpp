// Incremental statistic updates: for a pivot u, the change in each of
// the six counts caused by toggling {u,w}, for every candidate w, in one
// O(m + n) pass. Star deltas come from exact binomial differences of the
// endpoint degrees; triangle and square deltas from one shared
// adjacency-column product and its second application (A * (A * A_:u)),
// never materializing A^2.
#ifndef GGEN_DELTA_HPP
#define GGEN_DELTA_HPP

#include <cstdint>
#include <vector>

#include "ggen/graph.hpp"

namespace ggen {

// values[w] = S(G +- {u,w}) - S(G); the entry at w = pivot is meaningless.
struct DeltaBatch {
    NodeId pivot = -1;
    std::vector<std::int64_t> edges;
    std::vector<std::int64_t> wedges;
    std::vector<std::int64_t> claws;
    std::vector<std::int64_t> crosses;
    std::vector<std::int64_t> triangles;
    std::vector<std::int64_t> squares;

    const std::vector<std::int64_t>& by_stat(int s) const {
        switch (s) {
        case 0: return edges;
        case 1: return wedges;
        case 2: return claws;
        case 3: return crosses;
        case 4: return triangles;
        default: return squares;
        }
    }
};

// Owns the scratch vectors so repeated calls allocate nothing.
class DeltaEngine {
public:
    explicit DeltaEngine(NodeId n);

    // All six delta vectors for pivot u; intermediate products shared.
    void compute(const Graph& g, NodeId u, DeltaBatch& out);

private:
    std::vector<std::int64_t> common_; // (A A_:u)_w = |N(u) ∩ N(w)|
    std::vector<std::int64_t> walk3_;  // (A (A A_:u))_w
    std::vector<NodeId> touched_common_;
    std::vector<NodeId> touched_walk3_;
    std::vector<std::uint8_t> adjacent_;
};

// Single-statistic variants of the batch computation (same closed forms).
std::vector<std::int64_t> delta_edges(const Graph& g, NodeId u);
std::vector<std::int64_t> delta_wedges(const Graph& g, NodeId u);
std::vector<std::int64_t> delta_claws(const Graph& g, NodeId u);
std::vector<std::int64_t> delta_crosses(const Graph& g, NodeId u);
std::vector<std::int64_t> delta_triangles(const Graph& g, NodeId u);
std::vector<std::int64_t> delta_squares(const Graph& g, NodeId u);

} // namespace ggen

#endif
