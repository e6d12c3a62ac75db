#include "ggen/delta.hpp"

#include <stdexcept>

#include "ggen/counts.hpp"

namespace ggen {

DeltaEngine::DeltaEngine(NodeId n)
    : common_(static_cast<std::size_t>(n), 0),
      walk3_(static_cast<std::size_t>(n), 0),
      adjacent_(static_cast<std::size_t>(n), 0) {
    touched_common_.reserve(static_cast<std::size_t>(n));
    touched_walk3_.reserve(static_cast<std::size_t>(n));
}

void DeltaEngine::compute(const Graph& g, NodeId u, DeltaBatch& out) {
    const NodeId n = g.node_count();
    if (u < 0 || u >= n)
        throw std::out_of_range("pivot out of range");

    const std::size_t nz = static_cast<std::size_t>(n);
    out.pivot = u;
    out.edges.assign(nz, 0);
    out.wedges.assign(nz, 0);
    out.claws.assign(nz, 0);
    out.crosses.assign(nz, 0);
    out.triangles.assign(nz, 0);
    out.squares.assign(nz, 0);

    const auto& nu = g.neighbors(u);
    for (NodeId v : nu)
        adjacent_[static_cast<std::size_t>(v)] = 1;

    // common = A * A_:u
    touched_common_.clear();
    for (NodeId v : nu) {
        for (NodeId w : g.neighbors(v)) {
            auto& c = common_[static_cast<std::size_t>(w)];
            if (c == 0)
                touched_common_.push_back(w);
            ++c;
        }
    }
    // walk3 = A * common, computed over the support of common
    touched_walk3_.clear();
    for (NodeId v : touched_common_) {
        const std::int64_t cv = common_[static_cast<std::size_t>(v)];
        for (NodeId w : g.neighbors(v)) {
            auto& p = walk3_[static_cast<std::size_t>(w)];
            if (p == 0)
                touched_walk3_.push_back(w);
            p += cv;
        }
    }

    const std::int64_t du = g.degree(u);
    const std::int64_t add_claws_u = choose2(du);
    const std::int64_t add_crosses_u = choose3(du);
    const std::int64_t rem_claws_u = choose2(du - 1);
    const std::int64_t rem_crosses_u = choose3(du - 1);

    for (NodeId w = 0; w < n; ++w) {
        if (w == u)
            continue;
        const std::size_t wz = static_cast<std::size_t>(w);
        const std::int64_t dw = g.degree(w);
        if (adjacent_[wz]) {
            // removal; star terms use the degrees after the removal
            out.edges[wz] = -1;
            out.wedges[wz] = -(dw + du) + 2;
            out.claws[wz] = -(choose2(dw - 1) + rem_claws_u);
            out.crosses[wz] = -(choose3(dw - 1) + rem_crosses_u);
            out.triangles[wz] = -common_[wz];
            out.squares[wz] = -walk3_[wz] + (dw + du - 1);
        } else {
            out.edges[wz] = 1;
            out.wedges[wz] = dw + du;
            out.claws[wz] = choose2(dw) + add_claws_u;
            out.crosses[wz] = choose3(dw) + add_crosses_u;
            out.triangles[wz] = common_[wz];
            out.squares[wz] = walk3_[wz];
        }
    }

    for (NodeId v : nu)
        adjacent_[static_cast<std::size_t>(v)] = 0;
    for (NodeId v : touched_common_)
        common_[static_cast<std::size_t>(v)] = 0;
    for (NodeId v : touched_walk3_)
        walk3_[static_cast<std::size_t>(v)] = 0;
}

namespace {

DeltaBatch full_batch(const Graph& g, NodeId u) {
    DeltaEngine engine(g.node_count());
    DeltaBatch batch;
    engine.compute(g, u, batch);
    return batch;
}

} // namespace

std::vector<std::int64_t> delta_edges(const Graph& g, NodeId u) { return full_batch(g, u).edges; }
std::vector<std::int64_t> delta_wedges(const Graph& g, NodeId u) { return full_batch(g, u).wedges; }
std::vector<std::int64_t> delta_claws(const Graph& g, NodeId u) { return full_batch(g, u).claws; }
std::vector<std::int64_t> delta_crosses(const Graph& g, NodeId u) { return full_batch(g, u).crosses; }
std::vector<std::int64_t> delta_triangles(const Graph& g, NodeId u) { return full_batch(g, u).triangles; }
std::vector<std::int64_t> delta_squares(const Graph& g, NodeId u) { return full_batch(g, u).squares; }

} // namespace ggen
