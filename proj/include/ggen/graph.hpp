// Mutable simple undirected graph: sorted adjacency vectors for cheap
// ordered iteration plus a packed-edge hash set for O(1) membership.
// Degrees are maintained alongside every mutation.
#ifndef GGEN_GRAPH_HPP
#define GGEN_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ggen {

using NodeId = std::int32_t;

class Graph {
public:
    // n >= 1 nodes, zero edges.
    explicit Graph(NodeId n);

    NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
    std::int64_t edge_count() const { return m_; }

    bool has_edge(NodeId u, NodeId w) const;

    // Flips the presence of {u,w}; returns the state after the flip.
    // Self-loops and out-of-range nodes are rejected.
    bool toggle_edge(NodeId u, NodeId w);

    // Inserts {u,w} if absent; returns true if the edge was added.
    bool add_edge(NodeId u, NodeId w);

    NodeId degree(NodeId u) const { return degrees_[static_cast<std::size_t>(u)]; }
    const std::vector<NodeId>& degrees() const { return degrees_; }
    const std::vector<NodeId>& neighbors(NodeId u) const { return adj_[static_cast<std::size_t>(u)]; }

    // All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    NodeId max_degree() const;

    bool operator==(const Graph& other) const;

private:
    void check_pair(NodeId u, NodeId w) const;
    static std::uint64_t edge_key(NodeId u, NodeId w);

    std::vector<std::vector<NodeId>> adj_;
    std::vector<NodeId> degrees_;
    std::unordered_set<std::uint64_t> edge_set_;
    std::int64_t m_ = 0;
};

// Mapping from original file ids to compact 0..n-1 ids, in first-seen order.
struct LoadResult {
    Graph graph;
    std::vector<std::pair<std::int64_t, NodeId>> id_map; // (original, compact)
};

// Whitespace-separated integer pairs, '%'/'#' comments ignored. A
// "% n <count>" comment line declares the node count, in which case ids
// are taken literally; otherwise ids are compacted in first-seen order.
// Self-loops are dropped, duplicate/reversed edges merged.
LoadResult load_edge_list(std::istream& in);
LoadResult load_edge_list_file(const std::string& path);

// Writes a "% n <count>" header followed by one "u v" line per edge,
// u < v, sorted. Round-trips through load_edge_list.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

} // namespace ggen

#endif
