#include "ggen/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ggen/errors.hpp"

namespace ggen {

Graph::Graph(NodeId n) {
    if (n < 1)
        throw std::invalid_argument("graph needs at least one node");
    adj_.resize(static_cast<std::size_t>(n));
    degrees_.assign(static_cast<std::size_t>(n), 0);
}

std::uint64_t Graph::edge_key(NodeId u, NodeId w) {
    if (u > w)
        std::swap(u, w);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(w));
}

void Graph::check_pair(NodeId u, NodeId w) const {
    const NodeId n = node_count();
    if (u < 0 || u >= n || w < 0 || w >= n)
        throw std::out_of_range("node id out of range");
    if (u == w)
        throw std::invalid_argument("self-loops are not allowed");
}

bool Graph::has_edge(NodeId u, NodeId w) const {
    check_pair(u, w);
    return edge_set_.count(edge_key(u, w)) != 0;
}

bool Graph::toggle_edge(NodeId u, NodeId w) {
    check_pair(u, w);
    const std::uint64_t key = edge_key(u, w);
    auto it = edge_set_.find(key);
    if (it == edge_set_.end()) {
        edge_set_.insert(key);
        auto& nu = adj_[static_cast<std::size_t>(u)];
        auto& nw = adj_[static_cast<std::size_t>(w)];
        nu.insert(std::lower_bound(nu.begin(), nu.end(), w), w);
        nw.insert(std::lower_bound(nw.begin(), nw.end(), u), u);
        ++degrees_[static_cast<std::size_t>(u)];
        ++degrees_[static_cast<std::size_t>(w)];
        ++m_;
        return true;
    }
    edge_set_.erase(it);
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto& nw = adj_[static_cast<std::size_t>(w)];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), w));
    nw.erase(std::lower_bound(nw.begin(), nw.end(), u));
    --degrees_[static_cast<std::size_t>(u)];
    --degrees_[static_cast<std::size_t>(w)];
    --m_;
    return false;
}

bool Graph::add_edge(NodeId u, NodeId w) {
    check_pair(u, w);
    if (edge_set_.count(edge_key(u, w)))
        return false;
    toggle_edge(u, w);
    return true;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

NodeId Graph::max_degree() const {
    NodeId best = 0;
    for (NodeId d : degrees_)
        best = std::max(best, d);
    return best;
}

bool Graph::operator==(const Graph& other) const {
    return adj_ == other.adj_;
}

namespace {

// Recognizes a "% n 34" / "# n=34" style header inside a comment line.
bool parse_count_header(const std::string& line, std::int64_t& n_out) {
    std::size_t i = 1; // past '%'/'#'
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
    if (i >= line.size() || (line[i] != 'n' && line[i] != 'N'))
        return false;
    ++i;
    while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == '='))
        ++i;
    if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i])))
        return false;
    std::int64_t n = 0;
    for (; i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])); ++i)
        n = n * 10 + (line[i] - '0');
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
    if (i != line.size())
        return false;
    n_out = n;
    return true;
}

} // namespace

LoadResult load_edge_list(std::istream& in) {
    struct RawEdge {
        std::int64_t a, b;
        long line;
    };
    std::int64_t declared_n = -1;
    long header_line = 0;
    std::vector<RawEdge> raw_edges;
    std::string line;
    long line_no = 0;
    bool saw_anything = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos)
            continue;
        if (line[start] == '%' || line[start] == '#') {
            std::int64_t n = 0;
            if (parse_count_header(line.substr(start), n)) {
                declared_n = n;
                header_line = line_no;
                saw_anything = true;
            }
            continue;
        }
        std::istringstream ls(line);
        std::int64_t a = 0, b = 0;
        if (!(ls >> a >> b))
            throw ParseError("expected two integer node ids", line_no);
        if (a < 0 || b < 0)
            throw ParseError("negative node id", line_no);
        saw_anything = true;
        raw_edges.push_back({a, b, line_no}); // trailing columns (weights etc.) ignored
    }
    if (!saw_anything)
        throw ParseError("empty edge-list input", line_no == 0 ? 1 : line_no);

    std::vector<std::pair<std::int64_t, NodeId>> id_map;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw_edges.size());

    if (declared_n >= 0) {
        // Header present: ids are already compact.
        if (declared_n < 1)
            throw ParseError("declared node count must be at least 1", header_line);
        for (const RawEdge& e : raw_edges) {
            if (e.a >= declared_n || e.b >= declared_n)
                throw ParseError("node id exceeds declared node count", e.line);
            edges.emplace_back(static_cast<NodeId>(e.a), static_cast<NodeId>(e.b));
        }
        Graph g(static_cast<NodeId>(declared_n));
        for (auto [u, v] : edges)
            if (u != v)
                g.add_edge(u, v);
        return LoadResult{std::move(g), std::move(id_map)};
    }

    // No header: compact ids in first-seen order.
    std::unordered_map<std::int64_t, NodeId> remap;
    auto intern = [&](std::int64_t id) {
        auto it = remap.find(id);
        if (it != remap.end())
            return it->second;
        const NodeId compact = static_cast<NodeId>(remap.size());
        remap.emplace(id, compact);
        id_map.emplace_back(id, compact);
        return compact;
    };
    for (const RawEdge& e : raw_edges) {
        const NodeId ca = intern(e.a); // sequenced: first-seen order matters
        const NodeId cb = intern(e.b);
        edges.emplace_back(ca, cb);
    }
    if (remap.empty())
        throw ParseError("input declares no nodes", 1);

    Graph g(static_cast<NodeId>(remap.size()));
    for (auto [u, v] : edges)
        if (u != v)
            g.add_edge(u, v);
    return LoadResult{std::move(g), std::move(id_map)};
}

LoadResult load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << "% n " << g.node_count() << "\n";
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v)
                out << u << " " << v << "\n";
    if (!out)
        throw IoError("edge-list write failed");
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot create " + path);
    save_edge_list(g, out);
}

} // namespace ggen
