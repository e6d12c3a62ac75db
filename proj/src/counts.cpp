#include "ggen/counts.hpp"

#include <algorithm>

#include "ggen/errors.hpp"

namespace ggen {

const std::array<std::string, kStatCount>& stat_symbols() {
    static const std::array<std::string, kStatCount> symbols = {"m", "s", "z", "x", "t", "q"};
    return symbols;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw CountOverflow("subgraph count exceeds 64-bit range");
    return r;
}

static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw CountOverflow("subgraph count exceeds 64-bit range");
    return r;
}

std::int64_t choose2(std::int64_t k) {
    if (k < 2)
        return 0;
    return checked_mul(k, k - 1) / 2;
}

std::int64_t choose3(std::int64_t k) {
    if (k < 3)
        return 0;
    return checked_mul(checked_mul(k, k - 1), k - 2) / 6;
}

std::int64_t choose4(std::int64_t k) {
    if (k < 4)
        return 0;
    // k(k-1)(k-2)(k-3)/24; divide early so the product stays in range
    // for any degree a 64-bit count can support.
    const std::int64_t a = checked_mul(k, k - 1) / 2;       // C(k,2)
    const std::int64_t b = checked_mul(k - 2, k - 3) / 2;   // C(k-2,2)
    return checked_mul(a, b) / 6;
}

StarCounts count_stars(const Graph& g) {
    StarCounts c;
    std::int64_t degree_sum = 0;
    for (NodeId d32 : g.degrees()) {
        const std::int64_t d = d32;
        degree_sum = checked_add(degree_sum, d);
        c.wedges = checked_add(c.wedges, choose2(d));
        c.claws = checked_add(c.claws, choose3(d));
        c.crosses = checked_add(c.crosses, choose4(d));
    }
    c.edges = degree_sum / 2;
    return c;
}

std::int64_t count_triangles(const Graph& g) {
    std::int64_t closed = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto& nu = g.neighbors(u);
        for (NodeId v : nu) {
            if (v <= u)
                continue;
            const auto& nv = g.neighbors(v);
            // sorted-intersection size of N(u) and N(v)
            auto it_u = nu.begin();
            auto it_v = nv.begin();
            std::int64_t common = 0;
            while (it_u != nu.end() && it_v != nv.end()) {
                if (*it_u < *it_v)
                    ++it_u;
                else if (*it_v < *it_u)
                    ++it_v;
                else {
                    ++common;
                    ++it_u;
                    ++it_v;
                }
            }
            closed = checked_add(closed, common);
        }
    }
    return closed / 3; // each triangle seen from three edges
}

std::int64_t count_squares(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.node_count());
    std::vector<std::int64_t> walk2(n, 0);
    std::vector<NodeId> touched;
    std::int64_t closed4 = 0;

    for (NodeId w = 0; w < g.node_count(); ++w) {
        touched.clear();
        for (NodeId v : g.neighbors(w)) {
            for (NodeId y : g.neighbors(v)) {
                if (walk2[static_cast<std::size_t>(y)] == 0)
                    touched.push_back(y);
                ++walk2[static_cast<std::size_t>(y)];
            }
        }
        for (NodeId y : touched) {
            const std::int64_t c = walk2[static_cast<std::size_t>(y)];
            closed4 = checked_add(closed4, checked_mul(c, c));
            walk2[static_cast<std::size_t>(y)] = 0;
        }
    }

    const StarCounts stars = count_stars(g);
    // tr A^4 = 8q + 4s + 2m
    return (closed4 - 2 * stars.edges - 4 * stars.wedges) / 8;
}

SubgraphCounts count_all(const Graph& g) {
    const StarCounts stars = count_stars(g);
    SubgraphCounts c;
    c.edges = stars.edges;
    c.wedges = stars.wedges;
    c.claws = stars.claws;
    c.crosses = stars.crosses;
    c.triangles = count_triangles(g);
    c.squares = count_squares(g);
    return c;
}

SubgraphCounts oracle_counts(const Graph& g) {
    const NodeId n = g.node_count();
    if (n > 64)
        throw std::invalid_argument("oracle_counts is limited to n <= 64");

    SubgraphCounts c;
    auto adj = [&](NodeId a, NodeId b) { return g.has_edge(a, b); };

    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            if (adj(a, b))
                ++c.edges;

    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            for (NodeId d = b + 1; d < n; ++d) {
                const int e = int(adj(a, b)) + int(adj(a, d)) + int(adj(b, d));
                if (e == 3) {
                    ++c.triangles;
                    c.wedges += 3;
                } else if (e == 2) {
                    ++c.wedges;
                }
            }

    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            for (NodeId d = b + 1; d < n; ++d)
                for (NodeId e = d + 1; e < n; ++e) {
                    const NodeId quad[4] = {a, b, d, e};
                    // claw: one center attached to the other three
                    for (int center = 0; center < 4; ++center) {
                        bool all = true;
                        for (int leaf = 0; leaf < 4 && all; ++leaf)
                            if (leaf != center && !adj(quad[center], quad[leaf]))
                                all = false;
                        if (all)
                            ++c.claws;
                    }
                    // square: three cyclic orders of four labeled nodes
                    if (adj(a, b) && adj(b, d) && adj(d, e) && adj(e, a))
                        ++c.squares;
                    if (adj(a, b) && adj(b, e) && adj(e, d) && adj(d, a))
                        ++c.squares;
                    if (adj(a, d) && adj(d, b) && adj(b, e) && adj(e, a))
                        ++c.squares;
                }

    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            for (NodeId d = b + 1; d < n; ++d)
                for (NodeId e = d + 1; e < n; ++e)
                    for (NodeId f = e + 1; f < n; ++f) {
                        const NodeId quint[5] = {a, b, d, e, f};
                        for (int center = 0; center < 5; ++center) {
                            bool all = true;
                            for (int leaf = 0; leaf < 5 && all; ++leaf)
                                if (leaf != center && !adj(quint[center], quint[leaf]))
                                    all = false;
                            if (all)
                                ++c.crosses;
                        }
                    }

    return c;
}

} // namespace ggen
