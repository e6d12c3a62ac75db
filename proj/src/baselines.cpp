#include "ggen/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ggen/counts.hpp"
#include "ggen/rng.hpp"

namespace ggen {

const char* baseline_tag(BaselineModel m) {
    switch (m) {
    case BaselineModel::erdos_renyi: return "er";
    case BaselineModel::molloy_reed: return "mr";
    case BaselineModel::chung_lu: return "cl";
    case BaselineModel::watts_strogatz: return "ws";
    case BaselineModel::barabasi_albert: return "ba";
    }
    return "?";
}

BaselineModel baseline_from_tag(const std::string& tag) {
    if (tag == "er") return BaselineModel::erdos_renyi;
    if (tag == "mr") return BaselineModel::molloy_reed;
    if (tag == "cl") return BaselineModel::chung_lu;
    if (tag == "ws") return BaselineModel::watts_strogatz;
    if (tag == "ba") return BaselineModel::barabasi_albert;
    throw std::invalid_argument("unknown generator tag: " + tag);
}

Graph gen_erdos_renyi(std::int64_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability outside [0,1]");
    Graph g(static_cast<NodeId>(n));
    if (p == 0.0)
        return g;
    Rng rng(seed);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId w = u + 1; w < g.node_count(); ++w)
            if (p >= 1.0 || rng.next_unit() < p)
                g.add_edge(u, w);
    return g;
}

MolloyReedResult gen_molloy_reed(const std::vector<std::int64_t>& degrees, std::uint64_t seed) {
    std::int64_t total = 0;
    for (std::int64_t d : degrees) {
        if (d < 0)
            throw std::invalid_argument("negative degree");
        total += d;
    }
    if (total % 2 != 0)
        throw std::invalid_argument("degree sum must be even");

    std::vector<NodeId> stubs;
    stubs.reserve(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < degrees.size(); ++i)
        for (std::int64_t j = 0; j < degrees[i]; ++j)
            stubs.push_back(static_cast<NodeId>(i));

    Rng rng(seed);
    rng.shuffle(stubs);

    MolloyReedResult r{Graph(static_cast<NodeId>(degrees.size())), 0, 0};
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const NodeId a = stubs[i];
        const NodeId b = stubs[i + 1];
        if (a == b) {
            ++r.dropped_self_loops;
            continue;
        }
        if (!r.graph.add_edge(a, b))
            ++r.collapsed_multi_edges;
    }
    return r;
}

Graph gen_chung_lu(const std::vector<std::int64_t>& degrees, std::uint64_t seed) {
    std::int64_t total = 0;
    for (std::int64_t d : degrees) {
        if (d < 0)
            throw std::invalid_argument("negative degree");
        total += d;
    }
    Graph g(static_cast<NodeId>(degrees.size()));
    if (total == 0)
        return g;
    Rng rng(seed);
    const double denom = static_cast<double>(total);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const double du = static_cast<double>(degrees[static_cast<std::size_t>(u)]);
        if (du == 0)
            continue;
        for (NodeId w = u + 1; w < g.node_count(); ++w) {
            const double dw = static_cast<double>(degrees[static_cast<std::size_t>(w)]);
            if (dw == 0)
                continue;
            const double p = std::min(1.0, du * dw / denom);
            if (rng.next_unit() < p)
                g.add_edge(u, w);
        }
    }
    return g;
}

WattsStrogatzParams fit_watts_strogatz(std::int64_t n, double mean_degree,
                                       double target_clustering) {
    if (mean_degree < 2)
        throw std::invalid_argument("Watts-Strogatz needs mean degree >= 2");
    WattsStrogatzParams p;
    std::int64_t k = 2 * static_cast<std::int64_t>(std::llround(mean_degree / 2.0));
    k = std::max<std::int64_t>(k, 2);
    if (k > n - 1)
        k = (n - 1) - ((n - 1) % 2); // lattice cannot exceed n-1 neighbors
    p.ring_degree = k;
    p.lattice_clustering = k > 2 ? 3.0 * (k - 2) / (4.0 * (k - 1)) : 0.0;
    if (target_clustering >= p.lattice_clustering || p.lattice_clustering == 0.0) {
        p.beta = 0.0;
        p.clustering_unreachable = target_clustering > p.lattice_clustering;
        return p;
    }
    p.beta = 1.0 - std::cbrt(target_clustering / p.lattice_clustering);
    p.beta = std::clamp(p.beta, 0.0, 1.0);
    return p;
}

Graph gen_watts_strogatz(std::int64_t n, double mean_degree, double target_clustering,
                         std::uint64_t seed) {
    const WattsStrogatzParams params = fit_watts_strogatz(n, mean_degree, target_clustering);
    Graph g(static_cast<NodeId>(n));
    const std::int64_t half = params.ring_degree / 2;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t d = 1; d <= half; ++d)
            g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>((i + d) % n));

    if (params.beta <= 0.0)
        return g;

    Rng rng(seed);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t d = 1; d <= half; ++d) {
            const NodeId u = static_cast<NodeId>(i);
            const NodeId v = static_cast<NodeId>((i + d) % n);
            if (rng.next_unit() >= params.beta)
                continue;
            if (g.degree(u) >= n - 1)
                continue; // already connected to everyone
            // draw a fresh endpoint, avoiding self-loops and duplicates
            NodeId w;
            do {
                w = static_cast<NodeId>(rng.next_index(static_cast<std::uint64_t>(n)));
            } while (w == u || g.has_edge(u, w));
            if (g.has_edge(u, v))
                g.toggle_edge(u, v);
            g.add_edge(u, w);
        }
    }
    return g;
}

Graph gen_barabasi_albert(std::int64_t n, std::int64_t edges_per_node, std::uint64_t seed) {
    if (edges_per_node < 1 || edges_per_node >= n)
        throw std::invalid_argument("edges_per_node must lie in [1, n)");
    Graph g(static_cast<NodeId>(n));
    const std::int64_t seed_size = edges_per_node + 1;

    std::vector<NodeId> endpoints; // one entry per incident edge end
    for (NodeId u = 0; u < seed_size; ++u)
        for (NodeId w = static_cast<NodeId>(u + 1); w < seed_size; ++w) {
            g.add_edge(u, w);
            endpoints.push_back(u);
            endpoints.push_back(w);
        }

    Rng rng(seed);
    std::vector<NodeId> chosen;
    for (NodeId v = static_cast<NodeId>(seed_size); v < n; ++v) {
        chosen.clear();
        while (static_cast<std::int64_t>(chosen.size()) < edges_per_node) {
            const NodeId target =
                endpoints[static_cast<std::size_t>(rng.next_index(endpoints.size()))];
            if (std::find(chosen.begin(), chosen.end(), target) != chosen.end())
                continue; // no duplicate targets per arrival
            chosen.push_back(target);
        }
        for (NodeId target : chosen) {
            g.add_edge(v, target);
            endpoints.push_back(v);
            endpoints.push_back(target);
        }
    }
    return g;
}

BaselineFit fit_baseline_params(const Graph& g0) {
    BaselineFit fit;
    const std::int64_t n = g0.node_count();
    const std::int64_t m = g0.edge_count();
    const std::int64_t pairs = n * (n - 1) / 2;
    fit.er_p = pairs > 0 ? static_cast<double>(m) / static_cast<double>(pairs) : 0.0;
    fit.degrees.assign(g0.degrees().begin(), g0.degrees().end());
    fit.ws_mean_degree = n > 0 ? 2.0 * static_cast<double>(m) / static_cast<double>(n) : 0.0;
    const StarCounts stars = count_stars(g0);
    const std::int64_t t = count_triangles(g0);
    fit.ws_clustering =
        stars.wedges > 0 ? 3.0 * static_cast<double>(t) / static_cast<double>(stars.wedges) : 0.0;
    fit.ba_edges_per_node =
        std::max<std::int64_t>(1, std::llround(static_cast<double>(m) / static_cast<double>(n)));
    return fit;
}

BaselineOutcome generate_fitted(BaselineModel model, const Graph& g0, std::uint64_t seed) {
    const BaselineFit fit = fit_baseline_params(g0);
    const std::int64_t n = g0.node_count();
    switch (model) {
    case BaselineModel::erdos_renyi:
        return {gen_erdos_renyi(n, fit.er_p, seed), {}};
    case BaselineModel::molloy_reed: {
        MolloyReedResult r = gen_molloy_reed(fit.degrees, seed);
        std::vector<std::string> notes;
        if (r.dropped_self_loops > 0)
            notes.push_back("mr_dropped_self_loops=" + std::to_string(r.dropped_self_loops));
        if (r.collapsed_multi_edges > 0)
            notes.push_back("mr_collapsed_multi_edges=" + std::to_string(r.collapsed_multi_edges));
        return {std::move(r.graph), std::move(notes)};
    }
    case BaselineModel::chung_lu:
        return {gen_chung_lu(fit.degrees, seed), {}};
    case BaselineModel::watts_strogatz: {
        const WattsStrogatzParams p = fit_watts_strogatz(n, fit.ws_mean_degree, fit.ws_clustering);
        std::vector<std::string> notes;
        if (p.clustering_unreachable)
            notes.push_back("ws_target_clustering_above_lattice");
        notes.push_back("ws_fit_approximation=(1-beta)^3");
        return {gen_watts_strogatz(n, fit.ws_mean_degree, fit.ws_clustering, seed),
                std::move(notes)};
    }
    case BaselineModel::barabasi_albert:
        return {gen_barabasi_albert(n, fit.ba_edges_per_node, seed), {}};
    }
    throw std::logic_error("unhandled baseline model");
}

} // namespace ggen
