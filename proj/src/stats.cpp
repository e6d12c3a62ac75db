#include "ggen/stats.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "ggen/linalg.hpp"
#include "ggen/rng.hpp"

namespace ggen {

const char* series_kind_name(SeriesKind k) {
    switch (k) {
    case SeriesKind::degree_ccdf: return "degree_ccdf";
    case SeriesKind::local_clustering: return "local_clustering";
    case SeriesKind::distance_cdf: return "distance_cdf";
    case SeriesKind::distance_logit: return "distance_logit";
    case SeriesKind::normalized_spectrum: return "normalized_spectrum";
    }
    return "?";
}

Flagged clustering_coefficient(const SubgraphCounts& counts) {
    if (counts.wedges <= 0)
        return {0, false, "no wedges"};
    return {3.0 * static_cast<double>(counts.triangles) / static_cast<double>(counts.wedges),
            true, ""};
}

Flagged gini_degree(const Graph& g) {
    std::vector<std::int64_t> d(g.degrees().begin(), g.degrees().end());
    std::sort(d.begin(), d.end());
    const double n = static_cast<double>(d.size());
    double sum = 0, weighted = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        sum += static_cast<double>(d[i]);
        weighted += static_cast<double>(i + 1) * static_cast<double>(d[i]);
    }
    if (sum == 0)
        return {0, false, "all degrees zero"};
    return {2.0 * weighted / (n * sum) - (n + 1.0) / n, true, ""};
}

Flagged power_law_exponent_from_degrees(const std::vector<std::int64_t>& degrees) {
    std::int64_t dmin = 0;
    for (std::int64_t d : degrees)
        if (d > 0 && (dmin == 0 || d < dmin))
            dmin = d;
    if (dmin == 0)
        return {0, false, "all degrees zero"};

    std::int64_t count = 0;
    double log_sum = 0;
    bool all_at_dmin = true;
    for (std::int64_t d : degrees) {
        if (d < dmin || d == 0)
            continue;
        ++count;
        log_sum += std::log(static_cast<double>(d) / (static_cast<double>(dmin) - 0.5));
        if (d != dmin)
            all_at_dmin = false;
    }
    const double gamma = 1.0 + static_cast<double>(count) / log_sum;
    if (all_at_dmin)
        return {gamma, false, "divergent"};
    return {gamma, true, ""};
}

Flagged power_law_exponent(const Graph& g) {
    std::vector<std::int64_t> d(g.degrees().begin(), g.degrees().end());
    return power_law_exponent_from_degrees(d);
}

Flagged assortativity(const Graph& g) {
    if (g.edge_count() == 0)
        return {0, false, "no edges"};
    // Pearson correlation over the 2m ordered edge-endpoint degree pairs.
    double sum_x = 0, sum_xx = 0, sum_xy = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const double du = static_cast<double>(g.degree(u));
        for (NodeId v : g.neighbors(u)) {
            const double dv = static_cast<double>(g.degree(v));
            sum_x += du;
            sum_xx += du * du;
            sum_xy += du * dv;
        }
    }
    const double pairs = 2.0 * static_cast<double>(g.edge_count());
    const double mean = sum_x / pairs;
    const double var = sum_xx / pairs - mean * mean;
    if (var <= 1e-12 * std::max(1.0, sum_xx / pairs))
        return {0, false, "zero degree variance over edges"};
    const double cov = sum_xy / pairs - mean * mean;
    return {cov / var, true, ""};
}

Flagged spectral_norm(const Graph& g, double tolerance, int max_iterations) {
    if (g.edge_count() == 0)
        return {0, false, "no edges"};
    const std::size_t n = static_cast<std::size_t>(g.node_count());
    LinearOperator apply = [&g, n](const std::vector<double>& in, std::vector<double>& out) {
        out.assign(n, 0.0);
        for (NodeId u = 0; u < g.node_count(); ++u) {
            double acc = 0;
            for (NodeId v : g.neighbors(u))
                acc += in[static_cast<std::size_t>(v)];
            out[static_cast<std::size_t>(u)] = acc;
        }
    };
    LanczosOptions opts;
    opts.tolerance = tolerance;
    opts.max_iterations = max_iterations;
    const LanczosResult r = lanczos_extreme(apply, n, WhichExtreme::largest_magnitude, opts);
    if (!r.converged)
        return {std::abs(r.eigenvalue), false, "not converged (partial estimate)"};
    return {std::abs(r.eigenvalue), true, ""};
}

std::vector<NodeId> largest_component(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comp_count = 0;
    std::vector<NodeId> queue;
    std::vector<std::int64_t> sizes;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        const int c = comp_count++;
        sizes.push_back(0);
        queue.clear();
        queue.push_back(s);
        comp[static_cast<std::size_t>(s)] = c;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId u = queue[head];
            ++sizes[static_cast<std::size_t>(c)];
            for (NodeId v : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = c;
                    queue.push_back(v);
                }
            }
        }
    }
    const int best = static_cast<int>(
        std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<NodeId> nodes;
    for (NodeId u = 0; u < n; ++u)
        if (comp[static_cast<std::size_t>(u)] == best)
            nodes.push_back(u);
    return nodes;
}

Flagged algebraic_connectivity(const Graph& g, double tolerance, int max_iterations) {
    const std::vector<NodeId> comp = largest_component(g);
    if (comp.size() < 2)
        return {0, false, "largest component has a single node"};
    const std::size_t nc = comp.size();
    std::vector<NodeId> index(static_cast<std::size_t>(g.node_count()), -1);
    for (std::size_t i = 0; i < nc; ++i)
        index[static_cast<std::size_t>(comp[i])] = static_cast<NodeId>(i);

    // Laplacian of the component, deflated against the constant vector.
    LinearOperator apply = [&](const std::vector<double>& in, std::vector<double>& out) {
        out.assign(nc, 0.0);
        std::vector<double> x = in;
        double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(nc);
        for (double& v : x)
            v -= mean;
        for (std::size_t i = 0; i < nc; ++i) {
            const NodeId u = comp[i];
            double acc = static_cast<double>(g.degree(u)) * x[i];
            for (NodeId v : g.neighbors(u))
                acc -= x[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])];
            out[i] = acc;
        }
        mean = std::accumulate(out.begin(), out.end(), 0.0) / static_cast<double>(nc);
        for (double& v : out)
            v -= mean;
    };
    LanczosOptions opts;
    opts.tolerance = tolerance;
    opts.max_iterations = max_iterations;
    opts.project = [nc](std::vector<double>& x) {
        const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(nc);
        for (double& v : x)
            v -= mean;
    };
    const LanczosResult r = lanczos_extreme(apply, nc, WhichExtreme::smallest_algebraic, opts);
    const bool partial_graph = nc < static_cast<std::size_t>(g.node_count());
    const std::string note = partial_graph ? "largest-component" : "";
    if (!r.converged)
        return {r.eigenvalue, false, "not converged (partial estimate)"};
    return {r.eigenvalue, true, note};
}

DistanceResult distances(const Graph& g, const DerivedOptions& opts) {
    DistanceResult res;
    res.cdf.kind = SeriesKind::distance_cdf;
    res.logit.kind = SeriesKind::distance_logit;
    if (g.edge_count() == 0) {
        res.diameter = {0, false, "no edges"};
        res.mean_distance = {0, false, "no edges"};
        res.component_coverage =
            g.node_count() > 0 ? 1.0 / static_cast<double>(g.node_count()) : 0.0;
        return res;
    }

    const std::vector<NodeId> comp = largest_component(g);
    const std::size_t nc = comp.size();
    res.component_coverage = static_cast<double>(nc) / static_cast<double>(g.node_count());

    std::vector<NodeId> sources = comp;
    if (static_cast<std::int64_t>(nc) > opts.exact_bfs_limit) {
        Rng rng(opts.sample_seed);
        rng.shuffle(sources);
        sources.resize(static_cast<std::size_t>(
            std::min<std::int64_t>(opts.bfs_sample_size, static_cast<std::int64_t>(nc))));
        res.sampled = true;
    }
    res.sources_used = static_cast<std::int64_t>(sources.size());

    std::vector<std::int64_t> histogram; // histogram[d] = ordered pairs at distance d
    std::vector<std::int32_t> dist(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<NodeId> queue;
    for (NodeId s : sources) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId u = queue[head];
            const std::int32_t du = dist[static_cast<std::size_t>(u)];
            for (NodeId v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = du + 1;
                    if (static_cast<std::size_t>(du) + 1 >= histogram.size())
                        histogram.resize(static_cast<std::size_t>(du) + 2, 0);
                    ++histogram[static_cast<std::size_t>(du + 1)];
                    queue.push_back(v);
                }
            }
        }
    }

    std::int64_t total_pairs = 0;
    double dist_sum = 0;
    std::int64_t diam = 0;
    for (std::size_t d = 1; d < histogram.size(); ++d) {
        total_pairs += histogram[d];
        dist_sum += static_cast<double>(d) * static_cast<double>(histogram[d]);
        if (histogram[d] > 0)
            diam = static_cast<std::int64_t>(d);
    }
    res.diameter = {static_cast<double>(diam), true, res.sampled ? "sampled" : ""};
    res.mean_distance = {dist_sum / static_cast<double>(total_pairs), true,
                         res.sampled ? "sampled" : ""};

    std::int64_t cum = 0;
    for (std::size_t d = 1; d <= static_cast<std::size_t>(diam); ++d) {
        cum += histogram[d];
        const double h = static_cast<double>(cum) / static_cast<double>(total_pairs);
        res.cdf.points.emplace_back(static_cast<double>(d), h);
        // half-count continuity correction keeps the endpoint finite
        const double h_clipped =
            h >= 1.0 ? 1.0 - 1.0 / (2.0 * static_cast<double>(total_pairs)) : h;
        res.logit.points.emplace_back(static_cast<double>(d),
                                      std::log(h_clipped / (1.0 - h_clipped)));
    }
    return res;
}

DistributionSeries degree_ccdf(const Graph& g) {
    DistributionSeries series;
    series.kind = SeriesKind::degree_ccdf;
    const NodeId maxd = g.max_degree();
    if (maxd == 0)
        return series;
    std::vector<std::int64_t> at_least(static_cast<std::size_t>(maxd) + 2, 0);
    for (NodeId d : g.degrees())
        ++at_least[static_cast<std::size_t>(d)];
    for (std::int64_t k = maxd - 1; k >= 0; --k)
        at_least[static_cast<std::size_t>(k)] += at_least[static_cast<std::size_t>(k) + 1];
    const double n = static_cast<double>(g.node_count());
    for (std::int64_t k = 1; k <= maxd; ++k)
        series.points.emplace_back(static_cast<double>(k),
                                   static_cast<double>(at_least[static_cast<std::size_t>(k)]) / n);
    return series;
}

LocalClusteringResult local_clustering_distribution(const Graph& g) {
    LocalClusteringResult res;
    res.series.kind = SeriesKind::local_clustering;
    std::vector<std::uint8_t> mark(static_cast<std::size_t>(g.node_count()), 0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const std::int64_t d = g.degree(u);
        if (d < 2) {
            ++res.excluded_nodes;
            continue;
        }
        for (NodeId v : g.neighbors(u))
            mark[static_cast<std::size_t>(v)] = 1;
        std::int64_t links = 0; // ordered pairs of adjacent neighbors
        for (NodeId v : g.neighbors(u))
            for (NodeId w : g.neighbors(v))
                links += mark[static_cast<std::size_t>(w)];
        for (NodeId v : g.neighbors(u))
            mark[static_cast<std::size_t>(v)] = 0;
        res.values.push_back(static_cast<double>(links / 2) /
                             static_cast<double>(choose2(d)));
    }
    std::vector<double> sorted = res.values;
    std::sort(sorted.begin(), sorted.end());
    const double total = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const bool last_of_value = (i + 1 == sorted.size()) || (sorted[i + 1] > sorted[i]);
        if (last_of_value)
            res.series.points.emplace_back(sorted[i], static_cast<double>(i + 1) / total);
    }
    return res;
}

SpectrumResult normalized_spectrum(const Graph& g, std::int64_t dense_cap) {
    SpectrumResult res;
    res.series.kind = SeriesKind::normalized_spectrum;
    std::vector<NodeId> keep;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.degree(u) > 0)
            keep.push_back(u);
        else
            ++res.dropped_isolated;
    }
    const std::size_t n = keep.size();
    if (n == 0)
        return res;
    if (static_cast<std::int64_t>(n) > dense_cap)
        throw std::invalid_argument(
            "normalized spectrum needs a dense solve; graph exceeds the cap of " +
            std::to_string(dense_cap) + " non-isolated nodes (subsample the graph instead)");

    std::vector<NodeId> index(static_cast<std::size_t>(g.node_count()), -1);
    for (std::size_t i = 0; i < n; ++i)
        index[static_cast<std::size_t>(keep[i])] = static_cast<NodeId>(i);

    std::vector<double> mat(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const NodeId u = keep[i];
        const double du = static_cast<double>(g.degree(u));
        for (NodeId v : g.neighbors(u)) {
            const std::size_t j =
                static_cast<std::size_t>(index[static_cast<std::size_t>(v)]);
            mat[i * n + j] = 1.0 / std::sqrt(du * static_cast<double>(g.degree(v)));
        }
    }
    const std::vector<double> eig = sym_eigenvalues(std::move(mat), n);
    for (std::size_t i = 0; i < n; ++i)
        res.series.points.emplace_back(static_cast<double>(i + 1), eig[i]);
    return res;
}

DerivedStats compute_derived_stats(const Graph& g, const DerivedOptions& opts) {
    DerivedStats out;
    const SubgraphCounts counts = count_all(g);
    out.clustering = clustering_coefficient(counts);
    out.gini = gini_degree(g);
    out.power_law_gamma = power_law_exponent(g);
    out.assortativity = assortativity(g);
    out.spectral_norm = spectral_norm(g, opts.eig_tolerance, opts.eig_max_iterations);
    out.algebraic_connectivity =
        algebraic_connectivity(g, opts.eig_tolerance, opts.eig_max_iterations);
    const DistanceResult d = distances(g, opts);
    out.diameter = d.diameter;
    out.mean_distance = d.mean_distance;
    out.component_coverage = d.component_coverage;
    return out;
}

} // namespace ggen
