// Evaluation statistics that are not optimized by the generator: degree
// Gini, power-law exponent, clustering coefficient, assortativity,
// spectral norm, algebraic connectivity, distances, and the four
// characteristic distributions (degree CCDF, local clustering, distance
// CDF with logistic transform, normalized-adjacency spectrum).
#ifndef GGEN_STATS_HPP
#define GGEN_STATS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ggen/counts.hpp"
#include "ggen/graph.hpp"

namespace ggen {

// A statistic that may be undefined on degenerate inputs; `note`
// carries qualifiers like "divergent" or "largest-component".
struct Flagged {
    double value = 0;
    bool defined = false;
    std::string note;
};

enum class SeriesKind { degree_ccdf, local_clustering, distance_cdf, distance_logit, normalized_spectrum };

const char* series_kind_name(SeriesKind k);

struct DistributionSeries {
    SeriesKind kind = SeriesKind::degree_ccdf;
    std::vector<std::pair<double, double>> points;
};

struct DerivedOptions {
    double eig_tolerance = 1e-8;
    int eig_max_iterations = 600;
    std::int64_t exact_bfs_limit = 50000; // sample sources above this component size
    std::int64_t bfs_sample_size = 2048;
    std::uint64_t sample_seed = 9;
};

struct DerivedStats {
    Flagged gini;
    Flagged power_law_gamma;
    Flagged clustering;
    Flagged assortativity;
    Flagged spectral_norm;
    Flagged algebraic_connectivity;
    Flagged diameter;      // integer-valued
    Flagged mean_distance;
    double component_coverage = 1.0; // node fraction of the largest component
};

Flagged clustering_coefficient(const SubgraphCounts& counts); // 3t/s
Flagged gini_degree(const Graph& g);
Flagged power_law_exponent(const Graph& g);
// Estimator core on a degree multiset; d_min is the smallest nonzero degree.
Flagged power_law_exponent_from_degrees(const std::vector<std::int64_t>& degrees);
Flagged assortativity(const Graph& g);
Flagged spectral_norm(const Graph& g, double tolerance = 1e-8, int max_iterations = 600);
Flagged algebraic_connectivity(const Graph& g, double tolerance = 1e-8, int max_iterations = 600);

// Nodes of the largest connected component, ascending.
std::vector<NodeId> largest_component(const Graph& g);

struct DistanceResult {
    Flagged diameter;
    Flagged mean_distance;
    DistributionSeries cdf;   // H(d) over component pairs
    DistributionSeries logit; // ln(H / (1-H)), endpoint continuity-corrected
    double component_coverage = 1.0;
    std::int64_t sources_used = 0;
    bool sampled = false;
};

// BFS from every node of the largest component (seeded source sampling
// beyond exact_bfs_limit).
DistanceResult distances(const Graph& g, const DerivedOptions& opts = {});

DistributionSeries degree_ccdf(const Graph& g);

struct LocalClusteringResult {
    DistributionSeries series; // CDF over nodes with degree >= 2
    std::int64_t excluded_nodes = 0;
    std::vector<double> values; // per qualifying node, unsorted
};

LocalClusteringResult local_clustering_distribution(const Graph& g);

struct SpectrumResult {
    DistributionSeries series; // (rank, eigenvalue), ascending
    std::int64_t dropped_isolated = 0;
};

// Full spectrum of the normalized adjacency matrix (dense solve);
// refuses graphs larger than dense_cap non-isolated nodes.
SpectrumResult normalized_spectrum(const Graph& g, std::int64_t dense_cap = 5000);

DerivedStats compute_derived_stats(const Graph& g, const DerivedOptions& opts = {});

} // namespace ggen

#endif
