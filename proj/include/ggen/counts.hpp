// Exact global counts of the six optimized subgraph patterns:
// edges m, wedges s, claws z, crosses x, triangles t, squares q.
// All counts are 64-bit integers and overflow raises CountOverflow
// instead of wrapping.
#ifndef GGEN_COUNTS_HPP
#define GGEN_COUNTS_HPP

#include <array>
#include <cstdint>
#include <string>

#include "ggen/graph.hpp"

namespace ggen {

inline constexpr int kStatCount = 6;

// Canonical statistic order used throughout: m, s, z, x, t, q.
enum class Stat : int { edges = 0, wedges, claws, crosses, triangles, squares };

const std::array<std::string, kStatCount>& stat_symbols(); // "m","s","z","x","t","q"

struct SubgraphCounts {
    std::int64_t edges = 0;     // m
    std::int64_t wedges = 0;    // s
    std::int64_t claws = 0;     // z
    std::int64_t crosses = 0;   // x
    std::int64_t triangles = 0; // t
    std::int64_t squares = 0;   // q

    std::array<std::int64_t, kStatCount> to_array() const {
        return {edges, wedges, claws, crosses, triangles, squares};
    }
    static SubgraphCounts from_array(const std::array<std::int64_t, kStatCount>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5]};
    }
    bool operator==(const SubgraphCounts&) const = default;
};

struct StarCounts {
    std::int64_t edges = 0;
    std::int64_t wedges = 0;
    std::int64_t claws = 0;
    std::int64_t crosses = 0;
};

// Degree-sum counts: m = sum d / 2, s/z/x via binomial sums.
StarCounts count_stars(const Graph& g);

// One neighbor intersection per edge, each triangle counted three times.
std::int64_t count_triangles(const Graph& g);

// Closed-4-walk identity: q = (tr A^4 - 2m - 4s) / 8. Agrees with the
// enumeration oracle (tested).
std::int64_t count_squares(const Graph& g);

SubgraphCounts count_all(const Graph& g);

// Brute-force enumeration over node pairs/triples/quadruples/quintuples.
// Authoritative reference for tests; refuses n > 64.
SubgraphCounts oracle_counts(const Graph& g);

// Overflow-checked helpers shared with the delta engine.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t choose2(std::int64_t k);
std::int64_t choose3(std::int64_t k);
std::int64_t choose4(std::int64_t k);

} // namespace ggen

#endif
