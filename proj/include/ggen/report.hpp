// Report structures and their JSON / CSV renderings. Both renderings
// serialize scalars through the same JSON writer so the values are
// identical byte for byte.
#ifndef GGEN_REPORT_HPP
#define GGEN_REPORT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ggen/counts.hpp"
#include "ggen/stats.hpp"

namespace ggen {

inline constexpr int kReportSchemaVersion = 1;

struct ComparisonReport {
    int schema_version = kReportSchemaVersion;
    std::string kind = "generate"; // generate | stats
    std::string generator;         // gg | er | mr | cl | ws | ba | none
    std::uint64_t seed = 0;
    std::int64_t n = 0;
    double epsilon = 0; // gg only
    std::array<double, kStatCount> weights = {1, 1, 1, 1, 1, 1};
    std::array<bool, kStatCount> active = {true, true, true, true, true, true};
    SubgraphCounts targets;
    SubgraphCounts achieved;
    std::array<double, kStatCount> rel_errors{};
    double total_err = 0;
    std::int64_t iterations = 0;
    std::string stop_reason; // window | iteration_cap | "" for baselines
    double runtime_seconds = 0;
    DerivedStats derived;                 // of the produced graph
    std::vector<std::string> zero_targets; // statistic symbols with target 0
    std::vector<std::string> notes;
};

// Fills rel_errors / total_err / zero_targets from targets and achieved.
void finalize_errors(ComparisonReport& r);

nlohmann::ordered_json report_to_json(const ComparisonReport& r);
// Flat two-column rendering (key,value); values match the JSON ones.
std::string report_to_csv(const ComparisonReport& r);

std::string series_to_csv(const DistributionSeries& s);

} // namespace ggen

#endif
