#include "ggen/report.hpp"

#include <sstream>

#include "ggen/generator.hpp"

namespace ggen {

void finalize_errors(ComparisonReport& r) {
    const auto x = r.targets.to_array();
    const auto y = r.achieved.to_array();
    r.zero_targets.clear();
    for (int i = 0; i < kStatCount; ++i) {
        const auto iz = static_cast<std::size_t>(i);
        r.rel_errors[iz] = relative_error(y[iz], x[iz]);
        if (r.active[iz] && x[iz] == 0)
            r.zero_targets.push_back(stat_symbols()[iz]);
    }
    r.total_err = total_error(r.rel_errors, r.weights, r.active);
}

namespace {

nlohmann::ordered_json counts_json(const SubgraphCounts& c) {
    nlohmann::ordered_json j;
    const auto a = c.to_array();
    for (int i = 0; i < kStatCount; ++i)
        j[stat_symbols()[static_cast<std::size_t>(i)]] = a[static_cast<std::size_t>(i)];
    return j;
}

nlohmann::ordered_json flagged_json(const Flagged& f) {
    nlohmann::ordered_json j;
    j["defined"] = f.defined;
    j["value"] = f.value;
    if (!f.note.empty())
        j["note"] = f.note;
    return j;
}

void flatten(const nlohmann::ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (j.is_array()) {
        std::size_t idx = 0;
        for (const auto& item : j)
            flatten(item, prefix + "." + std::to_string(idx++), rows);
        if (j.empty())
            rows.emplace_back(prefix, "[]");
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

} // namespace

nlohmann::ordered_json report_to_json(const ComparisonReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = r.schema_version;
    j["kind"] = r.kind;
    j["generator"] = r.generator;
    j["seed"] = r.seed;
    j["n"] = r.n;
    if (r.generator == "gg")
        j["epsilon"] = r.epsilon;
    nlohmann::ordered_json weights, active;
    for (int i = 0; i < kStatCount; ++i) {
        weights[stat_symbols()[static_cast<std::size_t>(i)]] =
            r.weights[static_cast<std::size_t>(i)];
        active[stat_symbols()[static_cast<std::size_t>(i)]] =
            r.active[static_cast<std::size_t>(i)];
    }
    j["weights"] = weights;
    j["active"] = active;
    j["targets"] = counts_json(r.targets);
    j["achieved"] = counts_json(r.achieved);
    nlohmann::ordered_json errors;
    for (int i = 0; i < kStatCount; ++i)
        errors[stat_symbols()[static_cast<std::size_t>(i)]] =
            r.rel_errors[static_cast<std::size_t>(i)];
    j["relative_errors"] = errors;
    j["total_error"] = r.total_err;
    j["iterations"] = r.iterations;
    if (!r.stop_reason.empty())
        j["stop_reason"] = r.stop_reason;
    j["runtime_seconds"] = r.runtime_seconds;

    nlohmann::ordered_json derived;
    derived["gini"] = flagged_json(r.derived.gini);
    derived["power_law_gamma"] = flagged_json(r.derived.power_law_gamma);
    derived["clustering"] = flagged_json(r.derived.clustering);
    derived["assortativity"] = flagged_json(r.derived.assortativity);
    derived["spectral_norm"] = flagged_json(r.derived.spectral_norm);
    derived["algebraic_connectivity"] = flagged_json(r.derived.algebraic_connectivity);
    derived["diameter"] = flagged_json(r.derived.diameter);
    derived["mean_distance"] = flagged_json(r.derived.mean_distance);
    derived["component_coverage"] = r.derived.component_coverage;
    j["derived"] = derived;

    j["zero_targets"] = r.zero_targets;
    j["notes"] = r.notes;
    return j;
}

std::string report_to_csv(const ComparisonReport& r) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report_to_json(r), "", rows);
    std::ostringstream out;
    out << "key,value\n";
    for (const auto& [k, v] : rows) {
        std::string value = v;
        // JSON strings keep their quotes stripped in the CSV cell
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        out << k << "," << value << "\n";
    }
    return out.str();
}

std::string series_to_csv(const DistributionSeries& s) {
    std::ostringstream out;
    out << "x,y\n";
    for (const auto& [x, y] : s.points)
        out << nlohmann::json(x).dump() << "," << nlohmann::json(y).dump() << "\n";
    return out.str();
}

} // namespace ggen
