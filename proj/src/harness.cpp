#include "ggen/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ggen/baselines.hpp"
#include "ggen/errors.hpp"

namespace ggen {

namespace {

int stat_index(const std::string& symbol) {
    for (int i = 0; i < kStatCount; ++i)
        if (stat_symbols()[static_cast<std::size_t>(i)] == symbol)
            return i;
    return -1;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot create " + path.string());
    out << content;
    if (!out)
        throw IoError("write failed: " + path.string());
}

double now_seconds(const std::chrono::steady_clock::time_point& since) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

} // namespace

std::pair<std::int64_t, SubgraphCounts> parse_inline_targets(const std::string& text) {
    std::int64_t n = -1;
    std::array<std::int64_t, kStatCount> counts{};
    for (const std::string& field : split(text, ',')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("targets expect key=value pairs: " + field);
        const std::string key = field.substr(0, eq);
        const std::int64_t value = std::stoll(field.substr(eq + 1));
        if (key == "n") {
            n = value;
        } else {
            const int idx = stat_index(key);
            if (idx < 0)
                throw std::invalid_argument("unknown target statistic: " + key);
            counts[static_cast<std::size_t>(idx)] = value;
        }
    }
    if (n < 0)
        throw std::invalid_argument("inline targets must include n");
    return {n, SubgraphCounts::from_array(counts)};
}

std::array<double, kStatCount> parse_weights(const std::string& text) {
    std::array<double, kStatCount> weights;
    weights.fill(1.0);
    for (const std::string& field : split(text, ',')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("weights expect key=value pairs: " + field);
        const int idx = stat_index(field.substr(0, eq));
        if (idx < 0)
            throw std::invalid_argument("unknown statistic in weights: " + field);
        weights[static_cast<std::size_t>(idx)] = std::stod(field.substr(eq + 1));
    }
    return weights;
}

std::array<bool, kStatCount> parse_stat_subset(const std::string& text) {
    std::array<bool, kStatCount> active{};
    for (const std::string& symbol : split(text, ',')) {
        const int idx = stat_index(symbol);
        if (idx < 0)
            throw std::invalid_argument("unknown statistic: " + symbol);
        active[static_cast<std::size_t>(idx)] = true;
    }
    return active;
}

std::filesystem::path resolve_out_dir(const std::string& requested) {
    std::filesystem::path dir;
    if (!requested.empty()) {
        dir = requested;
    } else if (const char* env = std::getenv("GGEN_OUT_DIR"); env && *env) {
        dir = env;
    } else {
        dir = "ggen-out";
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + dir.string());
    return dir;
}

namespace {

struct ResolvedInput {
    TargetSpec spec;
    std::optional<Graph> input_graph;
    std::vector<std::pair<std::int64_t, NodeId>> id_map;
};

ResolvedInput resolve_input(const std::string& input_path,
                            const std::optional<std::pair<std::int64_t, SubgraphCounts>>& inline_targets) {
    if (!input_path.empty() && inline_targets)
        throw std::invalid_argument("give either an input graph or inline targets, not both");
    if (!input_path.empty()) {
        LoadResult loaded = load_edge_list_file(input_path);
        ResolvedInput r{TargetSpec::from_graph(loaded.graph), std::move(loaded.graph),
                        std::move(loaded.id_map)};
        return r;
    }
    if (inline_targets)
        return {TargetSpec::from_counts(inline_targets->first, inline_targets->second),
                std::nullopt,
                {}};
    throw std::invalid_argument("an input graph or inline targets are required");
}

void write_id_map(const std::filesystem::path& dir,
                  const std::vector<std::pair<std::int64_t, NodeId>>& id_map) {
    if (id_map.empty())
        return;
    std::ostringstream out;
    out << "original,compact\n";
    for (const auto& [orig, compact] : id_map)
        out << orig << "," << compact << "\n";
    write_text(dir / "idmap.csv", out.str());
}

void write_series_files(const std::filesystem::path& dir, const Graph& g,
                        const std::set<std::string>& series,
                        std::vector<std::string>& notes) {
    if (series.count("degree"))
        write_text(dir / "degree_ccdf.csv", series_to_csv(degree_ccdf(g)));
    if (series.count("clustering")) {
        const LocalClusteringResult lc = local_clustering_distribution(g);
        write_text(dir / "local_clustering.csv", series_to_csv(lc.series));
        if (lc.excluded_nodes > 0)
            notes.push_back("local_clustering_excluded_nodes=" +
                            std::to_string(lc.excluded_nodes));
    }
    if (series.count("distance")) {
        const DistanceResult d = distances(g);
        write_text(dir / "distance_cdf.csv", series_to_csv(d.cdf));
        write_text(dir / "distance_logit.csv", series_to_csv(d.logit));
    }
    if (series.count("spectrum")) {
        const SpectrumResult sp = normalized_spectrum(g);
        write_text(dir / "normalized_spectrum.csv", series_to_csv(sp.series));
        if (sp.dropped_isolated > 0)
            notes.push_back("spectrum_dropped_isolated=" + std::to_string(sp.dropped_isolated));
    }
}

std::string trace_to_csv(const RunTrace& trace, const std::vector<double>& elapsed) {
    std::ostringstream out;
    out << "iteration,elapsed_seconds,E";
    for (const auto& s : stat_symbols())
        out << ",E_" << s;
    for (const auto& s : stat_symbols())
        out << ",y_" << s;
    out << "\n";
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const TraceRecord& rec = trace.records[i];
        out << rec.iteration << "," << nlohmann::json(i < elapsed.size() ? elapsed[i] : 0.0).dump()
            << "," << nlohmann::json(rec.total_error).dump();
        for (double e : rec.stat_errors)
            out << "," << nlohmann::json(e).dump();
        for (std::int64_t y : rec.counts.to_array())
            out << "," << y;
        out << "\n";
    }
    return out.str();
}

ComparisonReport build_report(const std::string& generator, const RunOptions& opts,
                              const TargetSpec& spec, const Graph& produced,
                              double runtime_seconds) {
    ComparisonReport rep;
    rep.kind = "generate";
    rep.generator = generator;
    rep.seed = opts.seed;
    rep.n = spec.n;
    rep.epsilon = opts.epsilon;
    rep.weights = opts.weights;
    rep.active = opts.active;
    rep.targets = spec.targets;
    rep.achieved = count_all(produced);
    rep.runtime_seconds = opts.timing ? runtime_seconds : 0.0;
    rep.derived = compute_derived_stats(produced);
    finalize_errors(rep);
    return rep;
}

} // namespace

GenerateOutcome run_generate(const RunOptions& opts) {
    const std::filesystem::path dir = resolve_out_dir(opts.out_dir);
    ResolvedInput input = resolve_input(opts.input_path, opts.inline_targets);

    GenerateOutcome outcome;
    std::vector<double> record_elapsed;
    Graph produced(1);
    double runtime = 0;

    if (opts.generator == "gg") {
        GeneratorConfig cfg;
        cfg.epsilon = opts.epsilon;
        cfg.seed = opts.seed;
        cfg.max_iterations = opts.max_iterations;
        cfg.weights = opts.weights;
        cfg.active = opts.active;
        cfg.return_policy = opts.return_policy;
        const auto started = std::chrono::steady_clock::now();
        GuidedResult result = run_guided(
            input.spec, cfg, [&](const TraceRecord&, double elapsed) {
                record_elapsed.push_back(opts.timing ? elapsed : 0.0);
            });
        runtime = now_seconds(started);
        produced = std::move(result.graph);
        outcome.trace = std::move(result.trace);
    } else {
        if (!input.input_graph)
            throw std::invalid_argument(
                "baseline generators fit their parameters from an input graph; inline "
                "targets only work with gg");
        const BaselineModel model = baseline_from_tag(opts.generator);
        const auto started = std::chrono::steady_clock::now();
        BaselineOutcome result = generate_fitted(model, *input.input_graph, opts.seed);
        runtime = now_seconds(started);
        produced = std::move(result.graph);
        outcome.report.notes = std::move(result.notes);
    }

    std::vector<std::string> notes = std::move(outcome.report.notes);
    outcome.report = build_report(opts.generator, opts, input.spec, produced, runtime);
    outcome.report.notes = std::move(notes);
    if (opts.generator == "gg") {
        outcome.report.iterations = outcome.trace.iterations;
        outcome.report.stop_reason =
            outcome.trace.stop_reason == StopReason::window ? "window" : "iteration_cap";
    }

    outcome.edges_path = dir / "generated.edges";
    save_edge_list_file(produced, outcome.edges_path.string());
    write_id_map(dir, input.id_map);
    write_series_files(dir, produced, opts.series, outcome.report.notes);
    if (opts.generator == "gg")
        write_text(dir / "trace.csv", trace_to_csv(outcome.trace, record_elapsed));

    if (opts.write_json) {
        outcome.report_json_path = dir / "report.json";
        write_text(outcome.report_json_path, report_to_json(outcome.report).dump(2) + "\n");
    }
    if (opts.write_csv)
        write_text(dir / "report.csv", report_to_csv(outcome.report));
    return outcome;
}

CompareOutcome run_compare(const CompareOptions& opts) {
    if (opts.generators.size() < 2)
        throw std::invalid_argument("compare needs at least two generators");
    if (opts.input_path.empty())
        throw std::invalid_argument("compare needs an input graph");
    const std::filesystem::path dir = resolve_out_dir(opts.out_dir);

    CompareOutcome outcome;
    for (const std::string& tag : opts.generators) {
        RunOptions run;
        run.input_path = opts.input_path;
        run.generator = tag;
        run.seed = opts.seed;
        run.epsilon = opts.epsilon;
        run.max_iterations = opts.max_iterations;
        run.weights = opts.weights;
        run.active = opts.active;
        run.out_dir = (dir / ("run-" + tag)).string();
        run.write_json = false;
        run.timing = opts.timing;

        if (tag == "gg") {
            // capture the error-vs-runtime curve from the trace sink
            ResolvedInput input = resolve_input(run.input_path, std::nullopt);
            GeneratorConfig cfg;
            cfg.epsilon = run.epsilon;
            cfg.seed = run.seed;
            cfg.max_iterations = run.max_iterations;
            cfg.weights = run.weights;
            cfg.active = run.active;
            const auto started = std::chrono::steady_clock::now();
            GuidedResult result = run_guided(
                input.spec, cfg, [&](const TraceRecord& rec, double elapsed) {
                    outcome.gg_error_vs_runtime.emplace_back(opts.timing ? elapsed : 0.0,
                                                             rec.total_error);
                });
            const double runtime = now_seconds(started);
            ComparisonReport rep = build_report("gg", run, input.spec, result.graph, runtime);
            rep.iterations = result.trace.iterations;
            rep.stop_reason =
                result.trace.stop_reason == StopReason::window ? "window" : "iteration_cap";
            outcome.rows.push_back(std::move(rep));
        } else {
            outcome.rows.push_back(run_generate(run).report);
        }
    }

    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "compare";
    j["input"] = opts.input_path;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ComparisonReport& r : outcome.rows)
        rows.push_back(report_to_json(r));
    j["runs"] = rows;
    nlohmann::ordered_json curve = nlohmann::ordered_json::array();
    for (const auto& [sec, err] : outcome.gg_error_vs_runtime)
        curve.push_back({{"seconds", sec}, {"error", err}});
    j["gg_error_vs_runtime"] = curve;
    if (opts.write_json)
        write_text(dir / "compare.json", j.dump(2) + "\n");

    if (opts.write_csv) {
        std::ostringstream csv;
        csv << "generator,seed,E";
        for (const auto& s : stat_symbols())
            csv << ",E_" << s;
        csv << ",runtime_seconds,iterations\n";
        for (const ComparisonReport& r : outcome.rows) {
            csv << r.generator << "," << r.seed << "," << nlohmann::json(r.total_err).dump();
            for (double e : r.rel_errors)
                csv << "," << nlohmann::json(e).dump();
            csv << "," << nlohmann::json(r.runtime_seconds).dump() << "," << r.iterations << "\n";
        }
        write_text(dir / "compare.csv", csv.str());
    }
    {
        std::ostringstream curve_csv;
        curve_csv << "seconds,E\n";
        for (const auto& [sec, err] : outcome.gg_error_vs_runtime)
            curve_csv << nlohmann::json(sec).dump() << "," << nlohmann::json(err).dump() << "\n";
        write_text(dir / "gg_error_vs_runtime.csv", curve_csv.str());
    }
    return outcome;
}

ScalingOutcome run_scaling(const ScalingOptions& opts) {
    if (opts.sizes.size() < 3)
        throw std::invalid_argument("scaling needs at least three sizes");
    if (opts.repeats < 1)
        throw std::invalid_argument("repeats must be positive");
    const std::filesystem::path dir = resolve_out_dir(opts.out_dir);

    ScalingOutcome outcome;
    for (std::size_t si = 0; si < opts.sizes.size(); ++si) {
        const std::int64_t n = opts.sizes[si];
        if (n < 3)
            throw std::invalid_argument("scaling sizes must be at least 3");
        const double p = std::min(1.0, opts.mean_degree / static_cast<double>(n - 1));
        const Graph g0 = gen_erdos_renyi(n, p, opts.seed * 1000003ULL + static_cast<std::uint64_t>(n));
        const TargetSpec spec = TargetSpec::from_graph(g0);

        std::vector<double> runtimes;
        double error_sum = 0;
        for (int rep = 0; rep < opts.repeats; ++rep) {
            GeneratorConfig cfg;
            cfg.epsilon = opts.epsilon;
            cfg.seed = opts.seed + static_cast<std::uint64_t>(rep);
            const auto started = std::chrono::steady_clock::now();
            const GuidedResult result = run_guided(spec, cfg);
            runtimes.push_back(now_seconds(started));
            error_sum += result.trace.best_error;
        }
        std::vector<double> sorted = runtimes;
        std::sort(sorted.begin(), sorted.end());
        ScalingPoint point;
        point.n = n;
        point.runtime_median = sorted[sorted.size() / 2];
        double mean = 0;
        for (double r : runtimes)
            mean += r;
        mean /= static_cast<double>(runtimes.size());
        point.runtime_mean = mean;
        double var = 0;
        for (double r : runtimes)
            var += (r - mean) * (r - mean);
        point.runtime_variance =
            runtimes.size() > 1 ? var / static_cast<double>(runtimes.size() - 1) : 0.0;
        point.error_mean = error_sum / static_cast<double>(opts.repeats);
        outcome.points.push_back(point);
    }

    // least-squares slope on the log-log series
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(outcome.points.size());
    for (const ScalingPoint& pt : outcome.points) {
        const double lx = std::log(static_cast<double>(pt.n));
        const double ly = std::log(std::max(pt.runtime_median, 1e-9));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    outcome.loglog_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);

    std::ostringstream csv;
    csv << "n,runtime_median,runtime_mean,runtime_variance,error_mean\n";
    for (const ScalingPoint& pt : outcome.points) {
        csv << pt.n << "," << nlohmann::json(pt.runtime_median).dump() << ","
            << nlohmann::json(pt.runtime_mean).dump() << ","
            << nlohmann::json(pt.runtime_variance).dump() << ","
            << nlohmann::json(pt.error_mean).dump() << "\n";
    }
    if (opts.write_csv)
        write_text(dir / "scaling.csv", csv.str());
    if (opts.write_json) {
        nlohmann::ordered_json j;
        j["schema_version"] = kReportSchemaVersion;
        j["kind"] = "scaling";
        j["mean_degree"] = opts.mean_degree;
        j["repeats"] = opts.repeats;
        j["loglog_slope"] = outcome.loglog_slope;
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const ScalingPoint& pt : outcome.points)
            pts.push_back({{"n", pt.n},
                           {"runtime_median", pt.runtime_median},
                           {"runtime_mean", pt.runtime_mean},
                           {"runtime_variance", pt.runtime_variance},
                           {"error_mean", pt.error_mean}});
        j["points"] = pts;
        write_text(dir / "scaling.json", j.dump(2) + "\n");
    }
    return outcome;
}

StatsOutcome run_stats(const StatsOptions& opts) {
    if (opts.input_path.empty())
        throw std::invalid_argument("stats needs an input graph");
    const std::filesystem::path dir = resolve_out_dir(opts.out_dir);
    LoadResult loaded = load_edge_list_file(opts.input_path);

    StatsOutcome outcome;
    ComparisonReport& rep = outcome.report;
    rep.kind = "stats";
    rep.generator = "none";
    rep.n = loaded.graph.node_count();
    rep.targets = count_all(loaded.graph);
    rep.achieved = rep.targets;
    rep.derived = compute_derived_stats(loaded.graph);
    finalize_errors(rep);

    write_id_map(dir, loaded.id_map);
    write_series_files(dir, loaded.graph, opts.series, rep.notes);
    if (opts.write_json)
        write_text(dir / "stats.json", report_to_json(rep).dump(2) + "\n");
    if (opts.write_csv)
        write_text(dir / "stats.csv", report_to_csv(rep));
    return outcome;
}

} // namespace ggen
