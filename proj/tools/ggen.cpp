// ggen - graph generation toolkit CLI.
//
// Verbs: generate (run one generator against a target graph or inline
// targets), compare (run several generators on the same targets),
// scaling (runtime/error versus network size), stats (statistics of an
// existing graph).
//
// Exit codes: 0 success, 2 unreadable input, 3 infeasible construction
// constraints, 4 subgraph-count overflow, 1 other errors.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ggen/errors.hpp"
#include "ggen/harness.hpp"

namespace {

struct CommonFlags {
    std::string input;
    std::string targets;
    std::string weights;
    std::string use_stats;
    std::string out;
    std::vector<std::string> formats{"json"};
    std::vector<std::string> series;
    std::uint64_t seed = 1;
    double epsilon = 0.01;
    std::int64_t max_iter = -1;
    std::string return_policy = "best";
    bool no_timing = false;
    bool single_core = false;
};

void apply_formats(const std::vector<std::string>& formats, bool& json, bool& csv) {
    json = false;
    csv = false;
    for (const std::string& f : formats) {
        if (f == "json")
            json = true;
        else if (f == "csv")
            csv = true;
        else
            throw CLI::ValidationError("--format", "unknown format: " + f);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ggen - generate graphs matching target subgraph counts"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto add_common = [&](CLI::App* cmd, bool with_generate_flags) {
        cmd->add_option("--input", flags.input, "edge-list file (%/# comments ignored)");
        cmd->add_option("--out", flags.out,
                        "output directory (default: $GGEN_OUT_DIR or ./ggen-out)");
        cmd->add_option("--format", flags.formats, "report formats: json, csv")
            ->delimiter(',');
        if (with_generate_flags) {
            cmd->add_option("--targets", flags.targets,
                            "inline targets, e.g. n=34,m=78,t=45 (missing counts are 0)");
            cmd->add_option("--seed", flags.seed, "RNG seed");
            cmd->add_option("--epsilon", flags.epsilon, "convergence parameter in (0,1)");
            cmd->add_option("--max-iter", flags.max_iter, "hard iteration cap (-1 = none)");
            cmd->add_option("--weights", flags.weights, "per-statistic weights, e.g. m=2,q=0.5");
            cmd->add_option("--use-stats", flags.use_stats,
                            "statistic subset for the error metric, e.g. m,s,t");
            cmd->add_flag("--no-timing", flags.no_timing,
                          "write zero runtimes for byte-stable reports");
            cmd->add_flag("--single-core", flags.single_core,
                          "informational; all computation is single-threaded");
        }
    };

    auto* generate = app.add_subcommand("generate", "run one generator");
    std::string generator = "gg";
    generate->add_option("--generator", generator, "gg | er | mr | cl | ws | ba");
    generate->add_option("--return", flags.return_policy, "best | final");
    generate->add_option("--series", flags.series,
                         "distribution series to emit: degree, clustering, distance, spectrum")
        ->delimiter(',');
    add_common(generate, true);

    auto* compare = app.add_subcommand("compare", "run several generators on one input");
    std::vector<std::string> compare_generators{"gg", "er", "mr", "cl", "ws", "ba"};
    compare->add_option("--generators", compare_generators, "generators to compare")
        ->delimiter(',');
    add_common(compare, true);

    auto* scaling = app.add_subcommand("scaling", "runtime and error versus network size");
    std::vector<std::int64_t> sizes;
    double mean_degree = 10;
    int repeats = 1;
    scaling->add_option("--sizes", sizes, "network sizes, e.g. 250,500,1000,2000")
        ->delimiter(',')
        ->required();
    scaling->add_option("--mean-degree", mean_degree, "constant mean degree of the target family");
    scaling->add_option("--repeats", repeats, "seeds per size (variance reported)");
    add_common(scaling, true);

    auto* stats = app.add_subcommand("stats", "statistics of an existing graph");
    stats->add_option("--series", flags.series,
                      "distribution series to emit: degree, clustering, distance, spectrum")
        ->delimiter(',');
    add_common(stats, false);

    CLI11_PARSE(app, argc, argv);

    try {
        bool json = true, csv = false;
        apply_formats(flags.formats, json, csv);
        const auto weights =
            flags.weights.empty() ? std::array<double, ggen::kStatCount>{1, 1, 1, 1, 1, 1}
                                  : ggen::parse_weights(flags.weights);
        const auto active = flags.use_stats.empty()
                                ? std::array<bool, ggen::kStatCount>{true, true, true,
                                                                     true, true, true}
                                : ggen::parse_stat_subset(flags.use_stats);

        if (generate->parsed()) {
            ggen::RunOptions opts;
            opts.input_path = flags.input;
            if (!flags.targets.empty())
                opts.inline_targets = ggen::parse_inline_targets(flags.targets);
            opts.generator = generator;
            opts.seed = flags.seed;
            opts.epsilon = flags.epsilon;
            if (flags.max_iter >= 0)
                opts.max_iterations = flags.max_iter;
            opts.weights = weights;
            opts.active = active;
            if (flags.return_policy == "best")
                opts.return_policy = ggen::ReturnPolicy::best_seen;
            else if (flags.return_policy == "final")
                opts.return_policy = ggen::ReturnPolicy::final_state;
            else
                throw std::invalid_argument("--return expects best or final");
            opts.out_dir = flags.out;
            opts.write_json = json;
            opts.write_csv = csv;
            opts.series.insert(flags.series.begin(), flags.series.end());
            opts.timing = !flags.no_timing;
            const ggen::GenerateOutcome outcome = ggen::run_generate(opts);
            std::cout << "generator=" << outcome.report.generator
                      << " E=" << outcome.report.total_err
                      << " edges=" << outcome.edges_path.string() << "\n";
        } else if (compare->parsed()) {
            ggen::CompareOptions opts;
            opts.input_path = flags.input;
            opts.generators = compare_generators;
            opts.seed = flags.seed;
            opts.epsilon = flags.epsilon;
            if (flags.max_iter >= 0)
                opts.max_iterations = flags.max_iter;
            opts.weights = weights;
            opts.active = active;
            opts.out_dir = flags.out;
            opts.write_json = json;
            opts.write_csv = csv;
            opts.timing = !flags.no_timing;
            const ggen::CompareOutcome outcome = ggen::run_compare(opts);
            for (const auto& row : outcome.rows)
                std::cout << row.generator << " E=" << row.total_err
                          << " runtime=" << row.runtime_seconds << "s\n";
        } else if (scaling->parsed()) {
            ggen::ScalingOptions opts;
            opts.sizes = sizes;
            opts.mean_degree = mean_degree;
            opts.repeats = repeats;
            opts.seed = flags.seed;
            opts.epsilon = flags.epsilon;
            opts.out_dir = flags.out;
            opts.write_json = json;
            opts.write_csv = csv;
            const ggen::ScalingOutcome outcome = ggen::run_scaling(opts);
            for (const auto& pt : outcome.points)
                std::cout << "n=" << pt.n << " runtime=" << pt.runtime_median
                          << "s E=" << pt.error_mean << "\n";
            std::cout << "loglog_slope=" << outcome.loglog_slope << "\n";
        } else if (stats->parsed()) {
            ggen::StatsOptions opts;
            opts.input_path = flags.input;
            opts.out_dir = flags.out;
            opts.write_json = json;
            opts.write_csv = csv;
            opts.series.insert(flags.series.begin(), flags.series.end());
            const ggen::StatsOutcome outcome = ggen::run_stats(opts);
            const auto& c = outcome.report.achieved;
            std::cout << "n=" << outcome.report.n << " m=" << c.edges << " s=" << c.wedges
                      << " z=" << c.claws << " x=" << c.crosses << " t=" << c.triangles
                      << " q=" << c.squares << "\n";
        }
    } catch (const ggen::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ggen::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ggen::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ggen::CountOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
