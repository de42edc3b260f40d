#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <map>

#include "tribic/cli.hpp"
#include "tribic/oracle.hpp"

namespace tribic::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

double to_ms(std::chrono::nanoseconds ns) {
    return std::chrono::duration<double, std::milli>(ns).count();
}

std::string interval_text(const scaling::Interval& c) {
    return "[" + format_number(c.lo) + "," + format_number(c.hi) + "]";
}

ordered_json dataset_summary(const NumericalDataset& d) {
    return {{"objects", d.object_count()},
            {"attributes", d.attribute_count()},
            {"distinct_values", distinct_values(d).size()}};
}

ordered_json biclusters_json(const NumericalDataset& d,
                             const std::vector<tca::ThetaAnnotatedBicluster>& found) {
    ordered_json arr = ordered_json::array();
    for (const auto& b : found) {
        ordered_json extent = ordered_json::array();
        for (Index g : b.bicluster.extent) extent.push_back(d.object_ids()[g]);
        ordered_json intent = ordered_json::array();
        for (Index m : b.bicluster.intent) intent.push_back(d.attribute_ids()[m]);
        arr.push_back({{"extent", std::move(extent)},
                       {"intent", std::move(intent)},
                       {"theta", b.theta.value},
                       {"value_min", b.value_range.lo},
                       {"value_max", b.value_range.hi}});
    }
    return arr;
}

void print_mine_output(const RunConfig& cfg, const NumericalDataset& d,
                       const trimax::MiningReport& report, std::ostream& out) {
    if (cfg.format == OutputFormat::csv) {
        out << render_biclusters_csv(d, report.biclusters);
        return;
    }
    ordered_json doc;
    doc["dataset"] = dataset_summary(d);
    doc["parameters"] = {{"command", "mine"}, {"theta", *cfg.theta}, {"threads", cfg.threads}};
    doc["stats"] = {{"blocks", report.blocks},
                    {"dyadic_concepts", report.dyadic_concepts_generated},
                    {"biclusters", report.biclusters.size()}};
    doc["timing"] = {{"elapsed_ms", to_ms(report.elapsed)},
                     {"phase_mine_ms", to_ms(report.phases.concept_mining)},
                     {"phase_modus_ms", to_ms(report.phases.modus)},
                     {"phase_maxcheck_ms", to_ms(report.phases.maximality)}};
    doc["biclusters"] = biclusters_json(d, report.biclusters);
    out << doc.dump(2) << '\n';
}

void cmd_blocks(const RunConfig& cfg, std::ostream& out) {
    NumericalDataset d = ingest_csv(cfg.input_path);
    scaling::ScaleDimension blocks =
        scaling::tolerance_blocks(distinct_values(d), Theta(*cfg.theta));
    for (std::size_t i = 0; i < blocks.conditions.size(); ++i)
        out << (i ? " " : "") << interval_text(blocks.conditions[i]);
    out << '\n';
}

void cmd_scale(const RunConfig& cfg, std::ostream& out) {
    NumericalDataset d = ingest_csv(cfg.input_path);
    scaling::ScaleDimension scale = scaling::interordinal_scale(distinct_values(d), cfg.scale_mode);
    for (std::size_t i = 0; i < scale.conditions.size(); ++i)
        out << (i ? " " : "") << interval_text(scale.conditions[i]);
    out << '\n';
}

void cmd_mine(const RunConfig& cfg, std::ostream& out) {
    NumericalDataset d = ingest_csv(cfg.input_path);
    trimax::MiningReport report =
        trimax::trimax_mine(d, Theta(*cfg.theta), cfg.constraints, cfg.threads);
    print_mine_output(cfg, d, report, out);
}

void cmd_mine_all(const RunConfig& cfg, std::ostream& out) {
    NumericalDataset d = ingest_csv(cfg.input_path);
    tca::AllThetaOptions options;
    options.min_extent = cfg.constraints.min_extent;
    options.min_intent = cfg.constraints.min_intent;
    options.min_modus = cfg.min_modus;
    auto start = std::chrono::steady_clock::now();
    std::vector<tca::ThetaAnnotatedBicluster> found = tca::mine_all_theta(d, options);
    auto elapsed = std::chrono::steady_clock::now() - start;
    if (cfg.format == OutputFormat::csv) {
        out << render_biclusters_csv(d, found);
        return;
    }
    scaling::ScaleDimension scale = scaling::interordinal_scale(
        distinct_values(d), scaling::ScaleMode::interordinal_observed);
    ordered_json doc;
    doc["dataset"] = dataset_summary(d);
    doc["parameters"] = {{"command", "mine-all"}, {"scale", "observed"}};
    doc["stats"] = {{"conditions", scale.conditions.size()}, {"biclusters", found.size()}};
    doc["timing"] = {{"elapsed_ms", to_ms(std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed))}};
    doc["biclusters"] = biclusters_json(d, found);
    out << doc.dump(2) << '\n';
}

void cmd_stats(const RunConfig& cfg, std::ostream& out) {
    NumericalDataset d = ingest_csv(cfg.input_path);
    std::vector<double> w = distinct_values(d);
    out << "objects: " << d.object_count() << '\n';
    out << "attributes: " << d.attribute_count() << '\n';
    out << "distinct_values: " << w.size() << '\n';
    scaling::ScaleDimension inter = scaling::interordinal_scale(w, cfg.scale_mode);
    out << "interordinal_conditions: " << inter.conditions.size() << '\n';
    if (cfg.theta) {
        scaling::TriadicContext ctx(d, scaling::tolerance_blocks(w, Theta(*cfg.theta)));
        out << "theta: " << format_number(*cfg.theta) << '\n';
        out << "blocks: " << ctx.condition_count() << '\n';
        out << "context_cells: "
            << d.object_count() * d.attribute_count() * ctx.condition_count() << '\n';
        out << "crosses: " << ctx.cross_count() << '\n';
        out << "density: " << format_number(scaling::context_density(ctx)) << '\n';
    }
}

void cmd_bench(const RunConfig& cfg, std::ostream& out) {
    NumericalDataset d = synthetic_dataset(cfg.rows, cfg.cols, cfg.vmax, cfg.seed, cfg.planted);
    std::vector<MetricsRow> rows;
    std::size_t steps = std::max<std::size_t>(1, cfg.steps);
    for (std::size_t k = 0; k < steps; ++k) {
        double theta = steps == 1 ? 0.0 : cfg.vmax * static_cast<double>(k) / (steps - 1);
        trimax::MiningReport report =
            trimax::trimax_mine(d, Theta(theta), cfg.constraints, cfg.threads);
        rows.push_back(metrics_from_report(d, theta, report));
    }
    out << render_metrics_csv(rows);
}

void cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    NumericalDataset d = ingest_csv(cfg.input_path);
    std::vector<tca::ThetaAnnotatedBicluster> found;
    for (Bicluster& b : oracle::oracle_maximal_biclusters(d, Theta(*cfg.theta))) {
        auto [lo, hi] = cell_range(d, b);
        found.push_back({std::move(b), Theta(hi - lo), {lo, hi}});
    }
    out << render_biclusters_csv(d, found);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximal similar-value biclusters via triadic concept analysis"};
    app.require_subcommand(1);

    RunConfig cfg;

    std::map<std::string, scaling::ScaleMode> scale_names{
        {"observed", scaling::ScaleMode::interordinal_observed},
        {"dense", scaling::ScaleMode::interordinal_dense}};

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", cfg.input_path, "CSV dataset")->required();
    };
    auto add_theta = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--theta", cfg.theta, "similarity parameter");
        if (required) opt->required();
    };
    auto add_constraints = [&](CLI::App* cmd) {
        cmd->add_option("--min-rows", cfg.constraints.min_extent, "minimum objects per bicluster");
        cmd->add_option("--max-rows", cfg.constraints.max_extent, "maximum objects per bicluster");
        cmd->add_option("--min-cols", cfg.constraints.min_intent, "minimum attributes per bicluster");
        cmd->add_option("--max-cols", cfg.constraints.max_intent, "maximum attributes per bicluster");
        cmd->add_option("--min-area", cfg.constraints.min_area, "minimum |A|*|B|");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, OutputFormat>{{"json", OutputFormat::json},
                                                    {"csv", OutputFormat::csv}},
                CLI::ignore_case));
    };
    auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App* blocks = app.add_subcommand("blocks", "print the tolerance blocks for a theta");
    add_theta(blocks, true);
    add_input(blocks);

    CLI::App* scale = app.add_subcommand("scale", "print the interordinal scale conditions");
    scale->add_option("--scale", cfg.scale_mode, "observed or dense")
        ->transform(CLI::CheckedTransformer(scale_names, CLI::ignore_case));
    add_input(scale);

    CLI::App* mine = app.add_subcommand("mine", "mine maximal biclusters for a fixed theta");
    add_theta(mine, true);
    add_constraints(mine);
    add_threads(mine);
    add_format(mine);
    add_input(mine);

    CLI::App* mine_all = app.add_subcommand("mine-all",
                                            "mine maximal biclusters for every theta at once");
    mine_all->add_option("--min-rows", cfg.constraints.min_extent, "minimum objects");
    mine_all->add_option("--min-cols", cfg.constraints.min_intent, "minimum attributes");
    mine_all->add_option("--min-modus", cfg.min_modus, "minimum modus size");
    add_format(mine_all);
    add_input(mine_all);

    CLI::App* stats = app.add_subcommand("stats", "dataset and scaled-context statistics");
    add_theta(stats, false);
    stats->add_option("--scale", cfg.scale_mode, "observed or dense")
        ->transform(CLI::CheckedTransformer(scale_names, CLI::ignore_case));
    add_input(stats);

    CLI::App* bench = app.add_subcommand("bench",
                                         "sweep theta on seeded synthetic data, print metrics CSV");
    bench->add_option("--rows", cfg.rows, "synthetic rows")->check(CLI::PositiveNumber);
    bench->add_option("--cols", cfg.cols, "synthetic columns")->check(CLI::PositiveNumber);
    bench->add_option("--vmax", cfg.vmax, "largest synthetic value");
    bench->add_option("--seed", cfg.seed, "RNG seed")->required();
    bench->add_option("--steps", cfg.steps, "number of theta values in the sweep");
    bench->add_option("--plant", cfg.planted, "planted near-constant rectangles");
    add_constraints(bench);
    add_threads(bench);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force miner (debugging)");
    add_theta(oracle_cmd, true);
    add_input(oracle_cmd);
    oracle_cmd->group("");  // hidden

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (blocks->parsed()) cmd_blocks(cfg, out);
        if (scale->parsed()) cmd_scale(cfg, out);
        if (mine->parsed()) cmd_mine(cfg, out);
        if (mine_all->parsed()) cmd_mine_all(cfg, out);
        if (stats->parsed()) cmd_stats(cfg, out);
        if (bench->parsed()) cmd_bench(cfg, out);
        if (oracle_cmd->parsed()) cmd_oracle(cfg, out);
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace tribic::cli
