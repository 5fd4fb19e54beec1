// Command-line front end: run, compare, sweep and metrics verbs.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ltwd/commands.hpp"
#include "ltwd/config_io.hpp"
#include "ltwd/output.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

ltwd::SimulationConfig load_with_seed(const std::string& path, const std::optional<std::uint64_t>& seed) {
    auto cfg = ltwd::load_config(path);
    if (seed) cfg.seed = *seed;
    return cfg;
}

void report(const ltwd::RunManifest& manifest, const std::string& out) {
    std::cout << manifest.engine << ": wrote " << manifest.outputs.size() << " files to " << out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linguistic three-way-decision opinion dynamics simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    std::string models;
    std::string seeds;
    std::string opinions_csv;
    double d_max = 0.5;
    std::optional<double> cluster_tolerance;
    unsigned threads = 0;

    auto* run = app.add_subcommand("run", "Run one simulation and write its trajectory");
    run->add_option("--config", config_path, "Config JSON")->required()->check(CLI::ExistingFile);
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--seed", seed, "Override the config seed");

    auto* compare = app.add_subcommand("compare", "Run several models from the same initial opinions");
    compare->add_option("--config", config_path, "Base config JSON")->required()->check(CLI::ExistingFile);
    compare->add_option("--out", out_dir, "Output directory");
    compare->add_option("--seed", seed, "Override the config seed");
    compare->add_option("--models", models,
                        "Comma list: threeway, degroot-uniform, degroot-distance, hk-homogeneous[:eps], "
                        "hk-heterogeneous")
        ->required();

    auto* sweep = app.add_subcommand("sweep", "Run one config over a seed range");
    sweep->add_option("--config", config_path, "Config JSON")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out_dir, "Output directory");
    sweep->add_option("--seeds", seeds, "Inclusive range <start>..<end>")->required();
    sweep->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    auto* metrics = app.add_subcommand("metrics", "Recompute consensus metrics from an opinions CSV");
    metrics->add_option("--opinions", opinions_csv, "opinions.csv from a previous run")
        ->required()
        ->check(CLI::ExistingFile);
    metrics->add_option("--out", out_dir, "Output directory");
    metrics->add_option("--config", config_path, "Config JSON supplying d_max and cluster tolerance")
        ->check(CLI::ExistingFile);
    metrics->add_option("--d-max", d_max, "Maximum possible deviation");
    metrics->add_option("--cluster-tolerance", cluster_tolerance, "Cluster gap tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run->parsed()) {
            report(ltwd::run_command(load_with_seed(config_path, seed), out_dir), out_dir);
        } else if (compare->parsed()) {
            const auto specs = ltwd::parse_model_list(models);
            report(ltwd::compare_command(load_with_seed(config_path, seed), specs, out_dir), out_dir);
        } else if (sweep->parsed()) {
            const auto range = ltwd::parse_seed_range(seeds);
            report(ltwd::sweep_command(ltwd::load_config(config_path), range, out_dir, threads), out_dir);
        } else if (metrics->parsed()) {
            double tolerance = 0.0;
            if (!config_path.empty()) {
                const auto cfg = ltwd::load_config(config_path);
                if (metrics->count("--d-max") == 0) d_max = cfg.d_max;
                tolerance = cfg.resolved_cluster_tolerance();
            } else {
                tolerance = ltwd::LinguisticTermSet(3, 2.0).min_gap() / 2.0;
            }
            if (cluster_tolerance) tolerance = *cluster_tolerance;
            std::cout << "wrote " << ltwd::metrics_command(opinions_csv, out_dir, d_max, tolerance).string() << '\n';
        }
    } catch (const ltwd::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}
