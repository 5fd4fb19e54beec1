#include "ltwd/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <future>
#include <sstream>
#include <thread>

#include "ltwd/config_io.hpp"
#include "ltwd/metrics.hpp"
#include "ltwd/output.hpp"
#include "ltwd/simulate.hpp"

namespace ltwd {

namespace fs = std::filesystem;

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string engine_id(Model model) { return std::string(kEngineVersion) + "/" + std::string(to_string(model)); }

SimulationConfig config_for(const SimulationConfig& base, const ModelSpec& spec) {
    SimulationConfig cfg = base;
    cfg.model = spec.model;
    if (spec.hk_epsilon) cfg.hk_epsilon = spec.hk_epsilon;
    return cfg;
}

void write_manifest(const fs::path& dir, RunManifest& manifest) {
    manifest.outputs.emplace_back(kManifestFile);
    write_text(dir / kManifestFile, manifest.to_json().dump(2) + "\n");
}

}  // namespace

nlohmann::json RunManifest::to_json() const {
    std::vector<std::string> paths;
    paths.reserve(outputs.size());
    for (const auto& p : outputs) paths.push_back(p.generic_string());
    return {{"engine", engine}, {"seed", seed}, {"timestamp", timestamp}, {"config", config}, {"outputs", paths}};
}

std::string ModelSpec::label() const {
    std::string name(to_string(model));
    if (hk_epsilon) name += "_eps" + format_number(*hk_epsilon);
    return name;
}

ModelSpec parse_model_spec(std::string_view text) {
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto model = parse_model(name);
    if (!model) throw ConfigError("models", "unknown model \"" + std::string(name) + "\"");
    ModelSpec spec{*model, std::nullopt};
    if (colon != std::string_view::npos) {
        if (*model != Model::HkHomogeneous) {
            throw ConfigError("models", "only hk-homogeneous accepts a bound suffix, got \"" + std::string(text) + "\"");
        }
        const std::string value(text.substr(colon + 1));
        std::size_t used = 0;
        double eps = 0.0;
        try {
            eps = std::stod(value, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != value.size() || value.empty()) {
            throw ConfigError("models", "invalid confidence bound \"" + value + "\"");
        }
        spec.hk_epsilon = eps;
    }
    return spec;
}

std::vector<ModelSpec> parse_model_list(std::string_view text) {
    std::vector<ModelSpec> specs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!item.empty()) specs.push_back(parse_model_spec(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (specs.empty()) throw ConfigError("models", "empty model list");
    return specs;
}

SeedRange parse_seed_range(std::string_view text) {
    const auto dots = text.find("..");
    auto parse = [&](std::string_view part) -> std::uint64_t {
        const std::string s(part);
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            if (s.empty() || s.front() == '-') throw std::invalid_argument(s);
            v = std::stoull(s, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw ConfigError("seeds", "expected <start>..<end>, got \"" + std::string(text) + "\"");
        return v;
    };
    if (dots == std::string_view::npos) {
        const auto v = parse(text);
        return {v, v};
    }
    SeedRange range{parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
    if (range.last < range.first) throw ConfigError("seeds", "empty seed range");
    return range;
}

RunManifest run_command(const SimulationConfig& config, const fs::path& out_dir) {
    config.validate();
    const auto record = simulate(config);  // engine errors surface before any file exists

    StagedOutput staged(out_dir);
    RunManifest manifest;
    manifest.config = to_json(config);
    manifest.engine = engine_id(config.model);
    manifest.seed = config.seed;
    manifest.timestamp = utc_timestamp();
    manifest.outputs = write_trajectory(staged.staging(), record, config.epsilon);
    write_manifest(staged.staging(), manifest);
    staged.commit();
    return manifest;
}

RunManifest compare_command(const SimulationConfig& base, const std::vector<ModelSpec>& models, const fs::path& out_dir) {
    if (models.empty()) throw ConfigError("models", "empty model list");
    std::vector<SimulationConfig> configs;
    for (const auto& spec : models) {
        configs.push_back(config_for(base, spec));
        try {
            configs.back().validate();
        } catch (const ConfigError& e) {
            throw ConfigError(spec.label() + "." + e.field(), e.what());
        }
    }
    std::vector<TrajectoryRecord> records;
    for (const auto& cfg : configs) records.push_back(simulate(cfg));

    StagedOutput staged(out_dir);
    RunManifest manifest;
    manifest.engine = std::string(kEngineVersion) + "/compare";
    manifest.seed = base.seed;
    manifest.timestamp = utc_timestamp();
    manifest.config = nlohmann::json::object();

    std::ostringstream table;
    table << "model,converged,iterations,settled_at,variance,range,c_aad,cluster_count\n";
    for (std::size_t k = 0; k < models.size(); ++k) {
        const auto label = models[k].label();
        const auto dir = staged.staging() / label;
        for (const auto& rel : write_trajectory(dir, records[k], configs[k].epsilon)) manifest.outputs.push_back(fs::path(label) / rel);
        manifest.config[label] = to_json(configs[k]);
        const auto& m = records[k].final().metrics;
        table << label << ',' << (records[k].converged ? 1 : 0) << ',' << records[k].steps << ','
              << settled_iteration(records[k], configs[k].epsilon) << ',' << format_number(m.variance) << ',' << format_number(m.range) << ',' << format_number(m.c_aad) << ','
              << m.cluster_count << '\n';
    }
    write_text(staged.staging() / kComparisonFile, table.str());
    manifest.outputs.emplace_back(kComparisonFile);
    write_manifest(staged.staging(), manifest);
    staged.commit();
    return manifest;
}

namespace {

std::string sweep_row(std::uint64_t seed, const SimulationConfig& base) {
    std::ostringstream row;
    row << seed << ',';
    try {
        SimulationConfig cfg = base;
        cfg.seed = seed;
        const auto record = simulate(cfg);
        const auto& m = record.final().metrics;
        row << "ok," << (record.converged ? 1 : 0) << ',' << record.steps << ',' << format_number(m.variance) << ','
            << format_number(m.range) << ',' << format_number(m.c_aad) << ',' << m.cluster_count << ','
            << format_number(record.initial().metrics.avg_degree) << ',' << format_number(m.avg_degree) << ",";
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), ',', ';');
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        row << "error,,,,,,,,," << msg;
    }
    row << '\n';
    return row.str();
}

}  // namespace

RunManifest sweep_command(const SimulationConfig& config, SeedRange seeds, const fs::path& out_dir,
                          unsigned max_threads) {
    config.validate();
    if (seeds.last < seeds.first) throw ConfigError("seeds", "empty seed range");
    const auto count = seeds.last - seeds.first + 1;
    const unsigned threads =
        std::max(1u, max_threads != 0 ? max_threads : std::thread::hardware_concurrency());

    // Rows are produced concurrently but stored by seed offset, so the file
    // does not depend on scheduling.
    std::vector<std::string> rows(count);
    for (std::uint64_t begin = 0; begin < count; begin += threads) {
        const auto end = std::min<std::uint64_t>(count, begin + threads);
        std::vector<std::future<std::string>> batch;
        for (auto k = begin; k < end; ++k) {
            batch.push_back(std::async(std::launch::async, sweep_row, seeds.first + k, std::cref(config)));
        }
        for (auto k = begin; k < end; ++k) rows[k] = batch[k - begin].get();
    }

    StagedOutput staged(out_dir);
    std::string csv = "seed,status,converged,iterations,variance,range,c_aad,cluster_count,avg_degree_initial,avg_degree_final,error\n";
    for (const auto& r : rows) csv += r;
    write_text(staged.staging() / kSweepFile, csv);

    RunManifest manifest;
    manifest.config = to_json(config);
    manifest.engine = engine_id(config.model) + "/sweep";
    manifest.seed = seeds.first;
    manifest.timestamp = utc_timestamp();
    manifest.outputs.emplace_back(kSweepFile);
    write_manifest(staged.staging(), manifest);
    staged.commit();
    return manifest;
}

fs::path metrics_command(const fs::path& opinions_csv, const fs::path& out_dir, double d_max,
                         double cluster_tolerance) {
    const auto by_iteration = read_opinions_csv(opinions_csv);
    std::ostringstream csv;
    csv << "iteration,variance,range,c_aad,cluster_count,delta_max\n";
    for (std::size_t k = 0; k < by_iteration.size(); ++k) {
        const auto& x = by_iteration[k];
        if (x.empty()) throw IoError(opinions_csv.string() + ": iteration " + std::to_string(k) + " has no rows");
        const double dm = k == 0 ? 0.0 : delta_max(by_iteration[k - 1], x);
        csv << k << ',' << format_number(variance(x)) << ',' << format_number(opinion_range(x)) << ','
            << format_number(consensus_index(x, d_max)) << ',' << cluster_count(x, cluster_tolerance) << ','
            << format_number(dm) << '\n';
    }
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
    const auto path = out_dir / "metrics_recomputed.csv";
    write_text(path, csv.str());
    return path;
}

}  // namespace ltwd
