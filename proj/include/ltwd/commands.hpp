#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ltwd/config.hpp"

namespace ltwd {

inline constexpr std::string_view kEngineVersion = "ltwd-1.0";

struct RunManifest {
    nlohmann::json config;  // fully resolved echo, or one entry per model for compare
    std::string engine;
    std::uint64_t seed = 0;
    std::vector<std::filesystem::path> outputs;  // relative to the output directory
    std::string timestamp;                       // UTC, ISO 8601

    nlohmann::json to_json() const;
};

inline constexpr const char* kManifestFile = "manifest.json";
inline constexpr const char* kComparisonFile = "comparison.csv";
inline constexpr const char* kSweepFile = "sweep.csv";

// A model entry for compare: "hk-homogeneous:0.10" overrides hk.epsilon.
struct ModelSpec {
    Model model = Model::ThreeWay;
    std::optional<double> hk_epsilon;

    std::string label() const;
};

ModelSpec parse_model_spec(std::string_view text);
std::vector<ModelSpec> parse_model_list(std::string_view text);

struct SeedRange {
    std::uint64_t first = 0;
    std::uint64_t last = 0;  // inclusive
};

SeedRange parse_seed_range(std::string_view text);

RunManifest run_command(const SimulationConfig& config, const std::filesystem::path& out_dir);
RunManifest compare_command(const SimulationConfig& base, const std::vector<ModelSpec>& models,
                            const std::filesystem::path& out_dir);
RunManifest sweep_command(const SimulationConfig& config, SeedRange seeds, const std::filesystem::path& out_dir,
                          unsigned max_threads = 0);

// Recomputes variance, range, c_aad, cluster count and delta_max from an
// opinions.csv. Writes metrics_recomputed.csv into out_dir.
std::filesystem::path metrics_command(const std::filesystem::path& opinions_csv, const std::filesystem::path& out_dir,
                                      double d_max, double cluster_tolerance);

}  // namespace ltwd
