#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltwd/trajectory.hpp"

namespace ltwd {

// File-system failure, with the offending path in the message.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kOpinionsFile = "opinions.csv";
inline constexpr const char* kTermsFile = "terms.csv";
inline constexpr const char* kMetricsFile = "metrics.csv";
inline constexpr const char* kSummaryFile = "summary.json";
inline constexpr const char* kNetworkDir = "networks";

// Shortest round-trip decimal form of a double.
std::string format_number(double value);

std::string network_file_name(std::size_t iteration);

nlohmann::json summary_json(const TrajectoryRecord& record, double epsilon);

/// Writes opinions.csv, terms.csv, metrics.csv, networks/network_<k>.edges and
/// summary.json under `dir`. Returns the written paths relative to `dir`.
std::vector<std::filesystem::path> write_trajectory(const std::filesystem::path& dir, const TrajectoryRecord& record,
                                                    double epsilon);

// Values of an opinions.csv, grouped by iteration then agent.
std::vector<std::vector<double>> read_opinions_csv(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);

/// Collects outputs in a staging directory and moves them into place only
/// once every file has been written. Destruction without commit() removes
/// the staging directory, so a failed run leaves nothing behind.
class StagedOutput {
public:
    explicit StagedOutput(std::filesystem::path target);
    ~StagedOutput();
    StagedOutput(const StagedOutput&) = delete;
    StagedOutput& operator=(const StagedOutput&) = delete;

    const std::filesystem::path& staging() const { return staging_; }
    const std::filesystem::path& target() const { return target_; }
    void commit();

private:
    std::filesystem::path target_;
    std::filesystem::path staging_;
};

}  // namespace ltwd
