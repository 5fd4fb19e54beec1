#include "ltwd/output.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "ltwd/network.hpp"

namespace ltwd {

namespace fs = std::filesystem;

std::string format_number(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, end);
}

std::string network_file_name(std::size_t iteration) { return "network_" + std::to_string(iteration) + ".edges"; }

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

nlohmann::json summary_json(const TrajectoryRecord& record, double epsilon) {
    const auto& last = record.final();
    const auto& m = last.metrics;
    return {{"converged", record.converged},
            {"iterations", record.steps},
            {"settled_at", settled_iteration(record, epsilon)},
            {"agents", last.values.size()},
            {"final",
             {{"variance", m.variance},
              {"range", m.range},
              {"c_aad", m.c_aad},
              {"cluster_count", m.cluster_count},
              {"avg_degree", m.avg_degree},
              {"isolated", m.isolated},
              {"delta_max", m.delta_max},
              {"terms", last.terms}}},
            {"initial", {{"avg_degree", record.initial().metrics.avg_degree}}}};
}

std::vector<fs::path> write_trajectory(const fs::path& dir, const TrajectoryRecord& record, double epsilon) {
    std::error_code ec;
    fs::create_directories(dir / kNetworkDir, ec);
    if (ec) throw IoError("cannot create " + (dir / kNetworkDir).string() + ": " + ec.message());

    std::ostringstream opinions;
    std::ostringstream terms;
    std::ostringstream metrics;
    opinions << "iteration,agent,value,term_index\n";
    metrics << "iteration,variance,range,c_aad,avg_degree,isolated,delta_max\n";
    terms << "iteration";
    if (!record.iterations.empty()) {
        for (std::size_t a = 0; a < record.initial().terms.size(); ++a) terms << ",agent_" << a;
    }
    terms << '\n';

    std::vector<fs::path> written{kOpinionsFile, kTermsFile, kMetricsFile};
    for (const auto& it : record.iterations) {
        for (std::size_t a = 0; a < it.values.size(); ++a) {
            opinions << it.iteration << ',' << a << ',' << format_number(it.values[a]) << ',' << it.terms[a] << '\n';
        }
        terms << it.iteration;
        for (int t : it.terms) terms << ',' << t;
        terms << '\n';
        const auto& m = it.metrics;
        metrics << it.iteration << ',' << format_number(m.variance) << ',' << format_number(m.range) << ','
                << format_number(m.c_aad) << ',' << format_number(m.avg_degree) << ',' << m.isolated << ','
                << format_number(m.delta_max) << '\n';

        std::ostringstream edges;
        write_edge_list(edges, it.network);
        const fs::path rel = fs::path(kNetworkDir) / network_file_name(it.iteration);
        write_text(dir / rel, edges.str());
        written.push_back(rel);
    }
    write_text(dir / kOpinionsFile, opinions.str());
    write_text(dir / kTermsFile, terms.str());
    write_text(dir / kMetricsFile, metrics.str());
    write_text(dir / kSummaryFile, summary_json(record, epsilon).dump(2) + "\n");
    written.emplace_back(kSummaryFile);
    return written;
}

std::vector<std::vector<double>> read_opinions_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("iteration,agent,value", 0) != 0) {
        throw IoError(path.string() + ": missing \"iteration,agent,value,...\" header");
    }
    std::vector<std::vector<double>> by_iteration;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string iter_s, agent_s, value_s;
        if (!std::getline(fields, iter_s, ',') || !std::getline(fields, agent_s, ',') ||
            !std::getline(fields, value_s, ',')) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": malformed row");
        }
        try {
            const auto iter = std::stoul(iter_s);
            const auto agent = std::stoul(agent_s);
            const double value = std::stod(value_s);
            if (iter >= by_iteration.size()) by_iteration.resize(iter + 1);
            auto& row = by_iteration[iter];
            if (agent != row.size()) {
                throw IoError(path.string() + ":" + std::to_string(line_no) + ": agents must appear in order");
            }
            row.push_back(value);
        } catch (const std::logic_error&) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": malformed number");
        }
    }
    return by_iteration;
}

StagedOutput::StagedOutput(fs::path target) : target_(std::move(target)) {
    std::error_code ec;
    fs::create_directories(target_, ec);
    if (ec) throw IoError("cannot create output directory " + target_.string() + ": " + ec.message());
    staging_ = target_ / (".staging-" + std::to_string(::getpid()));
    fs::remove_all(staging_, ec);
    fs::create_directories(staging_, ec);
    if (ec) throw IoError("cannot create staging directory " + staging_.string() + ": " + ec.message());
}

StagedOutput::~StagedOutput() {
    std::error_code ec;
    fs::remove_all(staging_, ec);
}

void StagedOutput::commit() {
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(staging_)) {
        const auto dest = target_ / entry.path().filename();
        fs::remove_all(dest, ec);
        fs::rename(entry.path(), dest, ec);
        if (ec) throw IoError("cannot move " + entry.path().string() + " to " + dest.string() + ": " + ec.message());
    }
}

}  // namespace ltwd
