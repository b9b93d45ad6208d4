#include "netsir/csv_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "netsir/errors.hpp"

namespace netsir {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

double to_double(const std::string& s, const std::string& path, int row) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (errno != 0 || end == s.c_str() || *end != '\0')
        throw ConfigError(path + ": row " + std::to_string(row) + ": '" + s +
                          "' is not a real number");
    return v;
}

int to_int(const std::string& s, const std::string& path, int row) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (errno != 0 || end == s.c_str() || *end != '\0')
        throw ConfigError(path + ": row " + std::to_string(row) + ": '" + s +
                          "' is not an integer");
    return static_cast<int>(v);
}

} // namespace

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "time,k,S,I1,I2,R,jump_flag,strain,applied_intensity\n";

    // Jump records grouped by their right-limit node.
    std::map<std::size_t, std::vector<const JumpRecord*>> by_node;
    for (const auto& j : traj.jumps)
        by_node[j.node].push_back(&j);

    for (std::size_t node = 0; node < traj.n_nodes(); ++node) {
        const auto jumps_here = by_node.find(node);
        for (std::size_t ci = 0; ci < traj.n_classes(); ++ci) {
            const int k = traj.classes[ci];
            const DegreeClassState& st = traj.at(node, ci);
            int jump_flag = 0, strain = 0;
            double applied = 0.0;
            if (jumps_here != by_node.end()) {
                for (const JumpRecord* j : jumps_here->second)
                    if (j->k == k) {
                        jump_flag = 1;
                        strain = j->strain; // last record wins on double strikes
                        applied = j->applied;
                    }
            }
            out << fmt(traj.times[node]) << "," << k << "," << fmt(st.s) << "," << fmt(st.i1)
                << "," << fmt(st.i2) << "," << fmt(st.r) << "," << jump_flag << "," << strain
                << "," << fmt(applied) << "\n";
        }
    }
    if (!out)
        throw IoError("failed while writing '" + path + "'");
}

std::vector<TrajectoryRow> read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open trajectory file '" + path + "'");

    std::vector<TrajectoryRow> rows;
    std::string line;
    int row = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty())
            continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("time,", 0) == 0)
                continue; // header row
        }
        const auto fields = split_csv(line);
        if (fields.size() != 9)
            throw ConfigError(path + ": row " + std::to_string(row) + ": expected 9 fields, got " +
                              std::to_string(fields.size()));
        TrajectoryRow r;
        r.time = to_double(fields[0], path, row);
        r.k = to_int(fields[1], path, row);
        r.s = to_double(fields[2], path, row);
        r.i1 = to_double(fields[3], path, row);
        r.i2 = to_double(fields[4], path, row);
        r.r = to_double(fields[5], path, row);
        r.jump_flag = to_int(fields[6], path, row);
        r.strain = to_int(fields[7], path, row);
        r.applied = to_double(fields[8], path, row);
        rows.push_back(r);
    }
    return rows;
}

void write_cost_series_csv(const std::vector<std::pair<double, double>>& series,
                           const std::string& path) {
    std::ofstream out = open_out(path);
    out << "time,cumulative_J\n";
    for (const auto& [t, j] : series)
        out << fmt(t) << "," << fmt(j) << "\n";
    if (!out)
        throw IoError("failed while writing '" + path + "'");
}

void write_cost_breakdown_csv(const CostBreakdown& b, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "running_infection_1,running_infection_2,recovery_benefit,impulse_cost_1,"
           "impulse_cost_2,total\n";
    out << fmt(b.running_infection_1) << "," << fmt(b.running_infection_2) << ","
        << fmt(b.recovery_benefit) << "," << fmt(b.impulse_cost_1) << ","
        << fmt(b.impulse_cost_2) << "," << fmt(b.total) << "\n";
    if (!out)
        throw IoError("failed while writing '" + path + "'");
}

void write_report_csv(const std::vector<EventReport>& events, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "strain,k,tau,c,delta_value,h0_jump,variational_residual,classification\n";
    for (const auto& e : events)
        out << e.strain << "," << e.k << "," << fmt(e.tau) << "," << fmt(e.c) << ","
            << fmt(e.delta_value) << "," << fmt(e.h0_jump) << ","
            << fmt(e.variational_residual) << "," << to_string(e.classification) << "\n";
    if (!out)
        throw IoError("failed while writing '" + path + "'");
}

void write_schedule_csv(const ImpulseSchedule& schedule, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "strain,k,tau,c,u_bar\n";
    for (const auto& e : schedule.events())
        out << e.strain << "," << e.k << "," << fmt(e.tau) << "," << fmt(e.c) << ","
            << fmt(e.u_bar) << "\n";
    if (!out)
        throw IoError("failed while writing '" + path + "'");
}

void write_optimize_summary_csv(const OptimalityReport& report, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "j_before,j_after,sweeps,converged,max_no_jump_residual\n";
    out << fmt(report.j_before) << "," << fmt(report.j_after) << "," << report.sweeps << ","
        << (report.converged ? 1 : 0) << "," << fmt(report.max_no_jump_residual) << "\n";
    if (!out)
        throw IoError("failed while writing '" + path + "'");
}

std::vector<std::string> emit_plot_data(const std::string& trajectory_csv,
                                        const std::string& cost_series_csv,
                                        const std::string& out_dir,
                                        const std::string& prefix) {
    const auto rows = read_trajectory_csv(trajectory_csv);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

    std::vector<std::string> written;
    std::map<int, std::ofstream> files[4];
    const char* comp_names[4] = {"S", "I1", "I2", "R"};

    for (const auto& r : rows) {
        for (int comp = 0; comp < 4; ++comp) {
            auto it = files[comp].find(r.k);
            if (it == files[comp].end()) {
                const std::string path = out_dir + "/" + prefix + "_k" + std::to_string(r.k) +
                                         "_" + comp_names[comp] + ".dat";
                it = files[comp].emplace(r.k, open_out(path)).first;
                written.push_back(path);
            }
            const double value = comp == 0 ? r.s : comp == 1 ? r.i1 : comp == 2 ? r.i2 : r.r;
            it->second << fmt(r.time) << " " << fmt(value) << "\n";
        }
    }

    if (!cost_series_csv.empty()) {
        std::ifstream in(cost_series_csv);
        if (!in)
            throw IoError("cannot open cost series file '" + cost_series_csv + "'");
        const std::string path = out_dir + "/" + prefix + "_J.dat";
        std::ofstream out = open_out(path);
        written.push_back(path);
        std::string line;
        int row = 0;
        while (std::getline(in, line)) {
            ++row;
            if (line.empty() || line.rfind("time,", 0) == 0)
                continue;
            const auto fields = split_csv(line);
            if (fields.size() != 2)
                throw ConfigError(cost_series_csv + ": row " + std::to_string(row) +
                                  ": expected 2 fields");
            out << fmt(to_double(fields[0], cost_series_csv, row)) << " "
                << fmt(to_double(fields[1], cost_series_csv, row)) << "\n";
        }
    }
    return written;
}

} // namespace netsir
