#ifndef NETSIR_CSV_IO_HPP
#define NETSIR_CSV_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "netsir/cost.hpp"
#include "netsir/dynamics.hpp"
#include "netsir/optimality.hpp"

namespace netsir {

/// Columns: time,k,S,I1,I2,R,jump_flag,strain,applied_intensity.
/// One row per (grid node, class); post-jump rows carry jump_flag=1 with the
/// strain and the applied magnitude, so both limits of every jump appear.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// One row of a parsed trajectory file.
struct TrajectoryRow {
    double time = 0.0;
    int k = 0;
    double s = 0.0, i1 = 0.0, i2 = 0.0, r = 0.0;
    int jump_flag = 0;
    int strain = 0;
    double applied = 0.0;
};

/// Parses a trajectory CSV; malformed rows raise ConfigError naming the row.
std::vector<TrajectoryRow> read_trajectory_csv(const std::string& path);

/// Columns: time,cumulative_J.
void write_cost_series_csv(const std::vector<std::pair<double, double>>& series,
                           const std::string& path);

/// Single CSV row with the cost components and the total.
void write_cost_breakdown_csv(const CostBreakdown& breakdown, const std::string& path);

/// Columns: strain,k,tau,c,delta_value,h0_jump,variational_residual,classification.
void write_report_csv(const std::vector<EventReport>& events, const std::string& path);

/// Columns: strain,k,tau,c,u_bar. Readable back through scenario event lines.
void write_schedule_csv(const ImpulseSchedule& schedule, const std::string& path);

/// Single row: j_before,j_after,sweeps,converged,max_no_jump_residual.
void write_optimize_summary_csv(const OptimalityReport& report, const std::string& path);

/*! Splits a trajectory CSV into two-column whitespace series, one file per
 *  (class, compartment): <prefix>_k<k>_<comp>.dat under out_dir. When a
 *  cost-series CSV is supplied its cumulative values become <prefix>_J.dat.
 *  Returns the paths written.
 */
std::vector<std::string> emit_plot_data(const std::string& trajectory_csv,
                                        const std::string& cost_series_csv,
                                        const std::string& out_dir,
                                        const std::string& prefix);

} // namespace netsir

#endif
