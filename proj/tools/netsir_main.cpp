#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netsir/csv_io.hpp"
#include "netsir/errors.hpp"
#include "netsir/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::string theta_mode;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Scenario file to load");
    cmd->add_option("--preset", opts.preset_name, "Bundled preset: case1, case2 or case3")
        ->check(CLI::IsMember(netsir::preset_names()));
    cmd->add_option("--out", opts.out_dir, "Output directory (overrides the scenario)");
    cmd->add_option("--seed", opts.seed, "Seed override");
    cmd->add_option("--theta-mode", opts.theta_mode, "Theta mode override: closed or summation")
        ->check(CLI::IsMember({"closed", "summation"}));
}

netsir::ScenarioConfig resolve_config(const CommonOpts& opts) {
    if (opts.preset_name.empty() && opts.config_path.empty())
        throw netsir::ConfigError("either --preset or --config is required");
    if (!opts.preset_name.empty() && !opts.config_path.empty())
        throw netsir::ConfigError("--preset and --config are mutually exclusive");

    netsir::ScenarioConfig cfg = !opts.preset_name.empty()
                                     ? netsir::preset(opts.preset_name)
                                     : netsir::load_scenario(opts.config_path);
    if (!opts.config_path.empty() && cfg.name == "scenario")
        cfg.name = std::filesystem::path(opts.config_path).stem().string();
    if (!opts.out_dir.empty())
        cfg.output_dir = opts.out_dir;
    if (opts.seed)
        cfg.seed = *opts.seed;
    if (!opts.theta_mode.empty())
        cfg.theta_mode = opts.theta_mode == "closed" ? netsir::ThetaMode::ClosedForm
                                                     : netsir::ThetaMode::Summation;
    cfg.validate();
    return cfg;
}

std::string out_path(const netsir::ScenarioConfig& cfg, const std::string& suffix) {
    return cfg.output_dir + "/" + cfg.name + "_" + suffix;
}

void prepare_out_dir(const netsir::ScenarioConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec)
        throw netsir::IoError("cannot create output directory '" + cfg.output_dir +
                              "': " + ec.message());
}

void print_counts(const netsir::ScenarioConfig& cfg, const netsir::ImpulseSchedule& schedule) {
    for (int k : cfg.classes)
        std::printf("impulses: p1(%d) = %d, p2(%d) = %d\n", k, schedule.count(1, k), k,
                    schedule.count(2, k));
}

int run_simulate(const CommonOpts& opts) {
    const netsir::ScenarioConfig cfg = resolve_config(opts);
    prepare_out_dir(cfg);

    const netsir::Problem problem = cfg.problem();
    const netsir::ImpulseSchedule schedule = cfg.schedule();
    const netsir::Trajectory traj = netsir::simulate(problem, schedule);
    const netsir::CostBreakdown breakdown =
        netsir::total_cost(traj, schedule, problem.model, problem.costs);

    netsir::write_trajectory_csv(traj, out_path(cfg, "trajectory.csv"));
    netsir::write_cost_series_csv(netsir::cumulative_cost_series(traj, problem.costs),
                                  out_path(cfg, "cost_series.csv"));
    netsir::write_cost_breakdown_csv(breakdown, out_path(cfg, "cost_breakdown.csv"));
    netsir::write_schedule_csv(schedule, out_path(cfg, "schedule.csv"));

    std::printf("scenario %s: J = %.6f\n", cfg.name.c_str(), breakdown.total);
    print_counts(cfg, schedule);
    return kExitOk;
}

int run_evaluate(const CommonOpts& opts) {
    const netsir::ScenarioConfig cfg = resolve_config(opts);
    prepare_out_dir(cfg);

    const netsir::Problem problem = cfg.problem();
    const netsir::ImpulseSchedule schedule = cfg.schedule();
    const netsir::Trajectory traj = netsir::simulate(problem, schedule);
    const netsir::AdjointTrajectory adj = netsir::integrate_adjoint(
        traj, schedule, problem.params, problem.costs, problem.model);
    const netsir::CostBreakdown breakdown =
        netsir::total_cost(traj, schedule, problem.model, problem.costs);
    const auto events = netsir::evaluate_events(problem, schedule, traj, adj, cfg.optimizer);

    netsir::write_trajectory_csv(traj, out_path(cfg, "trajectory.csv"));
    netsir::write_cost_series_csv(netsir::cumulative_cost_series(traj, problem.costs),
                                  out_path(cfg, "cost_series.csv"));
    netsir::write_cost_breakdown_csv(breakdown, out_path(cfg, "cost_breakdown.csv"));
    netsir::write_report_csv(events, out_path(cfg, "report.csv"));

    double max_residual = 0.0;
    for (const auto& e : events)
        max_residual = std::max(max_residual, std::abs(e.delta_value - e.h0_jump));
    std::printf("scenario %s: J = %.6f over %zu events\n", cfg.name.c_str(), breakdown.total,
                events.size());
    std::printf("max |delta_closed_form - h0_jump| = %.6g\n", max_residual);
    std::printf("max no-jump residual = %.6g\n",
                netsir::scan_no_jump_residual(traj, adj, problem.costs));
    print_counts(cfg, schedule);
    return kExitOk;
}

int run_optimize(const CommonOpts& opts, bool times) {
    const netsir::ScenarioConfig cfg = resolve_config(opts);
    prepare_out_dir(cfg);

    const netsir::Problem problem = cfg.problem();
    const netsir::ImpulseSchedule initial = cfg.schedule();
    const netsir::OptimizeResult result =
        times ? netsir::optimize_times(problem, initial, cfg.optimizer)
              : netsir::optimize_intensities(problem, initial, cfg.optimizer);

    netsir::write_schedule_csv(result.schedule, out_path(cfg, "optimized_schedule.csv"));
    netsir::write_report_csv(result.report.events, out_path(cfg, "report.csv"));
    netsir::write_optimize_summary_csv(result.report, out_path(cfg, "optimize_summary.csv"));

    std::printf("scenario %s (%s): J before = %.6f, after = %.6f, sweeps = %d%s\n",
                cfg.name.c_str(), times ? "times" : "intensities", result.report.j_before,
                result.report.j_after, result.report.sweeps,
                result.report.converged ? "" : " (not converged)");
    double max_residual = 0.0;
    for (const auto& e : result.report.events)
        max_residual = std::max(max_residual, std::abs(e.delta_value - e.h0_jump));
    std::printf("max |delta_closed_form - h0_jump| = %.6g\n", max_residual);
    print_counts(cfg, result.schedule);
    return result.report.converged ? kExitOk : kExitNoConvergence;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-strain SIR epidemics over scale-free degree classes with impulsive "
                 "treatment control"};
    app.require_subcommand(1);

    CommonOpts simulate_opts, evaluate_opts, times_opts, intensities_opts;
    auto* simulate = app.add_subcommand("simulate", "Forward pass: trajectory and costs");
    add_common(simulate, simulate_opts);
    auto* evaluate = app.add_subcommand(
        "evaluate", "Forward plus adjoint pass: costs and per-event optimality report");
    add_common(evaluate, evaluate_opts);
    auto* opt_times = app.add_subcommand(
        "optimize-times", "Fixed intensities, search impulse times for stationarity");
    add_common(opt_times, times_opts);
    auto* opt_intensities = app.add_subcommand(
        "optimize-intensities", "Fixed times, search impulse intensities minimizing J");
    add_common(opt_intensities, intensities_opts);

    std::string plot_traj, plot_costs, plot_out = ".", plot_prefix = "series";
    auto* plot = app.add_subcommand("plot-data",
                                    "Split a trajectory CSV into per-compartment series");
    plot->add_option("--trajectory", plot_traj, "Trajectory CSV to split")->required();
    plot->add_option("--cost-series", plot_costs, "Cumulative cost CSV for the J series");
    plot->add_option("--out", plot_out, "Output directory");
    plot->add_option("--prefix", plot_prefix, "Output file prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (simulate->parsed())
            return run_simulate(simulate_opts);
        if (evaluate->parsed())
            return run_evaluate(evaluate_opts);
        if (opt_times->parsed())
            return run_optimize(times_opts, true);
        if (opt_intensities->parsed())
            return run_optimize(intensities_opts, false);
        if (plot->parsed()) {
            const auto written = netsir::emit_plot_data(plot_traj, plot_costs, plot_out,
                                                        plot_prefix);
            std::printf("wrote %zu series files\n", written.size());
            return kExitOk;
        }
    } catch (const netsir::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const netsir::ConfigError& e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitOk;
}
