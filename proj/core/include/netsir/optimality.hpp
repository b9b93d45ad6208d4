#ifndef NETSIR_OPTIMALITY_HPP
#define NETSIR_OPTIMALITY_HPP

#include <string>
#include <vector>

#include "netsir/cost.hpp"
#include "netsir/dynamics.hpp"

namespace netsir {

/// Costate of one degree class. All four components vanish at the terminal
/// time and pass through impulses continuously.
struct AdjointState {
    double lam_s = 0.0;
    double lam_i1 = 0.0;
    double lam_i2 = 0.0;
    double lam_r = 0.0;

    double lam_i(int strain) const { return strain == 1 ? lam_i1 : lam_i2; }

    bool operator==(const AdjointState&) const = default;
};

/// Costate values on the same grid as the forward Trajectory.
struct AdjointTrajectory {
    std::vector<int> classes;
    std::vector<double> times;
    std::vector<char> right_limit;
    std::vector<AdjointState> states;

    std::size_t n_nodes() const { return times.size(); }
    std::size_t n_classes() const { return classes.size(); }
    const AdjointState& at(std::size_t node, std::size_t class_idx) const {
        return states[node * classes.size() + class_idx];
    }
};

/// Flow-phase Hamiltonian of one class: minus the running cost plus the
/// adjoint-weighted dynamics.
double hamiltonian_h0(const DegreeClassState& state, const AdjointState& adjoint, int k,
                      const EpidemicParams& params, const CostModel& costs,
                      double theta1, double theta2);

/*! Costate derivative (lam_s', lam_i1', lam_i2', lam_r') of one class.
 *
 *  In summation mode the infected compartments feed back into their own
 *  field, which adds the self-coupling terms delta_ik * S * I_i * dTheta/dI;
 *  closed-form mode drops them because theta is state-independent.
 */
std::array<double, 4> adjoint_rhs(const DegreeClassState& state, const AdjointState& adjoint,
                                  int k, const EpidemicParams& params, const CostModel& costs,
                                  const NetworkModel& model, double theta1, double theta2);

/*! Backward pass over a stored trajectory: starts from zero costates at the
 *  horizon, runs fourth-order steps on the forward grid (mid-step states come
 *  from cubic Hermite interpolation of the stored nodes), and copies values
 *  across jump pairs, where the costate is continuous.
 */
AdjointTrajectory integrate_adjoint(const Trajectory& traj, const ImpulseSchedule& schedule,
                                    const EpidemicParams& params, const CostModel& costs,
                                    const NetworkModel& model);

/// Jump-phase Hamiltonian: -h_i(c) + (lam_r - lam_i) * nu, with nu the
/// applied (clamped) magnitude. Domain error for negative c.
double impulse_hamiltonian(const AdjointState& adjoint_post, int strain, double c,
                           double applied, const DegreeClassState& post_state, int k,
                           const CostModel& costs);

/// Per-event state/adjoint/field snapshot on one side of a jump.
struct EventSnapshot {
    DegreeClassState state;
    AdjointState adjoint;
    double theta1 = 0.0;
    double theta2 = 0.0;
};

/// Interior-time stationarity quantity H0(tau+) - H0(tau-). The jump-phase
/// Hamiltonian carries no explicit time dependence here, so this difference
/// alone decides the three-way sign condition at an optimal impulse time.
double h0_jump(const EventSnapshot& pre, const EventSnapshot& post, int k,
               const EpidemicParams& params, const CostModel& costs);

/*! Closed-form stationarity expression assembled from the event's two-sided
 *  snapshots. Kept verbatim for cross-checking against h0_jump; the residual
 *  between the two is reported, never asserted.
 */
double delta_closed_form(const DegreeClassState& pre_state, const DegreeClassState& post_state,
                         const AdjointState& adjoint_pre, const AdjointState& adjoint_post,
                         int strain, double c, int k, const EpidemicParams& params,
                         const CostModel& costs, const NetworkModel& model,
                         double theta_pre, double theta_post);

/// Slope of the jump-phase Hamiltonian in the intensity at the chosen c,
/// under the cost model's pre/post evaluation convention.
double impulse_hamiltonian_slope(const AdjointState& adjoint_post,
                                 const DegreeClassState& post_state, int strain, double c,
                                 int k, const CostModel& costs);

/// Worst-case violation of the variational inequality
/// dHc/dnu * (nu - c) <= 0 over nu in [0, u_bar]; zero when satisfied.
/// Domain error when c lies outside [0, u_bar].
double variational_residual(const AdjointState& adjoint_post,
                            const DegreeClassState& post_state, int strain, double c,
                            double u_bar, int k, const CostModel& costs);

/// No-jump condition at a flow point: positive when an impulse of strain i
/// would improve the Hamiltonian, i.e. a beneficial jump was foregone.
double no_jump_residual(const AdjointState& adjoint, const DegreeClassState& state, int strain,
                        int k, const CostModel& costs);

enum class EventClass { InteriorStationary, BoundaryStart, BoundaryEnd, Violated };

std::string to_string(EventClass c);

struct EventReport {
    int strain = 1;
    int k = 1;
    double tau = 0.0;
    double c = 0.0;
    double delta_value = 0.0;           ///< closed-form expression
    double h0_jump = 0.0;               ///< authoritative stationarity quantity
    double stationarity_residual = 0.0; ///< |h0_jump| against the scaled tolerance
    double variational_residual = 0.0;
    EventClass classification = EventClass::Violated;
};

struct OptimalityReport {
    std::vector<EventReport> events;
    bool converged = true;
    int sweeps = 0;
    double j_before = 0.0;
    double j_after = 0.0;
    double max_no_jump_residual = 0.0;
};

struct OptimizerSettings {
    double tol_tau = 1e-3;           ///< time movement tolerance
    double tol_c = 1e-4;             ///< intensity movement tolerance
    double tol_stationarity = 1e-4;  ///< relative: scaled by 1 + |H0(tau-)|
    int max_sweeps = 50;
    double boundary_band = 2e-3;     ///< tau within this of 0/T counts as boundary

    bool operator==(const OptimizerSettings&) const = default;
};

/// Everything needed to run forward, adjoint and cost passes.
struct Problem {
    NetworkModel model;
    EpidemicParams params;
    CostModel costs;
    std::vector<int> classes;
    std::vector<DegreeClassState> initial;
    double horizon = 0.0;
    double step = 0.01;
};

Trajectory simulate(const Problem& problem, const ImpulseSchedule& schedule);
double evaluate_total_cost(const Problem& problem, const ImpulseSchedule& schedule);

/// Per-event optimality quantities of an already-computed forward/adjoint
/// pair, classified per the three-way sign condition.
std::vector<EventReport> evaluate_events(const Problem& problem, const ImpulseSchedule& schedule,
                                         const Trajectory& traj, const AdjointTrajectory& adj,
                                         const OptimizerSettings& settings);

/// Largest no-jump residual over all flow nodes and both strains.
double scan_no_jump_residual(const Trajectory& traj, const AdjointTrajectory& adj,
                             const CostModel& costs);

struct OptimizeResult {
    ImpulseSchedule schedule;
    OptimalityReport report;
};

/*! Fixed intensities, free times: coordinate-wise root search that drives
 *  each event's H0 jump to zero by bisection inside the window between its
 *  same-stream neighbors, re-running forward and adjoint passes per trial.
 *  Events whose window holds no root slide toward the cheaper end and are
 *  classified by the sign condition. Sweeps stop once the largest movement
 *  drops below tol_tau; exceeding max_sweeps marks the report unconverged.
 */
OptimizeResult optimize_times(const Problem& problem, const ImpulseSchedule& fixed_intensities,
                              const OptimizerSettings& settings = {});

/*! Fixed times, free intensities: projected coordinate descent, one bounded
 *  golden-section line search of the total cost per event and sweep.
 */
OptimizeResult optimize_intensities(const Problem& problem, const ImpulseSchedule& fixed_times,
                                    const OptimizerSettings& settings = {});

} // namespace netsir

#endif
