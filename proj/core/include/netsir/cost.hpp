#ifndef NETSIR_COST_HPP
#define NETSIR_COST_HPP

#include <utility>
#include <vector>

#include "netsir/dynamics.hpp"

namespace netsir {

/// Which side of a jump the treatment cost reads the infected fraction from.
enum class ImpulseCostState { PostJump, PreJump };

/// Linear cost family: infection cost f_i(x) = a_i * k * x, treatment cost
/// h_i = b_i * k * c * I_i, recovery benefit g(R) = g_coeff * R.
struct CostModel {
    double a1 = 0.0;
    double a2 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double g_coeff = 0.0;
    ImpulseCostState impulse_cost_state = ImpulseCostState::PostJump;

    double a(int strain) const { return strain == 1 ? a1 : a2; }
    double b(int strain) const { return strain == 1 ? b1 : b2; }
    /// Throws std::invalid_argument unless a_i, b_i > 0 and g_coeff >= 0.
    void validate() const;

    bool operator==(const CostModel&) const = default;
};

struct CostBreakdown {
    double running_infection_1 = 0.0;
    double running_infection_2 = 0.0;
    double recovery_benefit = 0.0; ///< entered with a minus sign in total
    double impulse_cost_1 = 0.0;
    double impulse_cost_2 = 0.0;
    double total = 0.0;
};

/// Running cost density a1*k*I1 + a2*k*I2 - g_coeff*R of one class.
double running_cost_rate(const DegreeClassState& state, int k, const CostModel& costs);

/// Treatment cost b_i * k * c * I_i of one impulse, read at the supplied
/// (conventionally post-jump) state. Domain error for negative c.
double impulse_cost(const DegreeClassState& post_state, int strain, double c, int k,
                    const CostModel& costs);

/*! Aggregated cost of a stored trajectory: composite trapezoid over the grid
 *  (jump pairs contribute zero width, so discontinuities never straddle a
 *  panel), plus the per-impulse treatment costs, summed unweighted over the
 *  simulated classes.
 *
 *  The schedule must be the one the trajectory was produced with; a
 *  mismatch throws std::invalid_argument.
 */
CostBreakdown total_cost(const Trajectory& traj, const ImpulseSchedule& schedule,
                         const NetworkModel& model, const CostModel& costs);

/// Cumulative cost J(t) at every grid node; right-limit nodes include the
/// treatment cost of the jump, so the series shows the impulse steps.
std::vector<std::pair<double, double>> cumulative_cost_series(const Trajectory& traj,
                                                              const CostModel& costs);

} // namespace netsir

#endif
