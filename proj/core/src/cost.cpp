#include "netsir/cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace netsir {

namespace {

constexpr double kTimeTol = 1e-9;

void check_consistency(const Trajectory& traj, const ImpulseSchedule& schedule) {
    if (traj.jumps.size() != schedule.size())
        throw std::invalid_argument("schedule and trajectory disagree on the event count");
    // Both sides are ordered by (time, k, strain).
    const auto& events = schedule.events();
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& e = events[i];
        const auto& j = traj.jumps[i];
        if (e.strain != j.strain || e.k != j.k || std::abs(e.tau - j.time) > kTimeTol ||
            e.c != j.nominal)
            throw std::invalid_argument("schedule event " + std::to_string(i) +
                                        " does not match the trajectory's jump record");
    }
}

} // namespace

void CostModel::validate() const {
    if (!(a1 > 0.0) || !(a2 > 0.0) || !(b1 > 0.0) || !(b2 > 0.0))
        throw std::invalid_argument("cost slopes a_i, b_i must be strictly positive");
    if (!(g_coeff >= 0.0))
        throw std::invalid_argument("recovery benefit slope must be nonnegative");
}

double running_cost_rate(const DegreeClassState& state, int k, const CostModel& costs) {
    return costs.a1 * k * state.i1 + costs.a2 * k * state.i2 - costs.g_coeff * state.r;
}

double impulse_cost(const DegreeClassState& post_state, int strain, double c, int k,
                    const CostModel& costs) {
    if (strain != 1 && strain != 2)
        throw std::domain_error("strain must be 1 or 2");
    if (c < 0.0)
        throw std::domain_error("impulse intensity must be nonnegative");
    return costs.b(strain) * k * c * post_state.infected(strain);
}

CostBreakdown total_cost(const Trajectory& traj, const ImpulseSchedule& schedule,
                         const NetworkModel& /*model*/, const CostModel& costs) {
    check_consistency(traj, schedule);

    CostBreakdown out;
    const std::size_t nc = traj.n_classes();
    for (std::size_t node = 0; node + 1 < traj.n_nodes(); ++node) {
        const double dt = traj.times[node + 1] - traj.times[node];
        if (dt <= 0.0)
            continue; // jump pair, zero width
        for (std::size_t ci = 0; ci < nc; ++ci) {
            const int k = traj.classes[ci];
            const auto& a = traj.at(node, ci);
            const auto& b = traj.at(node + 1, ci);
            out.running_infection_1 += 0.5 * dt * costs.a1 * k * (a.i1 + b.i1);
            out.running_infection_2 += 0.5 * dt * costs.a2 * k * (a.i2 + b.i2);
            out.recovery_benefit += 0.5 * dt * costs.g_coeff * (a.r + b.r);
        }
    }
    for (const auto& jump : traj.jumps) {
        const DegreeClassState& eval =
            costs.impulse_cost_state == ImpulseCostState::PostJump ? jump.post : jump.pre;
        const double h = impulse_cost(eval, jump.strain, jump.nominal, jump.k, costs);
        if (jump.strain == 1)
            out.impulse_cost_1 += h;
        else
            out.impulse_cost_2 += h;
    }
    out.total = out.running_infection_1 + out.running_infection_2 - out.recovery_benefit +
                out.impulse_cost_1 + out.impulse_cost_2;
    return out;
}

std::vector<std::pair<double, double>> cumulative_cost_series(const Trajectory& traj,
                                                              const CostModel& costs) {
    std::vector<std::pair<double, double>> series;
    series.reserve(traj.n_nodes());
    const std::size_t nc = traj.n_classes();

    double acc = 0.0;
    std::size_t next_jump = 0;
    for (std::size_t node = 0; node < traj.n_nodes(); ++node) {
        if (node > 0) {
            const double dt = traj.times[node] - traj.times[node - 1];
            if (dt > 0.0)
                for (std::size_t ci = 0; ci < nc; ++ci)
                    acc += 0.5 * dt *
                           (running_cost_rate(traj.at(node - 1, ci), traj.classes[ci], costs) +
                            running_cost_rate(traj.at(node, ci), traj.classes[ci], costs));
        }
        while (next_jump < traj.jumps.size() && traj.jumps[next_jump].node == node) {
            const auto& jump = traj.jumps[next_jump];
            const DegreeClassState& eval =
                costs.impulse_cost_state == ImpulseCostState::PostJump ? jump.post : jump.pre;
            acc += impulse_cost(eval, jump.strain, jump.nominal, jump.k, costs);
            ++next_jump;
        }
        series.emplace_back(traj.times[node], acc);
    }
    return series;
}

} // namespace netsir
