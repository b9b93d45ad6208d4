#include "netsir/optimality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace netsir {

namespace {

constexpr double kTimeTol = 1e-12;

std::array<double, 2> node_thetas(const Trajectory& traj, std::size_t node,
                                  const EpidemicParams& params, const NetworkModel& model,
                                  const std::vector<double>& weights) {
    if (params.theta_mode == ThetaMode::ClosedForm)
        return closed_form_thetas(params, model);
    double a1 = 0.0, a2 = 0.0;
    for (std::size_t ci = 0; ci < traj.n_classes(); ++ci) {
        a1 += weights[ci] * traj.at(node, ci).i1;
        a2 += weights[ci] * traj.at(node, ci).i2;
    }
    return {params.delta1 * a1, params.delta2 * a2};
}

std::vector<double> class_weights(const Trajectory& traj, const EpidemicParams& params,
                                  const NetworkModel& model) {
    std::vector<double> w;
    w.reserve(traj.n_classes());
    for (int k : traj.classes)
        w.push_back(theta_class_weight(model, k, params.infectivity));
    return w;
}

double dtheta_dinfected(const NetworkModel& model, int k, int strain,
                        const EpidemicParams& params) {
    if (params.theta_mode == ThetaMode::ClosedForm)
        return 0.0;
    return params.delta(strain) * theta_class_weight(model, k, params.infectivity);
}

// Golden-section minimization on [lo, hi]; returns the argmin among the
// bracketed interior point and both endpoints.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol,
                  double* fbest_out) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    double x = fc < fd ? c : d;
    double fx = std::min(fc, fd);
    const double flo = f(lo), fhi = f(hi);
    if (flo <= fx && flo <= fhi) {
        x = lo;
        fx = flo;
    } else if (fhi < fx) {
        x = hi;
        fx = fhi;
    }
    if (fbest_out)
        *fbest_out = fx;
    return x;
}

} // namespace

double hamiltonian_h0(const DegreeClassState& state, const AdjointState& adjoint, int k,
                      const EpidemicParams& params, const CostModel& costs,
                      double theta1, double theta2) {
    const double running = costs.a1 * k * state.i1 + costs.a2 * k * state.i2 -
                           costs.g_coeff * state.r;
    const double inf1 = params.delta1 * k * state.s * state.i1 * theta1;
    const double inf2 = params.delta2 * k * state.s * state.i2 * theta2;
    return -running + (adjoint.lam_i1 - adjoint.lam_s) * inf1 +
           (adjoint.lam_i2 - adjoint.lam_s) * inf2 +
           (adjoint.lam_r - adjoint.lam_i1) * params.sigma1 * k * state.i1 +
           (adjoint.lam_r - adjoint.lam_i2) * params.sigma2 * k * state.i2;
}

std::array<double, 4> adjoint_rhs(const DegreeClassState& state, const AdjointState& adjoint,
                                  int k, const EpidemicParams& params, const CostModel& costs,
                                  const NetworkModel& model, double theta1, double theta2) {
    const double ds1 = adjoint.lam_s - adjoint.lam_i1;
    const double ds2 = adjoint.lam_s - adjoint.lam_i2;

    const double lam_s_dot = ds1 * params.delta1 * k * state.i1 * theta1 +
                             ds2 * params.delta2 * k * state.i2 * theta2;

    const double corr1 = dtheta_dinfected(model, k, 1, params) * params.delta1 * k * state.s *
                         state.i1;
    const double corr2 = dtheta_dinfected(model, k, 2, params) * params.delta2 * k * state.s *
                         state.i2;

    const double lam_i1_dot = costs.a1 * k +
                              ds1 * (params.delta1 * k * state.s * theta1 + corr1) +
                              (adjoint.lam_i1 - adjoint.lam_r) * params.sigma1 * k;
    const double lam_i2_dot = costs.a2 * k +
                              ds2 * (params.delta2 * k * state.s * theta2 + corr2) +
                              (adjoint.lam_i2 - adjoint.lam_r) * params.sigma2 * k;
    const double lam_r_dot = -costs.g_coeff;

    return {lam_s_dot, lam_i1_dot, lam_i2_dot, lam_r_dot};
}

AdjointTrajectory integrate_adjoint(const Trajectory& traj, const ImpulseSchedule& schedule,
                                    const EpidemicParams& params, const CostModel& costs,
                                    const NetworkModel& model) {
    if (traj.jumps.size() != schedule.size())
        throw std::invalid_argument("schedule does not match the trajectory's jump records");
    if (traj.n_nodes() == 0)
        throw std::invalid_argument("empty trajectory");

    const std::size_t nc = traj.n_classes();
    const std::size_t nn = traj.n_nodes();
    const auto weights = class_weights(traj, params, model);

    AdjointTrajectory adj;
    adj.classes = traj.classes;
    adj.times = traj.times;
    adj.right_limit = traj.right_limit;
    adj.states.assign(nn * nc, AdjointState{});

    // Transversality: exact zeros at the horizon.
    std::vector<AdjointState> lam(nc, AdjointState{});

    std::vector<DegreeClassState> x_mid(nc);
    std::vector<AdjointState> lam_stage(nc);
    std::vector<std::array<double, 4>> g1(nc), g2(nc), g3(nc), g4(nc);

    const auto store = [&](std::size_t node) {
        for (std::size_t ci = 0; ci < nc; ++ci)
            adj.states[node * nc + ci] = lam[ci];
    };
    store(nn - 1);

    for (std::size_t node = nn - 1; node > 0; --node) {
        const std::size_t hi = node, lo = node - 1;
        const double dt = traj.times[hi] - traj.times[lo];
        if (dt < kTimeTol) {
            // Jump pair: the costate passes through continuously.
            store(lo);
            continue;
        }

        const auto theta_hi = node_thetas(traj, hi, params, model, weights);
        const auto theta_lo = node_thetas(traj, lo, params, model, weights);

        // Cubic Hermite midpoint of the stored segment, then its fields.
        for (std::size_t ci = 0; ci < nc; ++ci) {
            const auto& xa = traj.at(lo, ci);
            const auto& xb = traj.at(hi, ci);
            const auto fa = flow_rhs(xa, traj.classes[ci], params, theta_lo[0], theta_lo[1]);
            const auto fb = flow_rhs(xb, traj.classes[ci], params, theta_hi[0], theta_hi[1]);
            x_mid[ci].s = 0.5 * (xa.s + xb.s) + dt / 8.0 * (fa[0] - fb[0]);
            x_mid[ci].i1 = 0.5 * (xa.i1 + xb.i1) + dt / 8.0 * (fa[1] - fb[1]);
            x_mid[ci].i2 = 0.5 * (xa.i2 + xb.i2) + dt / 8.0 * (fa[2] - fb[2]);
            x_mid[ci].r = 0.5 * (xa.r + xb.r) + dt / 8.0 * (fa[3] - fb[3]);
        }
        std::array<double, 2> theta_mid;
        if (params.theta_mode == ThetaMode::ClosedForm) {
            theta_mid = theta_hi;
        } else {
            double a1 = 0.0, a2 = 0.0;
            for (std::size_t ci = 0; ci < nc; ++ci) {
                a1 += weights[ci] * x_mid[ci].i1;
                a2 += weights[ci] * x_mid[ci].i2;
            }
            theta_mid = {params.delta1 * a1, params.delta2 * a2};
        }

        // RK4 backward step from t_hi to t_lo.
        for (std::size_t ci = 0; ci < nc; ++ci)
            g1[ci] = adjoint_rhs(traj.at(hi, ci), lam[ci], traj.classes[ci], params, costs,
                                 model, theta_hi[0], theta_hi[1]);
        for (std::size_t ci = 0; ci < nc; ++ci) {
            lam_stage[ci] = {lam[ci].lam_s - 0.5 * dt * g1[ci][0],
                             lam[ci].lam_i1 - 0.5 * dt * g1[ci][1],
                             lam[ci].lam_i2 - 0.5 * dt * g1[ci][2],
                             lam[ci].lam_r - 0.5 * dt * g1[ci][3]};
            g2[ci] = adjoint_rhs(x_mid[ci], lam_stage[ci], traj.classes[ci], params, costs,
                                 model, theta_mid[0], theta_mid[1]);
        }
        for (std::size_t ci = 0; ci < nc; ++ci) {
            lam_stage[ci] = {lam[ci].lam_s - 0.5 * dt * g2[ci][0],
                             lam[ci].lam_i1 - 0.5 * dt * g2[ci][1],
                             lam[ci].lam_i2 - 0.5 * dt * g2[ci][2],
                             lam[ci].lam_r - 0.5 * dt * g2[ci][3]};
            g3[ci] = adjoint_rhs(x_mid[ci], lam_stage[ci], traj.classes[ci], params, costs,
                                 model, theta_mid[0], theta_mid[1]);
        }
        for (std::size_t ci = 0; ci < nc; ++ci) {
            lam_stage[ci] = {lam[ci].lam_s - dt * g3[ci][0], lam[ci].lam_i1 - dt * g3[ci][1],
                             lam[ci].lam_i2 - dt * g3[ci][2], lam[ci].lam_r - dt * g3[ci][3]};
            g4[ci] = adjoint_rhs(traj.at(lo, ci), lam_stage[ci], traj.classes[ci], params, costs,
                                 model, theta_lo[0], theta_lo[1]);
        }
        for (std::size_t ci = 0; ci < nc; ++ci) {
            lam[ci].lam_s -= dt / 6.0 * (g1[ci][0] + 2.0 * (g2[ci][0] + g3[ci][0]) + g4[ci][0]);
            lam[ci].lam_i1 -= dt / 6.0 * (g1[ci][1] + 2.0 * (g2[ci][1] + g3[ci][1]) + g4[ci][1]);
            lam[ci].lam_i2 -= dt / 6.0 * (g1[ci][2] + 2.0 * (g2[ci][2] + g3[ci][2]) + g4[ci][2]);
            lam[ci].lam_r -= dt / 6.0 * (g1[ci][3] + 2.0 * (g2[ci][3] + g3[ci][3]) + g4[ci][3]);
        }
        store(lo);
    }
    return adj;
}

double impulse_hamiltonian(const AdjointState& adjoint_post, int strain, double c,
                           double applied, const DegreeClassState& post_state, int k,
                           const CostModel& costs) {
    const double h = impulse_cost(post_state, strain, c, k, costs);
    return -h + (adjoint_post.lam_r - adjoint_post.lam_i(strain)) * applied;
}

double h0_jump(const EventSnapshot& pre, const EventSnapshot& post, int k,
               const EpidemicParams& params, const CostModel& costs) {
    return hamiltonian_h0(post.state, post.adjoint, k, params, costs, post.theta1,
                          post.theta2) -
           hamiltonian_h0(pre.state, pre.adjoint, k, params, costs, pre.theta1, pre.theta2);
}

double delta_closed_form(const DegreeClassState& pre_state, const DegreeClassState& post_state,
                         const AdjointState& adjoint_pre, const AdjointState& adjoint_post,
                         int strain, double c, int k, const EpidemicParams& params,
                         const CostModel& costs, const NetworkModel& model,
                         double theta_pre, double theta_post) {
    (void)theta_pre; // the printed expression reads the field at tau+ only
    const double a = costs.a(strain);
    const double delta = params.delta(strain);
    const double sigma = params.sigma(strain);
    const double pk_over_mean = model.pk(k) / model.mean_degree;

    const double cost_diff = a * k * (pre_state.infected(strain) - post_state.infected(strain)) -
                             costs.g_coeff * pre_state.r + costs.g_coeff * post_state.r;
    const double slopes = c * (costs.g_coeff + a * k);
    const double recovery = 2.0 * sigma * k * c *
                            (adjoint_post.lam_r - adjoint_post.lam_i(strain));
    const double infection = delta * k * pre_state.s * c *
                             (adjoint_pre.lam_s - adjoint_pre.lam_i(strain)) *
                             (2.0 * theta_post +
                              delta * k * pk_over_mean *
                                  (1.0 + pre_state.infected(strain) - c));
    return cost_diff + slopes + recovery + infection;
}

double impulse_hamiltonian_slope(const AdjointState& adjoint_post,
                                 const DegreeClassState& post_state, int strain, double c,
                                 int k, const CostModel& costs) {
    // h(nu) = b k nu I(tau+), with I(tau+) = I(tau-) - nu under the post-jump
    // convention, so dh/dnu picks up the extra -b k nu term.
    const double i_post = post_state.infected(strain);
    double dh;
    if (costs.impulse_cost_state == ImpulseCostState::PostJump)
        dh = costs.b(strain) * k * (i_post - c);
    else
        dh = costs.b(strain) * k * (i_post + c);
    return (adjoint_post.lam_r - adjoint_post.lam_i(strain)) - dh;
}

double variational_residual(const AdjointState& adjoint_post,
                            const DegreeClassState& post_state, int strain, double c,
                            double u_bar, int k, const CostModel& costs) {
    if (c < 0.0 || c > u_bar)
        throw std::domain_error("intensity outside [0, u_bar]");
    const double slope = impulse_hamiltonian_slope(adjoint_post, post_state, strain, c, k, costs);
    // Maximizing Hc over [0, u_bar] requires slope*(nu - c) <= 0 for all
    // feasible nu; the worst violation is attained at an endpoint.
    return std::max({0.0, slope * (u_bar - c), -slope * c});
}

double no_jump_residual(const AdjointState& adjoint, const DegreeClassState& state, int strain,
                        int k, const CostModel& costs) {
    const double slope_at_zero = (adjoint.lam_r - adjoint.lam_i(strain)) -
                                 costs.b(strain) * k * state.infected(strain);
    return std::max(0.0, slope_at_zero);
}

std::string to_string(EventClass c) {
    switch (c) {
    case EventClass::InteriorStationary:
        return "interior_stationary";
    case EventClass::BoundaryStart:
        return "boundary_start";
    case EventClass::BoundaryEnd:
        return "boundary_end";
    case EventClass::Violated:
        return "violated";
    }
    return "violated";
}

Trajectory simulate(const Problem& problem, const ImpulseSchedule& schedule) {
    return integrate(problem.classes, problem.initial, problem.params, schedule, problem.model,
                     problem.horizon, problem.step);
}

double evaluate_total_cost(const Problem& problem, const ImpulseSchedule& schedule) {
    const Trajectory traj = simulate(problem, schedule);
    return total_cost(traj, schedule, problem.model, problem.costs).total;
}

namespace {

struct EventSides {
    EventSnapshot pre;
    EventSnapshot post;
    double applied = 0.0;
};

// Snapshots of jump record `ji` from a matched forward/adjoint pair.
EventSides event_sides(const Problem& problem, const Trajectory& traj,
                       const AdjointTrajectory& adj, std::size_t ji,
                       const std::vector<double>& weights) {
    const JumpRecord& rec = traj.jumps[ji];
    const std::size_t right = rec.node;
    const std::size_t left = right - 1;
    const std::size_t ci = static_cast<std::size_t>(traj.class_index(rec.k));

    EventSides out;
    const auto th_pre = node_thetas(traj, left, problem.params, problem.model, weights);
    const auto th_post = node_thetas(traj, right, problem.params, problem.model, weights);
    out.pre = {rec.pre, adj.at(left, ci), th_pre[0], th_pre[1]};
    out.post = {rec.post, adj.at(right, ci), th_post[0], th_post[1]};
    out.applied = rec.applied;
    return out;
}

EventClass classify(double tau, double horizon, double jump, double tol_abs, double band) {
    if (std::abs(jump) <= tol_abs)
        return EventClass::InteriorStationary;
    if (tau <= band && jump > 0.0)
        return EventClass::BoundaryStart;
    if (tau >= horizon - band && jump < 0.0)
        return EventClass::BoundaryEnd;
    return EventClass::Violated;
}

} // namespace

std::vector<EventReport> evaluate_events(const Problem& problem, const ImpulseSchedule& schedule,
                                         const Trajectory& traj, const AdjointTrajectory& adj,
                                         const OptimizerSettings& settings) {
    const auto weights = class_weights(traj, problem.params, problem.model);
    std::vector<EventReport> reports;
    reports.reserve(traj.jumps.size());

    for (std::size_t ji = 0; ji < traj.jumps.size(); ++ji) {
        const JumpRecord& rec = traj.jumps[ji];
        const EventSides sides = event_sides(problem, traj, adj, ji, weights);

        EventReport rep;
        rep.strain = rec.strain;
        rep.k = rec.k;
        rep.tau = rec.time;
        rep.c = rec.nominal;
        rep.h0_jump = h0_jump(sides.pre, sides.post, rec.k, problem.params, problem.costs);
        rep.delta_value = delta_closed_form(sides.pre.state, sides.post.state,
                                            sides.pre.adjoint, sides.post.adjoint, rec.strain,
                                            rec.nominal, rec.k, problem.params, problem.costs,
                                            problem.model,
                                            rec.strain == 1 ? sides.pre.theta1 : sides.pre.theta2,
                                            rec.strain == 1 ? sides.post.theta1
                                                            : sides.post.theta2);
        const double h0_pre = hamiltonian_h0(sides.pre.state, sides.pre.adjoint, rec.k,
                                             problem.params, problem.costs, sides.pre.theta1,
                                             sides.pre.theta2);
        const double tol_abs = settings.tol_stationarity * (1.0 + std::abs(h0_pre));
        rep.stationarity_residual = std::abs(rep.h0_jump);

        // An event needs a matching schedule entry for u_bar; records and
        // events share the (time, k, strain) ordering.
        const double u_bar = schedule.events()[ji].u_bar;
        rep.variational_residual = variational_residual(sides.post.adjoint, sides.post.state,
                                                        rec.strain, rec.nominal, u_bar, rec.k,
                                                        problem.costs);
        rep.classification = classify(rec.time, problem.horizon, rep.h0_jump, tol_abs,
                                      settings.boundary_band);
        reports.push_back(rep);
    }
    return reports;
}

double scan_no_jump_residual(const Trajectory& traj, const AdjointTrajectory& adj,
                             const CostModel& costs) {
    double worst = 0.0;
    for (std::size_t node = 0; node < traj.n_nodes(); ++node)
        for (std::size_t ci = 0; ci < traj.n_classes(); ++ci)
            for (int strain : {1, 2})
                worst = std::max(worst, no_jump_residual(adj.at(node, ci), traj.at(node, ci),
                                                         strain, traj.classes[ci], costs));
    return worst;
}

namespace {

// One full forward/adjoint evaluation of a trial schedule, reduced to the
// stationarity quantity of the event at `index` (order-stable identity).
struct JumpProbe {
    double jump = 0.0;
    double h0_pre = 0.0;
};

JumpProbe probe_event(const Problem& problem, const std::vector<ImpulseEvent>& events,
                      std::size_t index) {
    const ImpulseSchedule schedule{std::vector<ImpulseEvent>(events)};
    const Trajectory traj = simulate(problem, schedule);
    const AdjointTrajectory adj = integrate_adjoint(traj, schedule, problem.params,
                                                    problem.costs, problem.model);
    const auto weights = class_weights(traj, problem.params, problem.model);

    // Locate this event's jump record.
    const ImpulseEvent& e = events[index];
    std::size_t ji = traj.jumps.size();
    for (std::size_t i = 0; i < traj.jumps.size(); ++i) {
        const auto& rec = traj.jumps[i];
        if (rec.strain == e.strain && rec.k == e.k && std::abs(rec.time - e.tau) < 1e-9 &&
            rec.nominal == e.c) {
            ji = i;
            break;
        }
    }
    if (ji == traj.jumps.size())
        throw std::logic_error("trial event not found in trajectory records");

    const EventSides sides = event_sides(problem, traj, adj, ji, weights);
    JumpProbe probe;
    probe.jump = h0_jump(sides.pre, sides.post, e.k, problem.params, problem.costs);
    probe.h0_pre = hamiltonian_h0(sides.pre.state, sides.pre.adjoint, e.k, problem.params,
                                  problem.costs, sides.pre.theta1, sides.pre.theta2);
    return probe;
}

OptimalityReport finish_report(const Problem& problem, const ImpulseSchedule& schedule,
                               const OptimizerSettings& settings, bool converged, int sweeps,
                               double j_before) {
    const Trajectory traj = simulate(problem, schedule);
    const AdjointTrajectory adj = integrate_adjoint(traj, schedule, problem.params,
                                                    problem.costs, problem.model);
    OptimalityReport report;
    report.events = evaluate_events(problem, schedule, traj, adj, settings);
    report.converged = converged;
    report.sweeps = sweeps;
    report.j_before = j_before;
    report.j_after = total_cost(traj, schedule, problem.model, problem.costs).total;
    report.max_no_jump_residual = scan_no_jump_residual(traj, adj, problem.costs);
    return report;
}

} // namespace

OptimizeResult optimize_times(const Problem& problem, const ImpulseSchedule& fixed_intensities,
                              const OptimizerSettings& settings) {
    std::vector<ImpulseEvent> events = fixed_intensities.events();
    const double j_before = evaluate_total_cost(problem, fixed_intensities);
    const double margin = std::max(settings.tol_tau, problem.step * 0.1);
    const double sep = settings.tol_tau;

    bool converged = events.empty();
    int sweeps = 0;
    for (; sweeps < settings.max_sweeps && !converged; ++sweeps) {
        double max_move = 0.0;
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (events[i].c <= 0.0)
                continue; // a null impulse is stationary at any time

            // Window between the same-stream neighbors.
            double lo = margin, hi = problem.horizon - margin;
            for (std::size_t j = 0; j < events.size(); ++j) {
                if (j == i || events[j].strain != events[i].strain ||
                    events[j].k != events[i].k)
                    continue;
                if (events[j].tau < events[i].tau)
                    lo = std::max(lo, events[j].tau + sep);
                else
                    hi = std::min(hi, events[j].tau - sep);
            }
            if (hi - lo < sep)
                continue; // squeezed shut; classification handles it

            const auto eval = [&](double tau) {
                std::vector<ImpulseEvent> trial = events;
                trial[i].tau = tau;
                return probe_event(problem, trial, i);
            };

            const JumpProbe cur = eval(events[i].tau);
            const double tol_abs = settings.tol_stationarity * (1.0 + std::abs(cur.h0_pre));
            if (std::abs(cur.jump) <= tol_abs)
                continue;

            double a = 0.0, b = 0.0, fb = 0.0;
            bool bracket = false;
            const JumpProbe at_lo = eval(lo);
            if (std::signbit(at_lo.jump) != std::signbit(cur.jump)) {
                a = lo;
                b = events[i].tau;
                fb = cur.jump;
                bracket = true;
            } else {
                const JumpProbe at_hi = eval(hi);
                if (std::signbit(cur.jump) != std::signbit(at_hi.jump)) {
                    a = events[i].tau;
                    b = hi;
                    fb = at_hi.jump;
                    bracket = true;
                }
            }

            double new_tau;
            if (bracket) {
                double mid = 0.5 * (a + b);
                for (int it = 0; it < 80; ++it) {
                    mid = 0.5 * (a + b);
                    const JumpProbe pm = eval(mid);
                    if (std::abs(pm.jump) <=
                            settings.tol_stationarity * (1.0 + std::abs(pm.h0_pre)) ||
                        b - a < 0.25 * settings.tol_tau)
                        break;
                    if (std::signbit(pm.jump) == std::signbit(fb)) {
                        b = mid;
                        fb = pm.jump;
                    } else {
                        a = mid;
                    }
                }
                new_tau = mid;
            } else {
                // One sign across the window. The jump equals dJ/dtau, so
                // descend toward the end it points away from.
                new_tau = cur.jump > 0.0 ? lo : hi;
            }
            max_move = std::max(max_move, std::abs(new_tau - events[i].tau));
            events[i].tau = new_tau;
        }
        if (max_move < settings.tol_tau) {
            converged = true;
            ++sweeps;
            break;
        }
    }

    ImpulseSchedule out{std::move(events)};
    OptimizeResult result;
    result.report = finish_report(problem, out, settings, converged, sweeps, j_before);
    result.schedule = std::move(out);
    return result;
}

OptimizeResult optimize_intensities(const Problem& problem, const ImpulseSchedule& fixed_times,
                                    const OptimizerSettings& settings) {
    std::vector<ImpulseEvent> events = fixed_times.events();
    const double j_before = evaluate_total_cost(problem, fixed_times);

    bool converged = events.empty();
    int sweeps = 0;
    for (; sweeps < settings.max_sweeps && !converged; ++sweeps) {
        double max_move = 0.0;
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (events[i].u_bar <= 0.0)
                continue;
            const auto j_of_c = [&](double c) {
                std::vector<ImpulseEvent> trial = events;
                trial[i].c = c;
                return evaluate_total_cost(problem, ImpulseSchedule{std::move(trial)});
            };
            // Bracket well below the movement tolerance so interior optima
            // come out with a vanishing gradient, not just tol_c placement.
            const double best = golden_min(j_of_c, 0.0, events[i].u_bar,
                                           0.02 * settings.tol_c, nullptr);
            max_move = std::max(max_move, std::abs(best - events[i].c));
            events[i].c = best;
        }
        if (max_move < settings.tol_c) {
            converged = true;
            ++sweeps;
            break;
        }
    }

    ImpulseSchedule out{std::move(events)};
    OptimizeResult result;
    result.report = finish_report(problem, out, settings, converged, sweeps, j_before);
    result.schedule = std::move(out);
    return result;
}

} // namespace netsir
