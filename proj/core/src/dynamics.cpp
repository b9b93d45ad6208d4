#include "netsir/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace netsir {

namespace {

constexpr double kTimeTol = 1e-12;

void check_strain(int strain) {
    if (strain != 1 && strain != 2)
        throw std::domain_error("strain must be 1 or 2, got " + std::to_string(strain));
}

// Shared flow evaluation context: per-class theta weights are precomputed so
// the summation-mode fields cost one fused loop per stage.
struct FlowSystem {
    const EpidemicParams& params;
    std::vector<int> classes;
    std::vector<double> weights; // theta_class_weight per class
    double theta1_const = 0.0;
    double theta2_const = 0.0;
    bool summation = false;

    FlowSystem(const std::vector<int>& cls, const EpidemicParams& p, const NetworkModel& model)
        : params(p), classes(cls) {
        summation = p.theta_mode == ThetaMode::Summation;
        weights.reserve(cls.size());
        for (int k : cls)
            weights.push_back(theta_class_weight(model, k, p.infectivity));
        if (!summation) {
            const auto t = closed_form_thetas(p, model);
            theta1_const = t[0];
            theta2_const = t[1];
        }
    }

    void thetas(const std::vector<DegreeClassState>& x, double& t1, double& t2) const {
        if (!summation) {
            t1 = theta1_const;
            t2 = theta2_const;
            return;
        }
        double a1 = 0.0, a2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            a1 += weights[i] * x[i].i1;
            a2 += weights[i] * x[i].i2;
        }
        t1 = params.delta1 * a1;
        t2 = params.delta2 * a2;
    }

    void rhs(const std::vector<DegreeClassState>& x, std::vector<std::array<double, 4>>& dx) const {
        double t1, t2;
        thetas(x, t1, t2);
        for (std::size_t i = 0; i < x.size(); ++i)
            dx[i] = flow_rhs(x[i], classes[i], params, t1, t2);
    }
};

void axpy_state(std::vector<DegreeClassState>& out, const std::vector<DegreeClassState>& x,
                double a, const std::vector<std::array<double, 4>>& d) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i].s = x[i].s + a * d[i][0];
        out[i].i1 = x[i].i1 + a * d[i][1];
        out[i].i2 = x[i].i2 + a * d[i][2];
        out[i].r = x[i].r + a * d[i][3];
    }
}

struct Rk4Scratch {
    std::vector<std::array<double, 4>> k1, k2, k3, k4;
    std::vector<DegreeClassState> tmp;

    explicit Rk4Scratch(std::size_t n) : k1(n), k2(n), k3(n), k4(n), tmp(n) {}
};

void rk4_step(const FlowSystem& sys, std::vector<DegreeClassState>& x, double h, Rk4Scratch& w) {
    sys.rhs(x, w.k1);
    axpy_state(w.tmp, x, 0.5 * h, w.k1);
    sys.rhs(w.tmp, w.k2);
    axpy_state(w.tmp, x, 0.5 * h, w.k2);
    sys.rhs(w.tmp, w.k3);
    axpy_state(w.tmp, x, h, w.k3);
    sys.rhs(w.tmp, w.k4);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i].s += h / 6.0 * (w.k1[i][0] + 2.0 * (w.k2[i][0] + w.k3[i][0]) + w.k4[i][0]);
        x[i].i1 += h / 6.0 * (w.k1[i][1] + 2.0 * (w.k2[i][1] + w.k3[i][1]) + w.k4[i][1]);
        x[i].i2 += h / 6.0 * (w.k1[i][2] + 2.0 * (w.k2[i][2] + w.k3[i][2]) + w.k4[i][2]);
        x[i].r += h / 6.0 * (w.k1[i][3] + 2.0 * (w.k2[i][3] + w.k3[i][3]) + w.k4[i][3]);
    }
}

// Advances from ta to tb in steps of at most `step`, landing exactly on tb.
void advance(const FlowSystem& sys, std::vector<DegreeClassState>& x, double ta, double tb,
             double step, Rk4Scratch& w) {
    double t = ta;
    while (tb - t > kTimeTol) {
        const double h = std::min(step, tb - t);
        rk4_step(sys, x, h, w);
        t += h;
    }
}

void validate_setup(const std::vector<int>& classes,
                    const std::vector<DegreeClassState>& initial,
                    const EpidemicParams& params, const NetworkModel& model,
                    double horizon, double step) {
    params.validate();
    if (!(step > 0.0))
        throw std::invalid_argument("integration step must be positive");
    if (!(horizon > 0.0))
        throw std::invalid_argument("horizon must be positive");
    if (classes.empty())
        throw std::invalid_argument("at least one degree class is required");
    if (classes.size() != initial.size())
        throw std::invalid_argument("initial states and class list differ in length");
    for (std::size_t i = 0; i + 1 < classes.size(); ++i)
        if (classes[i] >= classes[i + 1])
            throw std::invalid_argument("degree classes must be strictly ascending");
    for (int k : classes)
        if (!model.in_support(k))
            throw std::invalid_argument("class degree " + std::to_string(k) +
                                        " outside the model support");
}

} // namespace

void EpidemicParams::validate() const {
    if (!(delta1 > 0.0) || !(delta2 > 0.0) || !(sigma1 > 0.0) || !(sigma2 > 0.0))
        throw std::invalid_argument("epidemic rate coefficients must be strictly positive");
}

std::array<double, 4> flow_rhs(const DegreeClassState& state, int k,
                               const EpidemicParams& params,
                               double theta1, double theta2) {
    const double inf1 = params.delta1 * k * state.s * state.i1 * theta1;
    const double inf2 = params.delta2 * k * state.s * state.i2 * theta2;
    const double rec1 = params.sigma1 * k * state.i1;
    const double rec2 = params.sigma2 * k * state.i2;
    return {-inf1 - inf2, inf1 - rec1, inf2 - rec2, rec1 + rec2};
}

double effective_impulse(const DegreeClassState& state, int strain, double c) {
    check_strain(strain);
    if (c < 0.0)
        throw std::domain_error("impulse intensity must be nonnegative");
    return std::min(c, state.infected(strain));
}

DegreeClassState apply_impulse(const DegreeClassState& state, int strain, double c) {
    const double nu = effective_impulse(state, strain, c);
    DegreeClassState out = state;
    if (strain == 1)
        out.i1 -= nu;
    else
        out.i2 -= nu;
    out.r += nu;
    return out;
}

ImpulseSchedule::ImpulseSchedule(std::vector<ImpulseEvent> events) : events_(std::move(events)) {
    for (const auto& e : events_) {
        check_strain(e.strain);
        if (!(e.tau > 0.0) || !std::isfinite(e.tau))
            throw std::invalid_argument("impulse times must be finite and > 0");
        if (e.c < 0.0 || e.c > e.u_bar)
            throw std::invalid_argument("impulse intensity must lie in [0, u_bar]");
    }
    std::sort(events_.begin(), events_.end(), [](const ImpulseEvent& a, const ImpulseEvent& b) {
        if (a.tau != b.tau)
            return a.tau < b.tau;
        if (a.k != b.k)
            return a.k < b.k;
        return a.strain < b.strain;
    });
    for (std::size_t i = 0; i < events_.size(); ++i)
        for (std::size_t j = i + 1; j < events_.size(); ++j) {
            if (events_[j].tau > events_[i].tau)
                break;
            if (events_[j].strain == events_[i].strain && events_[j].k == events_[i].k)
                throw std::invalid_argument(
                    "impulse times must be strictly increasing per strain and class");
        }
}

int ImpulseSchedule::count(int strain, int k) const {
    int n = 0;
    for (const auto& e : events_)
        if (e.strain == strain && e.k == k)
            ++n;
    return n;
}

int ImpulseSchedule::count(int strain) const {
    int n = 0;
    for (const auto& e : events_)
        if (e.strain == strain)
            ++n;
    return n;
}

double ImpulseSchedule::max_time() const {
    double t = 0.0;
    for (const auto& e : events_)
        t = std::max(t, e.tau);
    return t;
}

int Trajectory::class_index(int k) const {
    const auto it = std::lower_bound(classes.begin(), classes.end(), k);
    if (it == classes.end() || *it != k)
        return -1;
    return static_cast<int>(it - classes.begin());
}

std::array<double, 2> closed_form_thetas(const EpidemicParams& params, const NetworkModel& model) {
    return {theta_closed_form(params.lambda_eff(1), model.m),
            theta_closed_form(params.lambda_eff(2), model.m)};
}

std::array<double, 2> summation_thetas(const NetworkModel& model,
                                       const std::vector<int>& classes,
                                       const std::vector<DegreeClassState>& states,
                                       const EpidemicParams& params) {
    double a1 = 0.0, a2 = 0.0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const double w = theta_class_weight(model, classes[i], params.infectivity);
        a1 += w * states[i].i1;
        a2 += w * states[i].i2;
    }
    return {params.delta1 * a1, params.delta2 * a2};
}

Trajectory integrate(const std::vector<int>& classes,
                     const std::vector<DegreeClassState>& initial,
                     const EpidemicParams& params,
                     const ImpulseSchedule& schedule,
                     const NetworkModel& model,
                     double horizon, double step) {
    validate_setup(classes, initial, params, model, horizon, step);
    for (const auto& e : schedule.events()) {
        if (e.tau >= horizon - kTimeTol)
            throw std::invalid_argument("impulse times must lie strictly before the horizon");
        if (std::find(classes.begin(), classes.end(), e.k) == classes.end())
            throw std::invalid_argument("schedule names class " + std::to_string(e.k) +
                                        " which is not simulated");
    }

    // Grid: multiples of `step` up to the horizon, with event times inserted
    // as exact nodes (no rounding of tau).
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(horizon / step) + schedule.size() + 2);
    for (std::size_t i = 0;; ++i) {
        const double t = static_cast<double>(i) * step;
        if (t >= horizon - kTimeTol)
            break;
        grid.push_back(t);
    }
    grid.push_back(horizon);
    for (const auto& e : schedule.events())
        grid.push_back(e.tau);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return b - a < kTimeTol; }),
               grid.end());

    Trajectory traj;
    traj.classes = classes;
    traj.horizon = horizon;
    traj.step = step;
    traj.times.reserve(grid.size() + schedule.size());
    traj.right_limit.reserve(grid.size() + schedule.size());
    traj.states.reserve((grid.size() + schedule.size()) * classes.size());

    FlowSystem sys(classes, params, model);
    Rk4Scratch scratch(classes.size());
    std::vector<DegreeClassState> x = initial;

    const auto& events = schedule.events();
    std::size_t next_event = 0;

    const auto push_node = [&](double t, bool right) {
        traj.times.push_back(t);
        traj.right_limit.push_back(right ? 1 : 0);
        traj.states.insert(traj.states.end(), x.begin(), x.end());
    };

    for (std::size_t g = 0; g < grid.size(); ++g) {
        if (g > 0)
            advance(sys, x, grid[g - 1], grid[g], step, scratch);
        push_node(grid[g], false);

        bool jumped = false;
        while (next_event < events.size() &&
               std::abs(events[next_event].tau - grid[g]) < kTimeTol) {
            const auto& e = events[next_event];
            const int ci = traj.class_index(e.k);
            JumpRecord rec;
            rec.time = grid[g];
            rec.strain = e.strain;
            rec.k = e.k;
            rec.nominal = e.c;
            rec.pre = x[static_cast<std::size_t>(ci)];
            rec.applied = effective_impulse(rec.pre, e.strain, e.c);
            x[static_cast<std::size_t>(ci)] = apply_impulse(rec.pre, e.strain, e.c);
            rec.post = x[static_cast<std::size_t>(ci)];
            rec.node = traj.times.size(); // right-limit node pushed below
            traj.jumps.push_back(rec);
            jumped = true;
            ++next_event;
        }
        if (jumped)
            push_node(grid[g], true);
    }
    return traj;
}

ImpulseSchedule generate_threshold_schedule(const std::vector<int>& classes,
                                            const std::vector<DegreeClassState>& initial,
                                            const EpidemicParams& params,
                                            const NetworkModel& model,
                                            const ThresholdRule& rule,
                                            double horizon, double step) {
    validate_setup(classes, initial, params, model, horizon, step);
    for (int strain : {1, 2}) {
        if (rule.c(strain) < 0.0 || rule.u(strain) < 0.0)
            throw std::invalid_argument("threshold rule intensities must be nonnegative");
        if (!(rule.gap(strain) >= 0.0))
            throw std::invalid_argument("threshold rule gaps must be nonnegative");
    }

    FlowSystem sys(classes, params, model);
    Rk4Scratch scratch(classes.size());
    std::vector<DegreeClassState> x = initial;
    std::vector<ImpulseEvent> events;

    // last firing time per (strain, class)
    std::vector<std::array<double, 2>> last(classes.size(),
                                            {-std::numeric_limits<double>::infinity(),
                                             -std::numeric_limits<double>::infinity()});

    double t = 0.0;
    while (horizon - t > kTimeTol) {
        const double h = std::min(step, horizon - t);
        rk4_step(sys, x, h, scratch);
        t += h;
        if (horizon - t <= kTimeTol)
            break; // events must lie strictly inside (0, T)
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            for (int strain : {1, 2}) {
                const double level = rule.level(strain);
                if (x[ci].infected(strain) < level)
                    continue;
                if (t - last[ci][static_cast<std::size_t>(strain - 1)] <
                    rule.gap(strain) - kTimeTol)
                    continue;
                double c = rule.proportional ? rule.c(strain) * x[ci].infected(strain)
                                             : rule.c(strain);
                c = std::min(c, rule.u(strain));
                if (c <= 0.0)
                    continue;
                events.push_back({strain, classes[ci], t, c, rule.u(strain)});
                x[ci] = apply_impulse(x[ci], strain, c);
                last[ci][static_cast<std::size_t>(strain - 1)] = t;
            }
        }
    }
    return ImpulseSchedule(std::move(events));
}

} // namespace netsir
