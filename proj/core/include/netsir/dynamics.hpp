#ifndef NETSIR_DYNAMICS_HPP
#define NETSIR_DYNAMICS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "netsir/network.hpp"

namespace netsir {

/// Whether the infection field theta is recomputed from the current state
/// every step (summation form) or held at its closed-form constant.
enum class ThetaMode { ClosedForm, Summation };

/// Per-unit-degree rate coefficients of the two strains. The per-class rates
/// are delta_i * k and sigma_i * k.
struct EpidemicParams {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    ThetaMode theta_mode = ThetaMode::Summation;
    Infectivity infectivity = Infectivity::DegreeProportional;

    double delta(int strain) const { return strain == 1 ? delta1 : delta2; }
    double sigma(int strain) const { return strain == 1 ? sigma1 : sigma2; }
    /// Effective spreading rate delta_i/sigma_i (the degree factor cancels).
    double lambda_eff(int strain) const { return delta(strain) / sigma(strain); }
    /// Throws std::invalid_argument unless all four coefficients are positive.
    void validate() const;

    bool operator==(const EpidemicParams&) const = default;
};

/// Compartment fractions of one degree class. Valid states live on the unit
/// simplex: s + i1 + i2 + r = 1 within integration tolerance.
struct DegreeClassState {
    double s = 1.0;
    double i1 = 0.0;
    double i2 = 0.0;
    double r = 0.0;

    double sum() const { return s + i1 + i2 + r; }
    double infected(int strain) const { return strain == 1 ? i1 : i2; }

    bool operator==(const DegreeClassState&) const = default;
};

/// Time derivative (dS, dI1, dI2, dR) of the two-strain flow for one class.
/// The four components cancel exactly: the same products feed each side.
std::array<double, 4> flow_rhs(const DegreeClassState& state, int k,
                               const EpidemicParams& params,
                               double theta1, double theta2);

/// Jump magnitude actually applied: min(c, I_strain), keeping fractions
/// nonnegative. Domain error for negative c or strain outside {1,2}.
double effective_impulse(const DegreeClassState& state, int strain, double c);

/// Instantaneous treatment jump: moves the effective magnitude from the
/// strain's infected compartment to recovered; other fields are untouched.
DegreeClassState apply_impulse(const DegreeClassState& state, int strain, double c);

/// One scheduled impulse: strain, degree class, time, intensity, cap.
struct ImpulseEvent {
    int strain = 1;
    int k = 1;
    double tau = 0.0;
    double c = 0.0;
    double u_bar = 0.0;

    bool operator==(const ImpulseEvent&) const = default;
};

/*! Validated collection of impulse events.
 *
 *  Invariants enforced at construction: strain in {1,2}, tau > 0 and finite,
 *  0 <= c <= u_bar, and strictly increasing times within every (strain, k)
 *  stream. Events are stored sorted by (tau, k, strain), which is also the
 *  application order for coincident times.
 */
class ImpulseSchedule {
public:
    ImpulseSchedule() = default;
    explicit ImpulseSchedule(std::vector<ImpulseEvent> events);

    const std::vector<ImpulseEvent>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    /// Number of impulses q_i(k) for one strain and class.
    int count(int strain, int k) const;
    int count(int strain) const;
    double max_time() const;

    bool operator==(const ImpulseSchedule&) const = default;

private:
    std::vector<ImpulseEvent> events_;
};

/// One applied jump with both limits of the affected class.
struct JumpRecord {
    std::size_t node = 0; ///< index of the right-limit grid node
    double time = 0.0;
    int strain = 1;
    int k = 1;
    double nominal = 0.0; ///< scheduled intensity c
    double applied = 0.0; ///< clamped magnitude actually moved
    DegreeClassState pre;
    DegreeClassState post;
};

/*! Stored hybrid solution. Grid nodes are ordered in time; every impulse
 *  time appears as a consecutive left/right pair sharing the same timestamp,
 *  the right one flagged. States are stored row-major: node index times
 *  class index.
 */
struct Trajectory {
    std::vector<int> classes;        ///< simulated degrees, ascending
    std::vector<double> times;
    std::vector<char> right_limit;   ///< 1 on post-jump duplicate nodes
    std::vector<DegreeClassState> states;
    std::vector<JumpRecord> jumps;
    double horizon = 0.0;
    double step = 0.0;

    std::size_t n_nodes() const { return times.size(); }
    std::size_t n_classes() const { return classes.size(); }
    int class_index(int k) const;
    const DegreeClassState& at(std::size_t node, std::size_t class_idx) const {
        return states[node * classes.size() + class_idx];
    }
};

/*! Integrates the hybrid system: classic fixed-step RK4 between impulse
 *  times, with steps shortened to land exactly on every event node, and the
 *  jump map applied there (strain 1 before strain 2 within a class,
 *  ascending class order across classes). In summation mode the infection
 *  fields couple all classes and are rebuilt at every Runge-Kutta stage; in
 *  closed-form mode they are constants.
 *
 *  Throws std::invalid_argument for nonpositive step, classes outside the
 *  model support, initial/class size mismatch, events at or beyond the
 *  horizon, or events naming a class that is not simulated.
 */
Trajectory integrate(const std::vector<int>& classes,
                     const std::vector<DegreeClassState>& initial,
                     const EpidemicParams& params,
                     const ImpulseSchedule& schedule,
                     const NetworkModel& model,
                     double horizon, double step);

/*! Reconstruction rule for placing impulses when no explicit schedule is
 *  given: while a strain's infected fraction sits at or above its trigger
 *  level, fire at grid times spaced at least `gap` apart. The emitted
 *  intensity is either the fixed value c_i or, in proportional mode,
 *  c_i times the pre-jump infected fraction (capped at u_i either way).
 */
struct ThresholdRule {
    double level1 = 0.0;
    double level2 = 0.0;
    double gap1 = 0.0;
    double gap2 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double u1 = 0.0;
    double u2 = 0.0;
    bool proportional = true;

    double level(int strain) const { return strain == 1 ? level1 : level2; }
    double gap(int strain) const { return strain == 1 ? gap1 : gap2; }
    double c(int strain) const { return strain == 1 ? c1 : c2; }
    double u(int strain) const { return strain == 1 ? u1 : u2; }

    bool operator==(const ThresholdRule&) const = default;
};

/// Runs the flow and fires impulses per the rule; returns the schedule that,
/// replayed through integrate(), reproduces the same trajectory.
ImpulseSchedule generate_threshold_schedule(const std::vector<int>& classes,
                                            const std::vector<DegreeClassState>& initial,
                                            const EpidemicParams& params,
                                            const NetworkModel& model,
                                            const ThresholdRule& rule,
                                            double horizon, double step);

/// Constant infection fields of closed-form mode.
std::array<double, 2> closed_form_thetas(const EpidemicParams& params, const NetworkModel& model);

/// Infection fields (theta1, theta2) of the given per-class states under the
/// model's summation weights; `classes` and `states` are aligned.
std::array<double, 2> summation_thetas(const NetworkModel& model,
                                       const std::vector<int>& classes,
                                       const std::vector<DegreeClassState>& states,
                                       const EpidemicParams& params);

} // namespace netsir

#endif
