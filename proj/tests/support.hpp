#ifndef NETSIR_TESTS_SUPPORT_HPP
#define NETSIR_TESTS_SUPPORT_HPP

// Shared oracles for the test suites. Everything here is deliberately
// independent of the library's integration and summation code paths: plain
// loops, separate RK4, separate fits.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "netsir/dynamics.hpp"
#include "netsir/network.hpp"
#include "netsir/optimality.hpp"

namespace netsir_tests {

// Single-strain SIR integrator used as a decoupling oracle: (S, I, R) with
// infection rate delta*k*S*I*theta(I) and recovery sigma*k*I.
struct SingleStrainOracle {
    double delta = 0.0;
    double sigma = 0.0;
    int k = 1;
    double weight = 0.0; // theta = delta * weight * I
    bool state_dependent_theta = true;
    double theta_const = 0.0;

    std::array<double, 3> rhs(const std::array<double, 3>& x) const {
        const double theta = state_dependent_theta ? delta * weight * x[1] : theta_const;
        const double inf = delta * k * x[0] * x[1] * theta;
        const double rec = sigma * k * x[1];
        return {-inf, inf - rec, rec};
    }

    std::array<double, 3> step(std::array<double, 3> x, double h) const {
        const auto k1 = rhs(x);
        std::array<double, 3> t;
        for (int i = 0; i < 3; ++i)
            t[i] = x[i] + 0.5 * h * k1[i];
        const auto k2 = rhs(t);
        for (int i = 0; i < 3; ++i)
            t[i] = x[i] + 0.5 * h * k2[i];
        const auto k3 = rhs(t);
        for (int i = 0; i < 3; ++i)
            t[i] = x[i] + h * k3[i];
        const auto k4 = rhs(t);
        for (int i = 0; i < 3; ++i)
            x[i] += h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
        return x;
    }

    std::array<double, 3> run(std::array<double, 3> x, double horizon, double h) const {
        double t = 0.0;
        while (horizon - t > 1e-12) {
            const double step_h = std::min(h, horizon - t);
            x = step(x, step_h);
            t += step_h;
        }
        return x;
    }
};

// Least-squares slope of log(density) against log(degree) over geometric
// bins of ratio 2 starting at k_lo. Bins with no mass are skipped.
inline double fit_loglog_tail_slope(const std::vector<int>& degrees, int k_lo) {
    std::vector<double> xs, ys;
    double lo = k_lo;
    while (true) {
        const double hi = lo * 2.0;
        long count = 0;
        for (int d : degrees)
            if (d >= lo && d < hi)
                ++count;
        if (count > 0) {
            xs.push_back(std::log(std::sqrt(lo * hi)));
            ys.push_back(std::log(count / (hi - lo)));
        }
        bool any_beyond = false;
        for (int d : degrees)
            if (d >= hi) {
                any_beyond = true;
                break;
            }
        if (!any_beyond)
            break;
        lo = hi;
    }
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Fast nonlinear single-class problem on the degenerate support, used for
// order checks and gradient checks. The rates are order one so truncation
// error dominates roundoff.
inline netsir::Problem smooth_test_problem() {
    netsir::Problem p;
    p.model = netsir::build_power_law_model(4, 4);
    p.params = {2.2, 1.7, 0.1, 0.08, netsir::ThetaMode::Summation,
                netsir::Infectivity::DegreeProportional};
    p.costs = {2.0, 3.0, 3.0, 4.0, 0.1, netsir::ImpulseCostState::PostJump};
    p.classes = {4};
    p.initial = {{0.85, 0.08, 0.02, 0.05}};
    p.horizon = 8.0;
    p.step = 0.005;
    return p;
}

// Epidemic-pulse problem with an interior-optimal impulse time near 0.41.
inline netsir::Problem time_toy_problem() {
    netsir::Problem p;
    p.model = netsir::build_power_law_model(4, 4);
    p.params = {3.2, 2.2, 0.2, 0.08, netsir::ThetaMode::Summation,
                netsir::Infectivity::DegreeProportional};
    p.costs = {0.5, 12.0, 0.002, 0.002, 0.1, netsir::ImpulseCostState::PostJump};
    p.classes = {4};
    p.initial = {{0.75, 0.12, 0.05, 0.08}};
    p.horizon = 2.0;
    p.step = 0.002;
    return p;
}

// Threshold-crossing problem whose first intensity has a smooth interior
// optimum below the clamp and whose second event caps out strictly.
inline netsir::Problem intensity_toy_problem() {
    netsir::Problem p;
    p.model = netsir::build_power_law_model(4, 4);
    p.params = {1.0, 3.0, 0.3, 0.12, netsir::ThetaMode::Summation,
                netsir::Infectivity::DegreeProportional};
    p.costs = {2.0, 2.5, 7.0, 60.0, 0.1, netsir::ImpulseCostState::PreJump};
    p.classes = {4};
    p.initial = {{0.82, 0.02, 0.06, 0.1}};
    p.horizon = 3.0;
    p.step = 0.002;
    return p;
}

inline std::vector<netsir::ImpulseEvent> intensity_toy_events() {
    return {{2, 4, 0.3, 0.05, 0.12}, {1, 4, 0.8, 0.002, 0.005}};
}

// Random valid simplex state.
inline netsir::DegreeClassState random_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.02, 1.0);
    double v[4] = {u(rng), u(rng), u(rng), u(rng)};
    const double sum = v[0] + v[1] + v[2] + v[3];
    return {v[0] / sum, v[1] / sum, v[2] / sum, v[3] / sum};
}

} // namespace netsir_tests

#endif
