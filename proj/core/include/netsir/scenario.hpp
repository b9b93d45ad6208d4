#ifndef NETSIR_SCENARIO_HPP
#define NETSIR_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "netsir/optimality.hpp"

namespace netsir {

enum class ScheduleSource { Explicit, Threshold };

/*! One complete run configuration. Serialized as a flat key = value file
 *  with one [section] per concern; see the config reference in the README.
 *  Unknown keys are rejected by name, omitted optional keys fall back to the
 *  defaults below.
 */
struct ScenarioConfig {
    std::string name = "scenario";

    // [network]
    int m = 4;
    int k_max = 100;
    ThetaMode theta_mode = ThetaMode::Summation;
    Infectivity infectivity = Infectivity::DegreeProportional;

    // [dynamics]
    double horizon = 100.0;
    double step = 0.01;
    std::vector<int> classes = {4};
    double delta1 = 0.075;
    double delta2 = 0.1;
    double sigma1 = 0.0005;
    double sigma2 = 0.0003;

    // [initial] aligned with `classes`
    std::vector<DegreeClassState> initial;

    // [cost]
    double a1 = 2.0;
    double a2 = 3.0;
    double b1 = 3.0;
    double b2 = 4.0;
    double g_coeff = 0.1;
    ImpulseCostState impulse_cost_state = ImpulseCostState::PostJump;

    // [schedule]
    ScheduleSource schedule_source = ScheduleSource::Threshold;
    ThresholdRule rule;
    std::vector<ImpulseEvent> events;

    // [optimizer]
    OptimizerSettings optimizer;

    // [output]
    std::string output_dir = "out";
    std::uint64_t seed = 1;

    /// Throws ConfigError naming the offending field and constraint.
    void validate() const;

    NetworkModel network() const;
    EpidemicParams epidemic_params() const;
    CostModel cost_model() const;
    Problem problem() const;
    /// Explicit event list, or the threshold-generated reconstruction.
    ImpulseSchedule schedule() const;

    bool operator==(const ScenarioConfig&) const;
};

/// Parses and validates a scenario file. Parse failures report the line
/// number; unknown keys are rejected by name.
ScenarioConfig load_scenario(const std::string& path);

/// Canonical serialization; load_scenario(write_scenario(cfg)) == cfg.
void write_scenario(const ScenarioConfig& cfg, const std::string& path);

/// Bundled presets case1, case2, case3. The impulse placement rule is a
/// calibrated reconstruction; see the README. Throws ConfigError for an
/// unknown name.
ScenarioConfig preset(const std::string& name);
std::vector<std::string> preset_names();

} // namespace netsir

#endif
