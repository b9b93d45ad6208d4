#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "netsir/scenario.hpp"

namespace {

netsir::Problem full_support_problem() {
    netsir::Problem p;
    p.model = netsir::build_power_law_model(4, 100);
    p.params = {0.075, 0.1, 0.0005, 0.0003, netsir::ThetaMode::Summation,
                netsir::Infectivity::DegreeProportional};
    p.costs = {2.0, 3.0, 3.0, 4.0, 0.1, netsir::ImpulseCostState::PostJump};
    for (int k = 4; k <= 100; ++k) {
        p.classes.push_back(k);
        p.initial.push_back({0.4, 0.3, 0.2, 0.1});
    }
    p.horizon = 10.0;
    p.step = 0.01;
    return p;
}

void BM_IntegrateSingleClass(benchmark::State& state) {
    const netsir::ScenarioConfig cfg = netsir::preset("case1");
    const netsir::Problem p = cfg.problem();
    const netsir::ImpulseSchedule schedule = cfg.schedule();
    for (auto _ : state) {
        const netsir::Trajectory traj = netsir::simulate(p, schedule);
        benchmark::DoNotOptimize(traj.states.data());
    }
}
BENCHMARK(BM_IntegrateSingleClass);

void BM_IntegrateFullSupport(benchmark::State& state) {
    const netsir::Problem p = full_support_problem();
    for (auto _ : state) {
        const netsir::Trajectory traj = netsir::simulate(p, netsir::ImpulseSchedule{});
        benchmark::DoNotOptimize(traj.states.data());
    }
}
BENCHMARK(BM_IntegrateFullSupport);

void BM_AdjointPass(benchmark::State& state) {
    const netsir::ScenarioConfig cfg = netsir::preset("case1");
    const netsir::Problem p = cfg.problem();
    const netsir::ImpulseSchedule schedule = cfg.schedule();
    const netsir::Trajectory traj = netsir::simulate(p, schedule);
    for (auto _ : state) {
        const netsir::AdjointTrajectory adj =
            netsir::integrate_adjoint(traj, schedule, p.params, p.costs, p.model);
        benchmark::DoNotOptimize(adj.states.data());
    }
}
BENCHMARK(BM_AdjointPass);

void BM_ThetaSummation(benchmark::State& state) {
    const netsir::NetworkModel model = netsir::build_power_law_model(4, 100);
    std::map<int, double> infected;
    for (int k = 4; k <= 100; ++k)
        infected[k] = 0.3;
    for (auto _ : state)
        benchmark::DoNotOptimize(netsir::theta_summation(model, infected, 0.075));
}
BENCHMARK(BM_ThetaSummation);

void BM_TotalCost(benchmark::State& state) {
    const netsir::ScenarioConfig cfg = netsir::preset("case1");
    const netsir::Problem p = cfg.problem();
    const netsir::ImpulseSchedule schedule = cfg.schedule();
    const netsir::Trajectory traj = netsir::simulate(p, schedule);
    for (auto _ : state)
        benchmark::DoNotOptimize(netsir::total_cost(traj, schedule, p.model, p.costs).total);
}
BENCHMARK(BM_TotalCost);

void BM_GenerateBaSequence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const netsir::DegreeSequence seq = netsir::generate_ba_degree_sequence(n, 4, 4, seed++);
        benchmark::DoNotOptimize(seq.degrees.data());
    }
}
BENCHMARK(BM_GenerateBaSequence)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
