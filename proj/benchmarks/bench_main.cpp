#include <benchmark/benchmark.h>

#include <vector>

#include "sehasel/actuator.hpp"
#include "sehasel/circuit.hpp"
#include "sehasel/config.hpp"
#include "sehasel/plant.hpp"
#include "sehasel/scenario.hpp"

namespace {

using namespace sehasel;

void bm_simulate_ode(benchmark::State& state) {
    const CircuitParams params;
    const DriveWaveform wave{DriveWaveform::Kind::AcSquare, 6000.0, 2.0};
    const double dt = 1e-4;
    const auto input = sample_waveform(wave, dt, 100000);
    const auto method = state.range(0) == 0 ? OdeMethod::ExponentialExact
                                            : OdeMethod::Rk4;
    for (auto _ : state) {
        auto trace = simulate_ode(params, input, dt, method);
        benchmark::DoNotOptimize(trace.samples.back().u_o);
    }
    state.SetItemsProcessed(state.iterations() * int64_t(input.size()));
}
BENCHMARK(bm_simulate_ode)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void bm_cell_displacement(benchmark::State& state) {
    const ActuatorConfig cfg;
    double pe = 1e3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cell_displacement(cfg, pe, 0.4905));
        pe = pe < 6e4 ? pe + 1.0 : 1e3;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_cell_displacement);

void bm_plant_step(benchmark::State& state) {
    PlantParams params;
    params.damping_c = 1.0;
    const ActuatorConfig actuator;
    const DisturbanceProfile none;
    PlantState plant;
    for (auto _ : state) {
        plant = plant_step(params, plant, 3000.0, actuator, 1e-4, none);
        benchmark::DoNotOptimize(plant.x_a);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_plant_step);

void bm_closed_loop_second(benchmark::State& state) {
    ScenarioConfig cfg;
    cfg.kind = ScenarioKind::Track;
    cfg.duration = 1.0;
    cfg.controller.gains.kp = 3e4;
    cfg.controller.gains.ki = 1e6;
    cfg.target = {TargetSpec::Kind::Const, 0.0, 4e-3, 0.0, {}};
    cfg.plant.damping_c = damping_for_ratio(0.5, 14.0, 0.08);
    for (auto _ : state) {
        auto result = run_scenario(cfg);
        benchmark::DoNotOptimize(result.report.rmse);
    }
    state.SetItemsProcessed(state.iterations() *
                            int64_t(cfg.duration / cfg.plant_dt));
    state.counters["sim_s_per_iter"] = cfg.duration;
}
BENCHMARK(bm_closed_loop_second)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
