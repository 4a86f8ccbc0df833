#include <benchmark/benchmark.h>

#include <cmath>

#include "carlab/correlation.hpp"
#include "carlab/randomization.hpp"
#include "carlab/survival_sim.hpp"
#include "carlab/survival_tests.hpp"

namespace {

using namespace carlab;

ProcedureConfig pocock_simon09() {
    ProcedureConfig cfg;
    cfg.kind = Procedure::pocock_simon;
    cfg.bias_p = 0.9;
    return cfg;
}

void BM_PocockSimonAssign(benchmark::State& state) {
    const FactorSpec spec = FactorSpec::uniform(
        std::vector<int>(static_cast<std::size_t>(state.range(0)), 2));
    const ProcedureConfig cfg = pocock_simon09();
    Rng rng(1);
    AllocationState alloc(spec);
    for (auto _ : state) {
        const SubjectCovariates subject = sample_covariates(spec, rng);
        const double q = arm1_probability(alloc, subject, cfg);
        alloc.apply(subject.stratum, rng.uniform() < q ? 1 : 0);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PocockSimonAssign)->Arg(2)->Arg(4)->Arg(7);

void BM_SimulateTrial(benchmark::State& state) {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    const HazardModel model = case2_hazard(std::log(0.7));
    const TrialDesign design = first_study_design(static_cast<int>(state.range(0)));
    Rng rng(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_trial(spec, pocock_simon09(), model, design, rng));
}
BENCHMARK(BM_SimulateTrial)->Arg(600)->Arg(5000);

void BM_LogrankTest(benchmark::State& state) {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    Rng rng(3);
    const TrialDataset data =
        simulate_trial(spec, pocock_simon09(), case2_hazard(0.0),
                       first_study_design(static_cast<int>(state.range(0))), rng);
    for (auto _ : state) benchmark::DoNotOptimize(logrank_test(data));
}
BENCHMARK(BM_LogrankTest)->Arg(600)->Arg(5000);

void BM_CoxFit(benchmark::State& state) {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    Rng rng(4);
    const TrialDataset data =
        simulate_trial(spec, pocock_simon09(), case2_hazard(0.0),
                       first_study_design(static_cast<int>(state.range(0))), rng);
    const WorkingModel model = WorkingModel::factors_at_level2({1, 2});
    for (auto _ : state) benchmark::DoNotOptimize(fit_beta0(data, spec, model));
}
BENCHMARK(BM_CoxFit)->Arg(600)->Arg(5000);

void BM_RobustLogrank(benchmark::State& state) {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    Rng rng(5);
    const TrialDataset data = simulate_trial(spec, pocock_simon09(), case2_hazard(0.0),
                                             first_study_design(600), rng);
    const CorrelationSpec cor = build_cor_matrix(spec);
    Matrix cov(4, std::vector<double>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) cov[a][b] = 0.24 * cor.matrix[a][b].to_double();
    for (auto _ : state) benchmark::DoNotOptimize(robust_logrank_test(data, cov));
}
BENCHMARK(BM_RobustLogrank);

void BM_SpectrumExact(benchmark::State& state) {
    const FactorSpec spec = FactorSpec::uniform(
        std::vector<int>(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) {
        const CorrelationSpec cor = build_cor_matrix(spec);
        benchmark::DoNotOptimize(spectrum(cor));
    }
}
BENCHMARK(BM_SpectrumExact)->Arg(4)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
