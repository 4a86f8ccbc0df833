#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oracles.hpp"

using namespace carlab;

namespace {

ProcedureConfig pocock_simon09() {
    ProcedureConfig cfg;
    cfg.kind = Procedure::pocock_simon;
    cfg.bias_p = 0.9;
    return cfg;
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace

TEST_CASE("no censoring mechanism means every subject has an event") {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    TrialDesign design{500, 10.0, 1e9, 0.0};
    Rng rng(1);
    const TrialDataset data =
        simulate_trial(spec, pocock_simon09(), case2_hazard(0.0), design, rng);
    for (std::size_t i = 0; i < data.size(); ++i) {
        CHECK(data.event[i] == 1);
        CHECK(data.time[i] > 0.0);
    }
}

TEST_CASE("lowest-risk control median survival is about 11.1 months") {
    // all mass on stratum (1,1): baseline hazard 0.0625 only
    const FactorSpec spec = FactorSpec::joint({2, 2}, {1.0, 0.0, 0.0, 0.0});
    TrialDesign design{100000, 0.0, 1e9, 0.0};
    Rng rng(2);
    const TrialDataset data =
        simulate_trial(spec, pocock_simon09(), case2_hazard(0.0), design, rng);
    CHECK(std::abs(median_of(data.time) - std::log(2.0) / 0.0625) <= 0.5);
}

TEST_CASE("case-2 overall censoring fraction is about 14 percent") {
    // Under theta = ln 0.7 the exact value is 12.1% (it integrates to
    // (lambda/(lambda+c)) * E[1 - e^{-(lambda+c) * admin}] per stratum-arm
    // cell); the null case gives 10.5%.
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    const TrialDesign design = first_study_design(600);
    long censored = 0, total = 0;
    for (int rep = 0; rep < 200; ++rep) {
        Rng rng = Rng::stream(33, rep);
        const TrialDataset data =
            simulate_trial(spec, pocock_simon09(), case2_hazard(std::log(0.7)), design, rng);
        for (std::size_t i = 0; i < data.size(); ++i) censored += data.event[i] == 0;
        total += static_cast<long>(data.size());
    }
    CHECK(std::abs(double(censored) / total - 0.14) <= 0.03);
}

TEST_CASE("second-design medians: lowest and highest risk strata") {
    SUBCASE("lowest risk: ln2 / 0.015, about 46.2 months") {
        std::vector<double> w(16, 0.0);
        w[0] = 1.0;
        const FactorSpec spec = FactorSpec::joint({2, 2, 2, 2}, w);
        TrialDesign design{100000, 0.0, 1e9, 0.0};
        Rng rng(3);
        const TrialDataset data =
            simulate_trial(spec, pocock_simon09(), four_factor_hazard(0.0), design, rng);
        CHECK(std::abs(median_of(data.time) - std::log(2.0) / 0.015) <= 1.0);
    }
    SUBCASE("highest risk: hazard 0.015*3*2*2*2 = 0.36, median about 1.93") {
        std::vector<double> w(16, 0.0);
        w[15] = 1.0;
        const FactorSpec spec = FactorSpec::joint({2, 2, 2, 2}, w);
        TrialDesign design{100000, 0.0, 1e9, 0.0};
        Rng rng(4);
        const TrialDataset data =
            simulate_trial(spec, pocock_simon09(), four_factor_hazard(0.0), design, rng);
        CHECK(std::abs(median_of(data.time) - std::log(2.0) / 0.36) <= 0.06);
    }
}

TEST_CASE("under the null the arms have the same response distribution per stratum") {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    TrialDesign design{40000, 29.0, 36.0, 0.01};
    Rng rng(5);
    const TrialDataset data =
        simulate_trial(spec, pocock_simon09(), case2_hazard(0.0), design, rng);
    for (int z = 0; z < 4; ++z) {
        std::vector<double> arm0, arm1;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (data.stratum[i] != z) continue;
            (data.arm[i] ? arm1 : arm0).push_back(data.time[i]);
        }
        REQUIRE(arm0.size() > 1000);
        const double ks = oracle::ks_distance(arm0, arm1);
        // 2.2 * sqrt(1/n0 + 1/n1) sits near the alpha = 0.0001 critical value
        CHECK(ks <= 2.2 * std::sqrt(1.0 / arm0.size() + 1.0 / arm1.size()));
    }
}

TEST_CASE("event times are exponential with the modeled rate") {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    TrialDesign design{80000, 0.0, 1e9, 0.0};
    Rng rng(6);
    const HazardModel model = case2_hazard(std::log(0.7));
    const TrialDataset data = simulate_trial(spec, pocock_simon09(), model, design, rng);
    for (int z = 0; z < 4; ++z)
        for (int arm = 0; arm < 2; ++arm) {
            std::vector<double> times;
            for (std::size_t i = 0; i < data.size(); ++i)
                if (data.stratum[i] == z && data.arm[i] == arm) times.push_back(data.time[i]);
            REQUIRE(times.size() > 2000);
            const double rate = model.hazard(spec.stratum(z), arm);
            double mean = 0.0;
            for (double t : times) mean += t;
            mean /= times.size();
            CHECK(std::abs(mean - 1.0 / rate) <= 3.0 / (rate * std::sqrt(double(times.size()))));
        }
}

TEST_CASE("hazard model guards") {
    HazardModel m = case2_hazard(0.0);
    m.covariate_log_hr.pop_back();
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    CHECK_THROWS_AS(m.log_hazard(spec.stratum(0), 0), std::invalid_argument);

    TrialDesign bad{600, 29.0, 20.0, 0.01};  // follow-up shorter than enrollment
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    TrialDesign single{1, 29.0, 36.0, 0.01};
    CHECK_THROWS_AS(single.validate(), std::invalid_argument);
}

TEST_CASE("dataset CSV round trip is bit exact") {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    Rng rng(9);
    const TrialDataset data =
        simulate_trial(spec, pocock_simon09(), case2_hazard(std::log(0.7)),
                       first_study_design(100), rng);
    std::stringstream buffer;
    write_dataset_csv(buffer, data);
    const TrialDataset back = read_dataset_csv(buffer, data.num_strata);
    REQUIRE(back.size() == data.size());
    CHECK(back.stratum == data.stratum);
    CHECK(back.arm == data.arm);
    CHECK(back.event == data.event);
    for (std::size_t i = 0; i < data.size(); ++i) CHECK(back.time[i] == data.time[i]);

    std::stringstream bad("subject,arm\n");
    CHECK_THROWS(read_dataset_csv(bad, 4));
}

TEST_CASE("simulation is deterministic in the seed") {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    Rng a(31), b(31);
    const TrialDataset da =
        simulate_trial(spec, pocock_simon09(), case2_hazard(0.0), first_study_design(200), a);
    const TrialDataset db =
        simulate_trial(spec, pocock_simon09(), case2_hazard(0.0), first_study_design(200), b);
    CHECK(da.stratum == db.stratum);
    CHECK(da.arm == db.arm);
    CHECK(da.event == db.event);
    for (std::size_t i = 0; i < da.size(); ++i) CHECK(da.time[i] == db.time[i]);
}
