#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"

using namespace carlab;

namespace {

const FactorSpec kSpec22 = FactorSpec::uniform({2, 2});

TrialDataset two_subject_example() {
    // arm-1 event at t=1, arm-0 censored at t=2
    TrialDataset data;
    data.num_strata = 4;
    data.stratum = {0, 0};
    data.arm = {1, 0};
    data.time = {1.0, 2.0};
    data.event = {1, 0};
    return data;
}

TrialDataset swap_arms(TrialDataset data) {
    for (auto& a : data.arm) a = 1 - a;
    return data;
}

ProcedureConfig pocock_simon09() {
    ProcedureConfig cfg;
    cfg.kind = Procedure::pocock_simon;
    cfg.bias_p = 0.9;
    return cfg;
}

TrialDataset case2_dataset(int n, double theta, std::uint64_t seed) {
    Rng rng(seed);
    return simulate_trial(kSpec22, pocock_simon09(), case2_hazard(theta),
                          first_study_design(n), rng);
}

}  // namespace

TEST_CASE("two-subject log-rank example evaluates exactly") {
    const TrialDataset data = two_subject_example();
    const TestReport report = logrank_test(data);
    // single event term: 1 - 1/2 = 0.5 before the N^{-1/2} scaling
    CHECK(report.numerator == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(report.variance_used == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(report.statistic == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(report.rejected_onesided_0p025);
}

TEST_CASE("log-rank numerator equals the hypergeometric brute force") {
    Rng rng(101);
    for (int trial = 0; trial < 250; ++trial) {
        const TrialDataset data = oracle::random_small_dataset(rng, kSpec22, 12, true);
        const oracle::LogrankParts expected = oracle::logrank_brute_force(data);
        if (expected.variance_sum <= 0.0) continue;
        const TestReport report = logrank_test(data);
        const double n = static_cast<double>(data.size());
        CHECK(report.numerator * std::sqrt(n) ==
              doctest::Approx(expected.numerator).epsilon(1e-12).scale(1.0));
        CHECK(report.variance_used * n ==
              doctest::Approx(expected.variance_sum).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("swapping arms negates the statistic and keeps the variance") {
    Rng rng(505);
    for (int trial = 0; trial < 60; ++trial) {
        const TrialDataset data = oracle::random_small_dataset(rng, kSpec22, 40, true);
        if (oracle::logrank_brute_force(data).variance_sum <= 0.0) continue;
        const TrialDataset swapped = swap_arms(data);

        const TestReport lr = logrank_test(data), lr2 = logrank_test(swapped);
        CHECK(lr2.statistic == doctest::Approx(-lr.statistic).epsilon(1e-12));
        CHECK(lr2.variance_used == doctest::Approx(lr.variance_used).epsilon(1e-12));

        const auto partition = identity_partition(data.num_strata);
        try {
            const TestReport sl = stratified_logrank_test(data, partition);
            const TestReport sl2 = stratified_logrank_test(swapped, partition);
            CHECK(sl2.statistic == doctest::Approx(-sl.statistic).epsilon(1e-12));
        } catch (const std::runtime_error&) {
            // all events in single-arm strata: stratified variance is empty
        }

        try {
            const WorkingModel model = WorkingModel::factors_at_level2({1});
            const TestReport sc = score_test(data, kSpec22, model);
            const TestReport sc2 = score_test(swapped, kSpec22, model);
            CHECK(sc2.numerator == doctest::Approx(-sc.numerator).epsilon(1e-10));
            CHECK(sc2.variance_used == doctest::Approx(sc.variance_used).epsilon(1e-10));
        } catch (const std::runtime_error&) {
            // separated design on a tiny draw
        }
    }
}

TEST_CASE("W = 0 score numerator equals the log-rank numerator") {
    Rng rng(707);
    for (int trial = 0; trial < 50; ++trial) {
        const TrialDataset data = oracle::random_small_dataset(rng, kSpec22, 30, true);
        if (oracle::logrank_brute_force(data).variance_sum <= 0.0) continue;
        const TestReport score = score_test(data, kSpec22, WorkingModel::none());
        const TestReport lr = logrank_test(data);
        CHECK(score.numerator == doctest::Approx(lr.numerator).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("score numerator matches a finite difference of the partial likelihood") {
    Rng rng(909);
    const WorkingModel model = WorkingModel::factors_at_level2({1});
    int checked = 0;
    for (int trial = 0; trial < 80 && checked < 50; ++trial) {
        const TrialDataset data = oracle::random_small_dataset(rng, kSpec22, 40, false);
        int events = 0, arm1 = 0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            events += data.event[i];
            arm1 += data.arm[i];
        }
        if (events < 3 || arm1 == 0 || arm1 == static_cast<int>(data.size())) continue;
        CoxFit fit;
        try {
            fit = fit_beta0(data, kSpec22, model);
        } catch (const std::runtime_error&) {
            continue;  // separated design on a tiny draw
        }
        const TestReport report = score_test(data, kSpec22, model);
        const double u = report.numerator * std::sqrt(double(data.size()));
        const double h = 1e-5;
        const double fd = (oracle::log_partial_likelihood_naive(data, kSpec22, model, fit.beta, h) -
                           oracle::log_partial_likelihood_naive(data, kSpec22, model, fit.beta,
                                                                -h)) /
                          (2.0 * h);
        CHECK(u == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("fit_beta0") {
    SUBCASE("empty design is a no-op") {
        const TrialDataset data = two_subject_example();
        const CoxFit fit = fit_beta0(data, kSpec22, WorkingModel::none());
        CHECK(fit.beta.empty());
    }

    SUBCASE("gradient vanishes against the naive likelihood") {
        const WorkingModel model = WorkingModel::factors_at_level2({1, 2});
        const TrialDataset data = case2_dataset(400, 0.0, 8);
        const CoxFit fit = fit_beta0(data, kSpec22, model);
        CHECK(fit.grad_norm <= 1e-8);
        const double h = 1e-5;
        for (std::size_t c = 0; c < fit.beta.size(); ++c) {
            std::vector<double> up = fit.beta, down = fit.beta;
            up[c] += h;
            down[c] -= h;
            const double fd =
                (oracle::log_partial_likelihood_naive(data, kSpec22, model, up, 0.0) -
                 oracle::log_partial_likelihood_naive(data, kSpec22, model, down, 0.0)) /
                (2.0 * h);
            CHECK(std::abs(fd) <= 1e-4);  // finite-difference noise around a true zero
        }
    }

    SUBCASE("recovers the generating log hazard ratios at N = 1e5") {
        const TrialDataset data = case2_dataset(100000, 0.0, 12);
        const CoxFit fit = fit_beta0(data, kSpec22, WorkingModel::factors_at_level2({1, 2}));
        REQUIRE(fit.beta.size() == 2);
        CHECK(std::abs(fit.beta[0] - std::log(10.0)) <= 0.05);
        CHECK(std::abs(fit.beta[1] - std::log(5.0)) <= 0.05);
    }

    SUBCASE("no events is an error") {
        TrialDataset data = two_subject_example();
        data.event = {0, 0};
        CHECK_THROWS_AS(fit_beta0(data, kSpec22, WorkingModel::factors_at_level2({1})),
                        std::runtime_error);
        CHECK_THROWS_AS(logrank_test(data), std::runtime_error);
    }
}

TEST_CASE("residuals match the direct double-loop evaluation") {
    Rng rng(222);
    const WorkingModel model = WorkingModel::factors_at_level2({1});
    int checked = 0;
    for (int trial = 0; trial < 80 && checked < 50; ++trial) {
        const TrialDataset data = oracle::random_small_dataset(rng, kSpec22, 25, true);
        int events = 0, arm1 = 0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            events += data.event[i];
            arm1 += data.arm[i];
        }
        if (events < 2 || arm1 == 0 || arm1 == static_cast<int>(data.size())) continue;
        CoxFit fit;
        try {
            fit = fit_beta0(data, kSpec22, model);
        } catch (const std::runtime_error&) {
            continue;
        }
        const std::vector<double> fast = residuals_score(data, kSpec22, model, fit.beta);
        const std::vector<double> direct = oracle::residuals_direct(data, kSpec22, model, fit.beta);
        double b_fast = 0.0;
        for (double r : fast) b_fast += r * r;
        b_fast /= static_cast<double>(data.size());
        const double b_direct = oracle::robust_variance_direct(data, kSpec22, model, fit.beta);
        for (std::size_t i = 0; i < fast.size(); ++i)
            CHECK(fast[i] == doctest::Approx(direct[i]).epsilon(1e-10).scale(1.0));
        CHECK(b_fast == doctest::Approx(b_direct).epsilon(1e-10));

        // the score-test denominator is exactly N^{-1} sum O_i^2
        const TestReport report = score_test(data, kSpec22, model);
        CHECK(report.variance_used == doctest::Approx(b_fast).epsilon(1e-12));
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("logrank residuals are the W = 0 special case") {
    Rng rng(333);
    const TrialDataset data = oracle::random_small_dataset(rng, kSpec22, 30, true);
    const std::vector<double> tilde = residuals_logrank(data);
    const std::vector<double> general = residuals_score(data, kSpec22, WorkingModel::none(), {});
    CHECK(tilde == general);

    // a censored subject has no event term: the residual is minus the
    // cumulative sum while at risk
    const TrialDataset example = two_subject_example();
    const std::vector<double> res = residuals_logrank(example);
    CHECK(res[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(res[1] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("robust variance identities") {
    const TrialDataset data = case2_dataset(600, 0.0, 55);
    const std::vector<double> residuals = residuals_logrank(data);

    SUBCASE("Cov = nu I collapses to the within-stratum form") {
        const double nu = 0.37;
        Matrix cov(4, std::vector<double>(4, 0.0));
        for (int z = 0; z < 4; ++z) cov[z][z] = nu;
        const RobustVariance rv = robust_variance(data, residuals, cov);
        double expected = rv.psi_term;
        for (int z = 0; z < 4; ++z)
            expected += nu * rv.n_z[z] / double(data.size()) * rv.e_z[z] * rv.e_z[z];
        CHECK(rv.value == doctest::Approx(expected).epsilon(1e-13));
    }

    SUBCASE("zero stratum means leave only the psi term") {
        std::vector<double> centered = residuals;
        // center every stratum-arm cell so the signed stratum mean is 0
        std::vector<std::array<double, 2>> mean(4, {0.0, 0.0});
        std::vector<std::array<int, 2>> count(4, {0, 0});
        for (std::size_t i = 0; i < data.size(); ++i) {
            mean[data.stratum[i]][data.arm[i]] += centered[i];
            ++count[data.stratum[i]][data.arm[i]];
        }
        for (int z = 0; z < 4; ++z)
            for (int arm = 0; arm < 2; ++arm) mean[z][arm] /= count[z][arm];
        for (std::size_t i = 0; i < data.size(); ++i)
            centered[i] -= mean[data.stratum[i]][data.arm[i]];
        Matrix cov(4, std::vector<double>(4, 0.5));
        const RobustVariance rv = robust_variance(data, centered, cov);
        CHECK(rv.gtg <= 1e-22);
        CHECK(rv.value == doctest::Approx(rv.psi_term).epsilon(1e-12));
    }

    SUBCASE("robust value is bounded by psi + G'G times the Cov spectral radius") {
        const Matrix cov = [&] {
            Matrix cor{{1, -1, -1, 1}, {-1, 1, 1, -1}, {-1, 1, 1, -1}, {1, -1, -1, 1}};
            for (auto& row : cor)
                for (double& v : row) v *= 0.24;
            return cor;
        }();
        const RobustVariance rv = robust_variance(data, residuals, cov);
        const double bound = rv.psi_term + rv.gtg * max_eigenvalue(cov);
        CHECK(rv.value <= bound + 1e-12);
    }
}

TEST_CASE("sparse stratum-arm cells error unless pooling is enabled") {
    TrialDataset data;
    data.num_strata = 2;
    // stratum 0 has one arm-1 subject only; stratum 1 is healthy
    data.stratum = {0, 0, 0, 1, 1, 1, 1};
    data.arm = {1, 0, 0, 1, 1, 0, 0};
    data.time = {1, 2, 3, 4, 5, 6, 7};
    data.event = {1, 1, 0, 1, 0, 1, 0};
    const std::vector<double> residuals{0.3, -0.1, 0.2, 0.5, -0.2, 0.1, -0.4};
    const Matrix cov{{1.0, 0.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(robust_variance(data, residuals, cov), std::runtime_error);
    RobustOptions opts;
    opts.pool_sparse_cells = true;
    const RobustVariance rv = robust_variance(data, residuals, cov, opts);
    CHECK(rv.pooled_cells == 1);
    CHECK(rv.value > 0.0);
}

TEST_CASE("partition identities") {
    const TrialDataset data = case2_dataset(600, std::log(0.7), 77);
    const Matrix cov = [&] {
        Matrix cor{{1, -1, -1, 1}, {-1, 1, 1, -1}, {-1, 1, 1, -1}, {1, -1, -1, 1}};
        for (auto& row : cor)
            for (double& v : row) v *= 0.24;
        return cor;
    }();

    SUBCASE("one analysis block reproduces the unstratified tests") {
        const auto whole = whole_population_partition(4);
        const TestReport pl = stratified_logrank_test(data, whole);
        const TestReport lr = logrank_test(data);
        CHECK(pl.statistic == doctest::Approx(lr.statistic).epsilon(1e-12));

        const TestReport rpl = robust_partial_logrank_test(data, whole, cov);
        const TestReport rl = robust_logrank_test(data, cov);
        CHECK(rpl.statistic == doctest::Approx(rl.statistic).epsilon(1e-12));
        CHECK(rpl.variance_used == doctest::Approx(rl.variance_used).epsilon(1e-12));
    }

    SUBCASE("partition by the first factor pools its level pairs") {
        const std::vector<int> partition = partition_by_factors(kSpec22, {1});
        CHECK(partition == std::vector<int>{0, 0, 1, 1});
        const TestReport rpl = robust_partial_logrank_test(data, partition, cov);
        CHECK(rpl.variance_used > 0.0);
        CHECK(rpl.n_z.size() == 4);  // stats still per randomization stratum
    }
}

TEST_CASE("case-2 null variance medians sit where the published study puts them") {
    // published medians at N=600: robust log-rank variance about 64.5
    // against about 133.9 in the plain log-rank denominator
    const Matrix cov = [] {
        Matrix cor{{1, -1, -1, 1}, {-1, 1, 1, -1}, {-1, 1, 1, -1}, {1, -1, -1, 1}};
        for (auto& row : cor)
            for (double& v : row) v *= 0.24;
        return cor;
    }();
    std::vector<double> n_robust, n_plain;
    for (int rep = 0; rep < 300; ++rep) {
        Rng rng = Rng::stream(46, rep);
        const TrialDataset data =
            simulate_trial(kSpec22, pocock_simon09(), case2_hazard(0.0),
                           first_study_design(600), rng);
        n_plain.push_back(600.0 * logrank_test(data).variance_used);
        n_robust.push_back(600.0 * robust_logrank_test(data, cov).variance_used);
    }
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    const double plain = median(n_plain), robust = median(n_robust);
    CHECK(plain >= 125.0);
    CHECK(plain <= 142.0);
    CHECK(robust >= 55.0);
    CHECK(robust <= 75.0);
}

TEST_CASE("diagnostics handle an undefined gamma") {
    TestReport report;
    report.psi_term = 0.5;
    report.gtg = 0.0;
    report.gt_cov_g = 0.0;
    report.variance_used = 0.5;
    const TestDiagnostics d = diagnostics(report, 100);
    CHECK_FALSE(d.gamma_defined);
    CHECK(d.n_psi == doctest::Approx(50.0));

    report.gtg = 0.25;
    report.gt_cov_g = 0.1;
    const TestDiagnostics d2 = diagnostics(report, 100);
    CHECK(d2.gamma_defined);
    CHECK(d2.gamma_hat == doctest::Approx(0.4));
    CHECK(d2.gtg_over_psi == doctest::Approx(0.5));
}

TEST_CASE("subjects censored exactly at an event time stay in its risk set") {
    // two events at t = 2 with a censoring tied to the same time: the
    // censored subject counts in Y(2)
    TrialDataset data;
    data.num_strata = 1;
    data.stratum = {0, 0, 0, 0};
    data.arm = {1, 0, 1, 0};
    data.time = {2.0, 2.0, 2.0, 3.0};
    data.event = {1, 1, 0, 0};
    const TestReport report = logrank_test(data);
    // at t=2: Y=4, Y1=2, two deaths with d1=1: U = 1 - 2*(2/4) = 0
    CHECK(report.numerator == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    // variance: 2 * (1/2)(1/2) = 0.5, scaled by 1/N
    CHECK(report.variance_used == doctest::Approx(0.5 / 4.0).epsilon(1e-14));
    const auto expected = oracle::logrank_brute_force(data);
    CHECK(report.numerator * 2.0 == doctest::Approx(expected.numerator).scale(1.0));
}

TEST_CASE("stratified test skips event-free strata and errors without any event") {
    TrialDataset data;
    data.num_strata = 4;
    data.stratum = {0, 0, 1, 1};
    data.arm = {1, 0, 1, 0};
    data.time = {1.0, 2.0, 3.0, 4.0};
    data.event = {1, 0, 0, 0};  // stratum 1 has no events
    const TestReport report = stratified_logrank_test(data, identity_partition(4));
    CHECK(report.empty_analysis_strata >= 1);

    TrialDataset none = data;
    none.event = {0, 0, 0, 0};
    CHECK_THROWS_AS(stratified_logrank_test(none, identity_partition(4)), std::runtime_error);
}
