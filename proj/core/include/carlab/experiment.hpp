#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "carlab/config.hpp"
#include "carlab/imbalance_mc.hpp"
#include "carlab/jacobi.hpp"
#include "carlab/survival_tests.hpp"

namespace carlab {

struct TestRecord {
    double statistic = 0.0;
    double numerator = 0.0;
    double variance = 0.0;
    double psi_term = 0.0;
    double gtg = 0.0;
    double gt_cov_g = 0.0;
    bool reject = false;
};

struct Quantiles {
    double median = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

Quantiles quantiles(std::vector<double> values);

struct TestSummary {
    std::string test;
    int replications = 0;
    double rejection_rate = 0.0;
    Quantiles gamma;          // G'CovG / G'G where defined
    long gamma_undefined = 0;
    Quantiles gtg_over_psi;
    Quantiles n_psi;          // sum_z N_z (V1+V0)/2
    Quantiles n_variance;     // N x variance in the test denominator
};

struct SimulationOutcome {
    std::vector<std::string> tests;
    std::vector<std::vector<TestRecord>> records;  // [test][replication]
    std::vector<TestSummary> summaries;
    Matrix cov_used;          // empty when no robust test ran
    double sigma2_used = -1.0;  // -1 when Cov did not come from sigma2 * Cor
    int subjects = 0;
};

// The Cov plugged into the robust tests, resolved per config: closed-form
// correlation scaled by sigma2 (given or Monte Carlo estimated), a Monte
// Carlo covariance estimate, or a file.
Matrix resolve_cov(const ExperimentConfig& cfg, double& sigma2_used);

// Runs the configured replications in parallel (deterministic in
// (config, master_seed) at any thread count) and aggregates summaries in
// replication order.
SimulationOutcome run_test_simulation(const ExperimentConfig& cfg);

void write_replication_csv(std::ostream& out, const SimulationOutcome& outcome);
void write_summary_csv(std::ostream& out, const SimulationOutcome& outcome);

Matrix load_cov_csv(std::istream& in);
void write_cov_csv(std::ostream& out, const Matrix& m);

}  // namespace carlab
