#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "carlab/jacobi.hpp"
#include "carlab/randomization.hpp"
#include "carlab/strata.hpp"

namespace carlab {

// Final-state normalized imbalances d_N(z) = D_N(z)/sqrt(N_z) for one
// replication. Strata that happened to stay empty are flagged and excluded
// from downstream moments.
struct ImbalanceSample {
    int replication = 0;
    std::vector<double> d;           // per stratum; 0 placeholder when empty
    std::vector<int> stratum_sizes;  // N_z
    std::vector<std::uint8_t> occupied;
};

// R independent replications of (sample covariates, allocate N subjects).
// Per-replication streams derive from (master_seed, replication), so the
// result is identical at any thread count.
std::vector<ImbalanceSample> collect_imbalances(const FactorSpec& spec, const ProcedureConfig& cfg,
                                                int num_subjects, int replications,
                                                std::uint64_t master_seed, int threads = 0);

struct CovEstimate {
    Matrix cov_hat;      // M_s x M_s sample covariance (n-1 denominator)
    double sigma2_hat;   // per-stratum variances of d averaged over strata
    // Average estimated correlation over stratum pairs whose agreement set
    // is exactly the key; only sets with at least one pair appear.
    std::map<std::uint32_t, double> class_correlations;
    std::map<std::uint32_t, long> class_pair_counts;
    double mev_hat;      // max eigenvalue of cov_hat
    long empty_stratum_events;  // replications x strata flagged empty
};

// Moments across replications. Aggregation always runs in replication-index
// order, so permuting the input changes nothing, bit for bit.
CovEstimate estimate_cov(const FactorSpec& spec, std::vector<ImbalanceSample> samples);

// sigma2_hat times the exact closed-form lambda_max: the maximum eigenvalue
// of the asymptotic covariance matrix under equal prevalence. Throws on
// unequal-prevalence specs, where the closed form does not apply.
double mev_product(const FactorSpec& spec, double sigma2_hat);

}  // namespace carlab
