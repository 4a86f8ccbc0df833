#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "carlab/randomization.hpp"
#include "carlab/strata.hpp"

namespace carlab {

// Covariate-dependent exponential hazard on the log scale:
// log lambda = log_baseline + sum_k covariate_log_hr[k] * 1{level_k == high_level[k]}
//            + theta * arm.
struct HazardModel {
    double log_baseline = 0.0;
    std::vector<double> covariate_log_hr;  // one per factor
    std::vector<int> high_level;           // level that triggers the factor effect; default 2
    double theta = 0.0;                    // treatment log hazard ratio

    double log_hazard(const StratumIndex& stratum, int arm) const;
    double hazard(const StratumIndex& stratum, int arm) const;
};

// Staggered uniform enrollment with an administrative cutoff measured from
// study start and optional exponential censoring measured from entry.
struct TrialDesign {
    int num_subjects = 0;
    double enrollment_months = 0.0;
    double followup_months = 0.0;
    double censor_hazard = 0.0;  // 0 disables random censoring

    void validate() const;
};

// Column-wise per-subject records.
struct TrialDataset {
    std::vector<int> stratum;          // linear stratum code
    std::vector<int> arm;              // 0/1
    std::vector<double> time;          // observed X_i, months from entry
    std::vector<std::uint8_t> event;   // delta_i
    int num_strata = 0;

    std::size_t size() const { return time.size(); }
};

// Simulates one trial: per subject, covariates are sampled, the arm is
// assigned by the configured procedure, and the response is drawn from the
// hazard model. X_i = min(survival, random censor, followup - entry) and
// delta_i marks survival as the minimum. Deterministic given the rng seed.
TrialDataset simulate_trial(const FactorSpec& spec, const ProcedureConfig& cfg,
                            const HazardModel& model, const TrialDesign& design, Rng& rng);

// First simulation study: two equally distributed binary factors, Pocock-
// Simon p = 0.9, N = 600, 29-month enrollment, 36-month follow-up, random
// censor hazard 0.01/month.
HazardModel case1_hazard(double theta);  // no prognostic effect
HazardModel case2_hazard(double theta);  // factor hazard ratios 10 and 5
TrialDesign first_study_design(int num_subjects = 600);

// Second simulation study: four equally distributed binary factors,
// N = 1000, 30-month enrollment, 50-month follow-up, administrative
// censoring only; factor hazard ratios 3, 2, 2, 2.
HazardModel four_factor_hazard(double theta);
TrialDesign second_study_design(int num_subjects = 1000);

// CSV round trip, columns: subject,stratum,arm,time,event (times at full
// precision so the round trip is bit-exact).
void write_dataset_csv(std::ostream& out, const TrialDataset& data);
TrialDataset read_dataset_csv(std::istream& in, int num_strata);

}  // namespace carlab
