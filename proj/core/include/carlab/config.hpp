#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "carlab/randomization.hpp"
#include "carlab/strata.hpp"
#include "carlab/survival_sim.hpp"
#include "carlab/survival_tests.hpp"

namespace carlab {

enum class CovSource { analytic, monte_carlo, file };

// A flat key = value experiment description. Every key has a default except
// `levels`; unknown keys and type mismatches are reported with their line.
struct ExperimentConfig {
    // factor lattice
    std::vector<int> levels;                            // required
    std::vector<std::vector<double>> level_probs;       // empty = uniform
    std::vector<double> joint_probs;                    // non-empty = joint model

    // randomization
    ProcedureConfig procedure;

    // trial and hazards
    int subjects = 600;
    double baseline_hazard = 0.0625;
    std::vector<double> factor_hr;  // hazard ratios per factor; empty = all 1
    double treatment_hr = 1.0;      // theta = log of this
    double enrollment_months = 29.0;
    double followup_months = 36.0;
    double censor_hazard = 0.01;

    // analysis
    std::vector<std::string> tests{"TL"};  // TL TRL TSL TS TRS TPL TRPL
    std::vector<int> score_factors;        // working-model indicators I(Z_f = 2)
    std::vector<int> analysis_factors;     // TPL/TRPL partition; empty = all factors
    CovSource cov_source = CovSource::analytic;
    double sigma2 = -1.0;                  // < 0: estimate via Monte Carlo
    std::string cov_file;
    int mc_subjects = 0;                   // 0: 500 * M_s
    int mc_replications = 1000;

    // execution
    int replications = 1000;
    std::uint64_t master_seed = 20250801;
    int threads = 0;  // 0: CARLAB_THREADS env or hardware
    std::string output_dir = ".";

    // Derived builders (validate on use).
    FactorSpec factor_spec() const;
    HazardModel hazard_model() const;
    TrialDesign trial_design() const;
    WorkingModel working_model() const;
    std::vector<int> analysis_partition() const;
};

ExperimentConfig parse_config(std::istream& in, const std::string& source_name = "<config>");
ExperimentConfig load_config(const std::string& path);

}  // namespace carlab
