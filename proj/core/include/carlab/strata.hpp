#pragma once

#include <string>
#include <vector>

#include "carlab/rng.hpp"

namespace carlab {

// A stratum is one level combination of the prognostic factors. Levels are
// 1-based (level h of factor j, 1 <= h <= n_j); the linear index is the
// mixed-radix encoding with factor 1 as the most significant digit.
struct StratumIndex {
    std::vector<int> multi;  // (i_1, ..., i_M), 1-based
    int linear = 0;          // in [0, M_s)

    bool operator==(const StratumIndex& other) const = default;
};

enum class PrevalenceModel { independent, joint };

// Factor-level lattice with a stratum prevalence model. Immutable after
// construction; validation happens in the factory functions.
class FactorSpec {
  public:
    FactorSpec() = default;  // empty placeholder; build via the factories

    // Independent factors; level_probs[k] is the level distribution of
    // factor k+1 and must sum to 1.
    static FactorSpec independent(std::vector<int> levels,
                                  std::vector<std::vector<double>> level_probs);

    // Independent factors, all levels equally likely.
    static FactorSpec uniform(std::vector<int> levels);

    // One probability per stratum, indexed by the linear stratum code.
    static FactorSpec joint(std::vector<int> levels, std::vector<double> stratum_probs);

    int num_factors() const { return static_cast<int>(levels_.size()); }
    const std::vector<int>& levels() const { return levels_; }
    int num_levels(int factor) const { return levels_[factor - 1]; }
    int num_strata() const { return num_strata_; }
    PrevalenceModel prevalence_model() const { return model_; }

    // w_z for the linear stratum index.
    double stratum_prevalence(int linear) const;

    // Marginal probability of level h of factor j.
    double level_prevalence(int factor, int level) const;

    // True when every stratum has prevalence 1/M_s (within 1e-12).
    bool equal_prevalence() const;

    int linear_index(const std::vector<int>& multi) const;
    StratumIndex stratum(int linear) const;

  private:
    std::vector<int> levels_;
    int num_strata_ = 0;
    PrevalenceModel model_ = PrevalenceModel::independent;
    std::vector<std::vector<double>> level_probs_;  // independent model
    std::vector<double> stratum_probs_;             // joint model (also cached for independent)
};

struct SubjectCovariates {
    StratumIndex stratum;
    const std::vector<int>& raw_levels() const { return stratum.multi; }
};

// All M_s strata in ascending linear order.
std::vector<StratumIndex> enumerate_strata(const FactorSpec& spec);

// Draws a stratum according to the prevalence model. Independent model
// consumes one uniform per factor, joint model one uniform total.
SubjectCovariates sample_covariates(const FactorSpec& spec, Rng& rng);

// The strata with i_j = level: exactly prod_{k != j} n_k of them, ascending.
std::vector<StratumIndex> marginal_members(const FactorSpec& spec, int factor, int level);

}  // namespace carlab
