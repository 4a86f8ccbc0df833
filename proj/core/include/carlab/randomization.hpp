#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "carlab/rng.hpp"
#include "carlab/strata.hpp"

namespace carlab {

enum class Procedure {
    pocock_simon,
    stratified_permuted_block,
    efron_biased_coin,
    wei_urn,
    big_stick,
    complete
};

enum class ImbalanceMeasure { squared, absolute };

std::string to_string(Procedure p);
Procedure procedure_from_string(const std::string& name);

struct ProcedureConfig {
    Procedure kind = Procedure::pocock_simon;
    double bias_p = 0.9;  // pocock_simon and efron_biased_coin, in (1/2, 1]
    ImbalanceMeasure imbalance_measure = ImbalanceMeasure::squared;
    int block_size = 4;   // stratified_permuted_block, even and >= 2
    int mti_bound = 3;    // big_stick, >= 1
    int urn_alpha = 1;    // wei_urn, >= 0
    int urn_beta = 1;     // wei_urn, >= 0

    // Throws std::invalid_argument if the parameters required by `kind`
    // are out of range.
    void validate() const;
};

// Treatment counts per stratum plus the marginal imbalances D(j;h), kept in
// lockstep: after every apply() the margins are exactly the sums of the
// within-stratum imbalances over their member strata.
class AllocationState {
  public:
    explicit AllocationState(const FactorSpec& spec);

    int total_assigned() const { return total_; }
    int stratum_count(int linear, int arm) const { return counts_[linear][arm]; }
    int stratum_size(int linear) const { return counts_[linear][0] + counts_[linear][1]; }
    std::int64_t stratum_imbalance(int linear) const {  // D(z) = n1 - n0
        return static_cast<std::int64_t>(counts_[linear][1]) - counts_[linear][0];
    }
    std::int64_t margin_imbalance(int factor, int level) const {
        return margins_[margin_offset_[factor - 1] + level - 1];
    }
    // Overall imbalance (sum over all margins) under the given measure.
    std::int64_t overall_imbalance(ImbalanceMeasure measure) const;

    int num_strata() const { return static_cast<int>(counts_.size()); }
    const std::vector<int>& factor_levels() const { return levels_; }

    void apply(const StratumIndex& stratum, int arm);

    // Recomputes every margin from the per-stratum counts and throws
    // std::logic_error on any mismatch.
    void check_invariants(const FactorSpec& spec) const;

  private:
    std::vector<int> levels_;
    std::vector<int> margin_offset_;
    std::vector<std::array<int, 2>> counts_;
    std::vector<std::int64_t> margins_;
    int total_ = 0;
};

// Probability that the next subject is assigned arm 1 given the current
// state. Pure in (state, subject, cfg); the caller draws one uniform u and
// assigns arm 1 iff u < q. Swapping arms negates the state and maps q to
// 1 - q for every procedure, so feeding 1-u reproduces the mirrored trace.
double arm1_probability(const AllocationState& state, const SubjectCovariates& subject,
                        const ProcedureConfig& cfg);

// One Pocock-Simon assignment: picks the arm whose hypothetical overall
// imbalance is smaller with probability cfg.bias_p (fair coin on exact
// integer ties) and applies it to the state. cfg.kind must be pocock_simon.
int pocock_simon_assign(AllocationState& state, const SubjectCovariates& subject,
                        const ProcedureConfig& cfg, Rng& rng);

// Same contract for the five reference procedures (cfg.kind != pocock_simon).
int reference_assign(AllocationState& state, const SubjectCovariates& subject,
                     const ProcedureConfig& cfg, Rng& rng);

// Dispatches on cfg.kind.
int assign(AllocationState& state, const SubjectCovariates& subject, const ProcedureConfig& cfg,
           Rng& rng);

struct AllocationRun {
    std::vector<int> assignments;
    std::vector<SubjectCovariates> covariates;
    AllocationState final_state;
};

// Samples N subjects and assigns them sequentially; deterministic given the
// rng seed.
AllocationRun run_allocation(const FactorSpec& spec, const ProcedureConfig& cfg, int num_subjects,
                             Rng& rng);

// Trace record for the optional CSV dump (one row per subject).
struct AllocationTraceRow {
    int subject_index;  // 0-based
    int stratum_linear;
    int arm;
    std::int64_t imb_after;  // overall imbalance (cfg measure) after the assignment
};

AllocationRun run_allocation_traced(const FactorSpec& spec, const ProcedureConfig& cfg,
                                    int num_subjects, Rng& rng,
                                    std::vector<AllocationTraceRow>& trace);

}  // namespace carlab
