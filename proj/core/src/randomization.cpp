#include "carlab/randomization.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace carlab {

std::string to_string(Procedure p) {
    switch (p) {
        case Procedure::pocock_simon: return "pocock-simon";
        case Procedure::stratified_permuted_block: return "stratified-permuted-block";
        case Procedure::efron_biased_coin: return "efron-biased-coin";
        case Procedure::wei_urn: return "wei-urn";
        case Procedure::big_stick: return "big-stick";
        case Procedure::complete: return "complete";
    }
    return "?";
}

Procedure procedure_from_string(const std::string& name) {
    std::string s = name;
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "pocock-simon") return Procedure::pocock_simon;
    if (s == "stratified-permuted-block" || s == "permuted-block")
        return Procedure::stratified_permuted_block;
    if (s == "efron-biased-coin" || s == "efron") return Procedure::efron_biased_coin;
    if (s == "wei-urn" || s == "urn") return Procedure::wei_urn;
    if (s == "big-stick") return Procedure::big_stick;
    if (s == "complete") return Procedure::complete;
    throw std::invalid_argument("unknown randomization procedure: " + name);
}

void ProcedureConfig::validate() const {
    switch (kind) {
        case Procedure::pocock_simon:
        case Procedure::efron_biased_coin:
            if (!(bias_p > 0.5 && bias_p <= 1.0))
                throw std::invalid_argument("bias p must lie in (1/2, 1]");
            break;
        case Procedure::stratified_permuted_block:
            if (block_size < 2 || block_size % 2 != 0)
                throw std::invalid_argument("block size must be an even integer >= 2");
            break;
        case Procedure::big_stick:
            if (mti_bound < 1) throw std::invalid_argument("big stick bound must be >= 1");
            break;
        case Procedure::wei_urn:
            if (urn_alpha < 0 || urn_beta < 0)
                throw std::invalid_argument("urn parameters must be non-negative");
            break;
        case Procedure::complete: break;
    }
}

AllocationState::AllocationState(const FactorSpec& spec) {
    levels_ = spec.levels();
    margin_offset_.resize(levels_.size());
    int off = 0;
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        margin_offset_[k] = off;
        off += levels_[k];
    }
    margins_.assign(off, 0);
    counts_.assign(spec.num_strata(), {0, 0});
}

std::int64_t AllocationState::overall_imbalance(ImbalanceMeasure measure) const {
    std::int64_t total = 0;
    for (std::int64_t d : margins_)
        total += measure == ImbalanceMeasure::squared ? d * d : std::llabs(d);
    return total;
}

void AllocationState::apply(const StratumIndex& stratum, int arm) {
    if (arm != 0 && arm != 1) throw std::invalid_argument("arm must be 0 or 1");
    if (stratum.multi.size() != levels_.size() || stratum.linear < 0 ||
        stratum.linear >= num_strata())
        throw std::logic_error("apply: stratum does not belong to this lattice");
    counts_[stratum.linear][arm] += 1;
    const int delta = arm == 1 ? 1 : -1;
    for (std::size_t k = 0; k < levels_.size(); ++k)
        margins_[margin_offset_[k] + stratum.multi[k] - 1] += delta;
    total_ += 1;
}

void AllocationState::check_invariants(const FactorSpec& spec) const {
    int assigned = 0;
    for (const auto& c : counts_) assigned += c[0] + c[1];
    if (assigned != total_) throw std::logic_error("AllocationState: subject count mismatch");
    for (int j = 1; j <= spec.num_factors(); ++j) {
        for (int h = 1; h <= spec.num_levels(j); ++h) {
            std::int64_t sum = 0;
            for (const auto& s : marginal_members(spec, j, h)) sum += stratum_imbalance(s.linear);
            if (sum != margin_imbalance(j, h))
                throw std::logic_error("AllocationState: margin is not the sum of its strata");
        }
    }
}

namespace {

void check_subject(const AllocationState& state, const SubjectCovariates& subject) {
    if (subject.stratum.multi.size() != state.factor_levels().size() ||
        subject.stratum.linear < 0 || subject.stratum.linear >= state.num_strata())
        throw std::logic_error("allocation state does not match the subject's factor lattice");
}

// Change in the subject's touched margins if the next assignment went to
// `arm`; untouched margins cancel when the two arms are compared.
std::int64_t imbalance_delta(const AllocationState& state, const SubjectCovariates& subject,
                             ImbalanceMeasure measure, int arm) {
    const int step = arm == 1 ? 1 : -1;
    std::int64_t delta = 0;
    for (std::size_t k = 0; k < subject.stratum.multi.size(); ++k) {
        const std::int64_t d = state.margin_imbalance(static_cast<int>(k) + 1,
                                                      subject.stratum.multi[k]);
        if (measure == ImbalanceMeasure::squared)
            delta += (d + step) * (d + step) - d * d;
        else
            delta += std::llabs(d + step) - std::llabs(d);
    }
    return delta;
}

}  // namespace

double arm1_probability(const AllocationState& state, const SubjectCovariates& subject,
                        const ProcedureConfig& cfg) {
    check_subject(state, subject);
    const int z = subject.stratum.linear;
    switch (cfg.kind) {
        case Procedure::pocock_simon: {
            const std::int64_t d1 = imbalance_delta(state, subject, cfg.imbalance_measure, 1);
            const std::int64_t d0 = imbalance_delta(state, subject, cfg.imbalance_measure, 0);
            if (d1 == d0) return 0.5;
            return d1 < d0 ? cfg.bias_p : 1.0 - cfg.bias_p;
        }
        case Procedure::stratified_permuted_block: {
            // Blocks are realized by sequential draws without replacement,
            // which yields the same law as shuffling each block up front.
            const int b = cfg.block_size;
            const int size = state.stratum_size(z);
            const int pos = size % b;
            const int ones_used = state.stratum_count(z, 1) - (size / b) * (b / 2);
            return static_cast<double>(b / 2 - ones_used) / (b - pos);
        }
        case Procedure::efron_biased_coin: {
            const std::int64_t d = state.stratum_imbalance(z);
            if (d == 0) return 0.5;
            return d < 0 ? cfg.bias_p : 1.0 - cfg.bias_p;
        }
        case Procedure::wei_urn: {
            const double balls1 = cfg.urn_alpha + double(cfg.urn_beta) * state.stratum_count(z, 0);
            const double balls0 = cfg.urn_alpha + double(cfg.urn_beta) * state.stratum_count(z, 1);
            const double total = balls1 + balls0;
            return total > 0.0 ? balls1 / total : 0.5;
        }
        case Procedure::big_stick: {
            const std::int64_t d = state.stratum_imbalance(z);
            if (d >= cfg.mti_bound) return 0.0;
            if (d <= -cfg.mti_bound) return 1.0;
            return 0.5;
        }
        case Procedure::complete: return 0.5;
    }
    throw std::logic_error("unreachable procedure kind");
}

namespace {

int assign_impl(AllocationState& state, const SubjectCovariates& subject,
                const ProcedureConfig& cfg, Rng& rng) {
    const double q = arm1_probability(state, subject, cfg);
    const int arm = rng.uniform() < q ? 1 : 0;
    state.apply(subject.stratum, arm);
    return arm;
}

}  // namespace

int pocock_simon_assign(AllocationState& state, const SubjectCovariates& subject,
                        const ProcedureConfig& cfg, Rng& rng) {
    if (cfg.kind != Procedure::pocock_simon)
        throw std::invalid_argument("pocock_simon_assign: wrong procedure kind");
    cfg.validate();
    return assign_impl(state, subject, cfg, rng);
}

int reference_assign(AllocationState& state, const SubjectCovariates& subject,
                     const ProcedureConfig& cfg, Rng& rng) {
    if (cfg.kind == Procedure::pocock_simon)
        throw std::invalid_argument("reference_assign: wrong procedure kind");
    cfg.validate();
    return assign_impl(state, subject, cfg, rng);
}

int assign(AllocationState& state, const SubjectCovariates& subject, const ProcedureConfig& cfg,
           Rng& rng) {
    cfg.validate();
    return assign_impl(state, subject, cfg, rng);
}

namespace {

AllocationRun run_allocation_impl(const FactorSpec& spec, const ProcedureConfig& cfg,
                                  int num_subjects, Rng& rng,
                                  std::vector<AllocationTraceRow>* trace) {
    if (num_subjects < 1) throw std::invalid_argument("run_allocation: need at least 1 subject");
    cfg.validate();
    AllocationRun run{{}, {}, AllocationState(spec)};
    run.assignments.reserve(num_subjects);
    run.covariates.reserve(num_subjects);
    for (int i = 0; i < num_subjects; ++i) {
        SubjectCovariates subject = sample_covariates(spec, rng);
        const int arm = assign_impl(run.final_state, subject, cfg, rng);
        run.assignments.push_back(arm);
        if (trace)
            trace->push_back({i, subject.stratum.linear, arm,
                              run.final_state.overall_imbalance(cfg.imbalance_measure)});
        run.covariates.push_back(std::move(subject));
    }
    return run;
}

}  // namespace

AllocationRun run_allocation(const FactorSpec& spec, const ProcedureConfig& cfg, int num_subjects,
                             Rng& rng) {
    return run_allocation_impl(spec, cfg, num_subjects, rng, nullptr);
}

AllocationRun run_allocation_traced(const FactorSpec& spec, const ProcedureConfig& cfg,
                                    int num_subjects, Rng& rng,
                                    std::vector<AllocationTraceRow>& trace) {
    return run_allocation_impl(spec, cfg, num_subjects, rng, &trace);
}

}  // namespace carlab
