#include "carlab/strata.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace carlab {

namespace {

void check_levels(const std::vector<int>& levels) {
    if (levels.empty()) throw std::invalid_argument("FactorSpec: need at least one factor");
    for (int n : levels)
        if (n < 2) throw std::invalid_argument("FactorSpec: every factor needs >= 2 levels");
}

void check_probabilities(const std::vector<double>& p, const std::string& what) {
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0)) throw std::invalid_argument("FactorSpec: negative probability in " + what);
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("FactorSpec: " + what + " must sum to 1");
}

}  // namespace

FactorSpec FactorSpec::independent(std::vector<int> levels,
                                   std::vector<std::vector<double>> level_probs) {
    check_levels(levels);
    if (level_probs.size() != levels.size())
        throw std::invalid_argument("FactorSpec: one probability vector per factor required");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (static_cast<int>(level_probs[k].size()) != levels[k])
            throw std::invalid_argument("FactorSpec: probability vector length != level count");
        check_probabilities(level_probs[k], "factor " + std::to_string(k + 1));
    }

    FactorSpec spec;
    spec.levels_ = std::move(levels);
    spec.model_ = PrevalenceModel::independent;
    spec.level_probs_ = std::move(level_probs);
    spec.num_strata_ = 1;
    for (int n : spec.levels_) {
        if (spec.num_strata_ > (1 << 22) / n)
            throw std::invalid_argument("FactorSpec: stratum lattice too large");
        spec.num_strata_ *= n;
    }
    spec.stratum_probs_.resize(spec.num_strata_);
    for (int z = 0; z < spec.num_strata_; ++z) {
        StratumIndex s = spec.stratum(z);
        double w = 1.0;
        for (int k = 0; k < spec.num_factors(); ++k) w *= spec.level_probs_[k][s.multi[k] - 1];
        spec.stratum_probs_[z] = w;
    }
    return spec;
}

FactorSpec FactorSpec::uniform(std::vector<int> levels) {
    std::vector<std::vector<double>> probs;
    probs.reserve(levels.size());
    for (int n : levels) probs.emplace_back(n, 1.0 / n);
    return independent(std::move(levels), std::move(probs));
}

FactorSpec FactorSpec::joint(std::vector<int> levels, std::vector<double> stratum_probs) {
    check_levels(levels);
    int ms = 1;
    for (int n : levels) ms *= n;
    if (static_cast<int>(stratum_probs.size()) != ms)
        throw std::invalid_argument("FactorSpec: joint distribution length must equal M_s");
    check_probabilities(stratum_probs, "joint distribution");

    FactorSpec spec;
    spec.levels_ = std::move(levels);
    spec.model_ = PrevalenceModel::joint;
    spec.num_strata_ = ms;
    spec.stratum_probs_ = std::move(stratum_probs);
    return spec;
}

double FactorSpec::stratum_prevalence(int linear) const { return stratum_probs_.at(linear); }

double FactorSpec::level_prevalence(int factor, int level) const {
    if (factor < 1 || factor > num_factors())
        throw std::out_of_range("level_prevalence: factor out of range");
    if (level < 1 || level > levels_[factor - 1])
        throw std::out_of_range("level_prevalence: level out of range");
    if (model_ == PrevalenceModel::independent) return level_probs_[factor - 1][level - 1];
    double sum = 0.0;
    for (int z = 0; z < num_strata_; ++z)
        if (stratum(z).multi[factor - 1] == level) sum += stratum_probs_[z];
    return sum;
}

bool FactorSpec::equal_prevalence() const {
    const double target = 1.0 / num_strata_;
    for (double w : stratum_probs_)
        if (std::abs(w - target) > 1e-12) return false;
    return true;
}

int FactorSpec::linear_index(const std::vector<int>& multi) const {
    if (multi.size() != levels_.size())
        throw std::invalid_argument("linear_index: wrong number of levels");
    int code = 0;
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        if (multi[k] < 1 || multi[k] > levels_[k])
            throw std::out_of_range("linear_index: level out of range");
        code = code * levels_[k] + (multi[k] - 1);
    }
    return code;
}

StratumIndex FactorSpec::stratum(int linear) const {
    if (linear < 0 || linear >= num_strata_) throw std::out_of_range("stratum: bad linear index");
    StratumIndex s;
    s.linear = linear;
    s.multi.resize(levels_.size());
    int rest = linear;
    for (int k = num_factors() - 1; k >= 0; --k) {
        s.multi[k] = rest % levels_[k] + 1;
        rest /= levels_[k];
    }
    return s;
}

std::vector<StratumIndex> enumerate_strata(const FactorSpec& spec) {
    std::vector<StratumIndex> out;
    out.reserve(spec.num_strata());
    for (int z = 0; z < spec.num_strata(); ++z) out.push_back(spec.stratum(z));
    return out;
}

SubjectCovariates sample_covariates(const FactorSpec& spec, Rng& rng) {
    if (spec.prevalence_model() == PrevalenceModel::independent) {
        std::vector<int> multi(spec.num_factors());
        for (int k = 1; k <= spec.num_factors(); ++k) {
            const double u = rng.uniform();
            double cum = 0.0;
            int level = spec.num_levels(k);  // falls through to the last level
            for (int h = 1; h <= spec.num_levels(k); ++h) {
                cum += spec.level_prevalence(k, h);
                if (u < cum) {
                    level = h;
                    break;
                }
            }
            multi[k - 1] = level;
        }
        const int linear = spec.linear_index(multi);
        return SubjectCovariates{StratumIndex{std::move(multi), linear}};
    }
    const double u = rng.uniform();
    double cum = 0.0;
    int linear = spec.num_strata() - 1;
    for (int z = 0; z < spec.num_strata(); ++z) {
        cum += spec.stratum_prevalence(z);
        if (u < cum) {
            linear = z;
            break;
        }
    }
    return SubjectCovariates{spec.stratum(linear)};
}

std::vector<StratumIndex> marginal_members(const FactorSpec& spec, int factor, int level) {
    if (factor < 1 || factor > spec.num_factors())
        throw std::out_of_range("marginal_members: factor out of range");
    if (level < 1 || level > spec.num_levels(factor))
        throw std::out_of_range("marginal_members: level out of range");
    std::vector<StratumIndex> out;
    for (int z = 0; z < spec.num_strata(); ++z) {
        StratumIndex s = spec.stratum(z);
        if (s.multi[factor - 1] == level) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace carlab
