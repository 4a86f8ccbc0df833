#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace carlab::oracle {

namespace {

std::vector<double> weights_naive(const TrialDataset& data, const FactorSpec& spec,
                                  const WorkingModel& model, const std::vector<double>& beta) {
    std::vector<double> w(data.size(), 1.0);
    if (model.empty()) return w;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::vector<double> row = design_row(spec, model, data.stratum[i]);
        double lp = 0.0;
        for (std::size_t c = 0; c < row.size(); ++c) lp += beta[c] * row[c];
        w[i] = std::exp(lp);
    }
    return w;
}

}  // namespace

LogrankParts logrank_brute_force(const TrialDataset& data) {
    std::set<double> event_times;
    for (std::size_t i = 0; i < data.size(); ++i)
        if (data.event[i]) event_times.insert(data.time[i]);

    LogrankParts parts;
    for (double t : event_times) {
        double at_risk = 0, at_risk1 = 0, deaths = 0, deaths1 = 0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (data.time[i] >= t) {
                at_risk += 1;
                at_risk1 += data.arm[i];
            }
            if (data.event[i] && data.time[i] == t) {
                deaths += 1;
                deaths1 += data.arm[i];
            }
        }
        parts.numerator += deaths1 - deaths * at_risk1 / at_risk;
        parts.variance_sum += deaths * (at_risk1 / at_risk) * (1.0 - at_risk1 / at_risk);
    }
    return parts;
}

double log_partial_likelihood_naive(const TrialDataset& data, const FactorSpec& spec,
                                    const WorkingModel& model, const std::vector<double>& beta,
                                    double theta) {
    const std::vector<double> w = weights_naive(data, spec, model, beta);
    double value = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!data.event[i]) continue;
        double denom = 0.0;
        for (std::size_t k = 0; k < data.size(); ++k)
            if (data.time[k] >= data.time[i]) denom += w[k] * std::exp(theta * data.arm[k]);
        value += std::log(w[i]) + theta * data.arm[i] - std::log(denom);
    }
    return value;
}

std::vector<double> residuals_direct(const TrialDataset& data, const FactorSpec& spec,
                                     const WorkingModel& model, const std::vector<double>& beta) {
    const std::vector<double> w = weights_naive(data, spec, model, beta);
    const double n = static_cast<double>(data.size());

    const auto s0 = [&](double t) {
        double sum = 0.0;
        for (std::size_t k = 0; k < data.size(); ++k)
            if (data.time[k] >= t) sum += w[k];
        return sum / n;
    };
    const auto s1 = [&](double t) {
        double sum = 0.0;
        for (std::size_t k = 0; k < data.size(); ++k)
            if (data.time[k] >= t && data.arm[k] == 1) sum += w[k];
        return sum / n;
    };

    std::vector<double> residuals(data.size(), 0.0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        double value = 0.0;
        if (data.event[i]) value += data.arm[i] - s1(data.time[i]) / s0(data.time[i]);
        for (std::size_t j = 0; j < data.size(); ++j) {
            if (!data.event[j]) continue;
            if (data.time[i] < data.time[j]) continue;  // Y_i(X_j) = 0
            value -= w[i] / (n * s0(data.time[j])) *
                     (data.arm[i] - s1(data.time[j]) / s0(data.time[j]));
        }
        residuals[i] = value;
    }
    return residuals;
}

double robust_variance_direct(const TrialDataset& data, const FactorSpec& spec,
                              const WorkingModel& model, const std::vector<double>& beta) {
    const std::vector<double> residuals = residuals_direct(data, spec, model, beta);
    double sum = 0.0;
    for (double r : residuals) sum += r * r;
    return sum / static_cast<double>(data.size());
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] <= b[ib])
            ++ia;
        else
            ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / a.size() -
                                 static_cast<double>(ib) / b.size()));
    }
    return d;
}

TrialDataset random_small_dataset(Rng& rng, const FactorSpec& spec, int max_subjects,
                                  bool with_ties) {
    TrialDataset data;
    data.num_strata = spec.num_strata();
    const int n = 2 + static_cast<int>(rng.below(max_subjects - 1));
    for (int i = 0; i < n; ++i) {
        data.stratum.push_back(static_cast<int>(rng.below(spec.num_strata())));
        data.arm.push_back(rng.bernoulli(0.5) ? 1 : 0);
        double t = rng.exponential(0.2);
        if (with_ties && rng.bernoulli(0.4)) t = 1.0 + rng.below(3);  // forced tied times
        data.time.push_back(t);
        data.event.push_back(rng.bernoulli(0.7) ? 1 : 0);
    }
    // Ensure at least one event so variance terms exist.
    data.event[0] = 1;
    return data;
}

}  // namespace carlab::oracle
