#include "carlab/imbalance_mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "carlab/correlation.hpp"
#include "carlab/parallel.hpp"

namespace carlab {

std::vector<ImbalanceSample> collect_imbalances(const FactorSpec& spec, const ProcedureConfig& cfg,
                                                int num_subjects, int replications,
                                                std::uint64_t master_seed, int threads) {
    if (replications < 2) throw std::invalid_argument("collect_imbalances: need >= 2 replications");
    cfg.validate();
    std::vector<ImbalanceSample> samples(replications);
    parallel_for_index(replications, threads, [&](int rep) {
        Rng rng = Rng::stream(master_seed, static_cast<std::uint64_t>(rep));
        const AllocationRun run = run_allocation(spec, cfg, num_subjects, rng);
        ImbalanceSample sample;
        sample.replication = rep;
        const int ms = spec.num_strata();
        sample.d.assign(ms, 0.0);
        sample.stratum_sizes.assign(ms, 0);
        sample.occupied.assign(ms, 0);
        for (int z = 0; z < ms; ++z) {
            const int nz = run.final_state.stratum_size(z);
            sample.stratum_sizes[z] = nz;
            if (nz > 0) {
                sample.occupied[z] = 1;
                sample.d[z] = static_cast<double>(run.final_state.stratum_imbalance(z)) /
                              std::sqrt(static_cast<double>(nz));
            }
        }
        samples[rep] = std::move(sample);
    });
    return samples;
}

CovEstimate estimate_cov(const FactorSpec& spec, std::vector<ImbalanceSample> samples) {
    if (samples.size() < 2) throw std::invalid_argument("estimate_cov: need >= 2 samples");
    const int ms = spec.num_strata();
    std::sort(samples.begin(), samples.end(),
              [](const ImbalanceSample& a, const ImbalanceSample& b) {
                  return a.replication < b.replication;
              });
    for (const auto& s : samples)
        if (static_cast<int>(s.d.size()) != ms)
            throw std::invalid_argument("estimate_cov: sample dimension mismatch");

    CovEstimate est;
    est.empty_stratum_events = 0;
    for (const auto& s : samples)
        for (int z = 0; z < ms; ++z)
            if (!s.occupied[z]) ++est.empty_stratum_events;

    // Pairwise-available two-pass moments: strata empty in a replication
    // drop out of every entry they touch.
    std::vector<double> mean(ms, 0.0);
    std::vector<long> count(ms, 0);
    for (const auto& s : samples)
        for (int z = 0; z < ms; ++z)
            if (s.occupied[z]) {
                mean[z] += s.d[z];
                ++count[z];
            }
    for (int z = 0; z < ms; ++z) {
        if (count[z] < 2) throw std::runtime_error("estimate_cov: stratum observed fewer than twice");
        mean[z] /= static_cast<double>(count[z]);
    }

    est.cov_hat.assign(ms, std::vector<double>(ms, 0.0));
    std::vector<std::vector<long>> pair_count(ms, std::vector<long>(ms, 0));
    for (const auto& s : samples)
        for (int a = 0; a < ms; ++a) {
            if (!s.occupied[a]) continue;
            const double da = s.d[a] - mean[a];
            for (int b = a; b < ms; ++b) {
                if (!s.occupied[b]) continue;
                est.cov_hat[a][b] += da * (s.d[b] - mean[b]);
                ++pair_count[a][b];
            }
        }
    for (int a = 0; a < ms; ++a)
        for (int b = a; b < ms; ++b) {
            if (pair_count[a][b] < 2)
                throw std::runtime_error("estimate_cov: covariance entry with < 2 joint samples");
            est.cov_hat[a][b] /= static_cast<double>(pair_count[a][b] - 1);
            est.cov_hat[b][a] = est.cov_hat[a][b];
        }

    double sigma2 = 0.0;
    for (int z = 0; z < ms; ++z) sigma2 += est.cov_hat[z][z];
    est.sigma2_hat = sigma2 / ms;

    const auto strata = enumerate_strata(spec);
    std::map<std::uint32_t, double> corr_sum;
    for (int a = 0; a < ms; ++a)
        for (int b = a + 1; b < ms; ++b) {
            const std::uint32_t mask = agreement_mask(strata[a], strata[b]);
            const double denom = std::sqrt(est.cov_hat[a][a] * est.cov_hat[b][b]);
            if (denom <= 0.0) continue;
            corr_sum[mask] += est.cov_hat[a][b] / denom;
            est.class_pair_counts[mask] += 1;
        }
    for (const auto& [mask, sum] : corr_sum)
        est.class_correlations[mask] = sum / static_cast<double>(est.class_pair_counts[mask]);

    est.mev_hat = max_eigenvalue(est.cov_hat);
    return est;
}

double mev_product(const FactorSpec& spec, double sigma2_hat) {
    if (!spec.equal_prevalence())
        throw std::invalid_argument("mev_product: closed-form lambda_max needs equal prevalence");
    const SpectrumReport report = spectrum(build_cor_matrix(spec));
    return sigma2_hat * report.lambda_max.to_double();
}

}  // namespace carlab
