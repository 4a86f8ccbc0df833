#include "carlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "carlab/correlation.hpp"
#include "carlab/parallel.hpp"

namespace carlab {

namespace {

constexpr std::uint64_t kCovSeedSalt = 0x517cc1b727220a95ULL;

bool wants(const std::vector<std::string>& tests, const std::string& name) {
    return std::find(tests.begin(), tests.end(), name) != tests.end();
}

Matrix cor_as_doubles(const FactorSpec& spec) {
    const CorrelationSpec cor = build_cor_matrix(spec);
    Matrix m(cor.matrix.size(), std::vector<double>(cor.matrix.size()));
    for (std::size_t a = 0; a < cor.matrix.size(); ++a)
        for (std::size_t b = 0; b < cor.matrix.size(); ++b)
            m[a][b] = cor.matrix[a][b].to_double();
    return m;
}

double monte_carlo_sigma2(const ExperimentConfig& cfg, const FactorSpec& spec) {
    const int n = cfg.mc_subjects > 0 ? cfg.mc_subjects : 500 * spec.num_strata();
    const auto samples = collect_imbalances(spec, cfg.procedure, n, cfg.mc_replications,
                                            cfg.master_seed ^ kCovSeedSalt, cfg.threads);
    return estimate_cov(spec, samples).sigma2_hat;
}

}  // namespace

Quantiles quantiles(std::vector<double> values) {
    Quantiles q;
    if (values.empty()) return q;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    q.lo = values.front();
    q.hi = values.back();
    q.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    return q;
}

Matrix resolve_cov(const ExperimentConfig& cfg, double& sigma2_used) {
    const FactorSpec spec = cfg.factor_spec();
    sigma2_used = -1.0;
    switch (cfg.cov_source) {
        case CovSource::analytic: {
            sigma2_used = cfg.sigma2 >= 0.0 ? cfg.sigma2 : monte_carlo_sigma2(cfg, spec);
            Matrix m = cor_as_doubles(spec);
            for (auto& row : m)
                for (double& v : row) v *= sigma2_used;
            return m;
        }
        case CovSource::monte_carlo: {
            const int n = cfg.mc_subjects > 0 ? cfg.mc_subjects : 500 * spec.num_strata();
            const auto samples = collect_imbalances(spec, cfg.procedure, n, cfg.mc_replications,
                                                    cfg.master_seed ^ kCovSeedSalt, cfg.threads);
            const CovEstimate est = estimate_cov(spec, samples);
            if (spec.equal_prevalence()) {
                sigma2_used = est.sigma2_hat;
                Matrix m = cor_as_doubles(spec);
                for (auto& row : m)
                    for (double& v : row) v *= sigma2_used;
                return m;
            }
            return est.cov_hat;
        }
        case CovSource::file: {
            std::ifstream in(cfg.cov_file);
            if (!in) throw std::invalid_argument("cannot open cov-file: " + cfg.cov_file);
            Matrix m = load_cov_csv(in);
            if (static_cast<int>(m.size()) != spec.num_strata())
                throw std::invalid_argument("cov-file dimension does not match M_s");
            return m;
        }
    }
    throw std::logic_error("unreachable cov source");
}

SimulationOutcome run_test_simulation(const ExperimentConfig& cfg) {
    const FactorSpec spec = cfg.factor_spec();
    const HazardModel model = cfg.hazard_model();
    const TrialDesign design = cfg.trial_design();
    const WorkingModel working = cfg.working_model();
    const std::vector<int> partition = cfg.analysis_partition();
    const std::vector<int> identity = identity_partition(spec.num_strata());

    SimulationOutcome outcome;
    outcome.tests = cfg.tests;
    outcome.subjects = cfg.subjects;
    const bool needs_cov = wants(cfg.tests, "TRL") || wants(cfg.tests, "TRS") ||
                           wants(cfg.tests, "TRPL");
    if (needs_cov) outcome.cov_used = resolve_cov(cfg, outcome.sigma2_used);
    const Matrix& cov = outcome.cov_used;

    const int r = cfg.replications;
    outcome.records.assign(cfg.tests.size(), std::vector<TestRecord>(r));

    parallel_for_index(r, cfg.threads, [&](int rep) {
        Rng rng = Rng::stream(cfg.master_seed, static_cast<std::uint64_t>(rep));
        const TrialDataset data = simulate_trial(spec, cfg.procedure, model, design, rng);
        for (std::size_t t = 0; t < cfg.tests.size(); ++t) {
            const std::string& name = cfg.tests[t];
            TestReport report;
            if (name == "TL")
                report = logrank_test(data);
            else if (name == "TSL")
                report = stratified_logrank_test(data, identity);
            else if (name == "TPL")
                report = stratified_logrank_test(data, partition);
            else if (name == "TS")
                report = score_test(data, spec, working);
            else if (name == "TRL")
                report = robust_logrank_test(data, cov);
            else if (name == "TRS")
                report = robust_score_test(data, spec, working, cov);
            else if (name == "TRPL")
                report = robust_partial_logrank_test(data, partition, cov);
            else
                throw std::invalid_argument("unknown test: " + name);
            outcome.records[t][rep] = TestRecord{report.statistic,  report.numerator,
                                                 report.variance_used, report.psi_term,
                                                 report.gtg,        report.gt_cov_g,
                                                 report.rejected_onesided_0p025};
        }
    });

    // Ordered aggregation, bit-stable regardless of thread count.
    for (std::size_t t = 0; t < cfg.tests.size(); ++t) {
        TestSummary s;
        s.test = cfg.tests[t];
        s.replications = r;
        std::vector<double> gamma, ratio, n_psi, n_var;
        long rejected = 0;
        for (const TestRecord& rec : outcome.records[t]) {
            if (rec.reject) ++rejected;
            n_var.push_back(rec.variance * cfg.subjects);
            if (rec.psi_term > 0.0) {
                n_psi.push_back(rec.psi_term * cfg.subjects);
                ratio.push_back(rec.gtg / rec.psi_term);
                if (rec.gtg > 0.0)
                    gamma.push_back(rec.gt_cov_g / rec.gtg);
                else
                    ++s.gamma_undefined;
            }
        }
        s.rejection_rate = static_cast<double>(rejected) / r;
        s.gamma = quantiles(std::move(gamma));
        s.gtg_over_psi = quantiles(std::move(ratio));
        s.n_psi = quantiles(std::move(n_psi));
        s.n_variance = quantiles(std::move(n_var));
        outcome.summaries.push_back(std::move(s));
    }
    return outcome;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

void write_replication_csv(std::ostream& out, const SimulationOutcome& outcome) {
    out << "replication,test,statistic,numerator,variance,psi_term,gtg,gtcovg,reject\n";
    for (std::size_t t = 0; t < outcome.tests.size(); ++t)
        for (std::size_t rep = 0; rep < outcome.records[t].size(); ++rep) {
            const TestRecord& rec = outcome.records[t][rep];
            out << rep << ',' << outcome.tests[t] << ',' << fmt(rec.statistic) << ','
                << fmt(rec.numerator) << ',' << fmt(rec.variance) << ',' << fmt(rec.psi_term)
                << ',' << fmt(rec.gtg) << ',' << fmt(rec.gt_cov_g) << ',' << (rec.reject ? 1 : 0)
                << '\n';
        }
}

void write_summary_csv(std::ostream& out, const SimulationOutcome& outcome) {
    out << "test,replications,rejection_rate,"
           "gamma_median,gamma_lo,gamma_hi,gamma_undefined,"
           "gtg_over_psi_median,gtg_over_psi_lo,gtg_over_psi_hi,"
           "n_psi_median,n_psi_lo,n_psi_hi,"
           "n_variance_median,n_variance_lo,n_variance_hi\n";
    for (const TestSummary& s : outcome.summaries) {
        out << s.test << ',' << s.replications << ',' << fmt(s.rejection_rate) << ','
            << fmt(s.gamma.median) << ',' << fmt(s.gamma.lo) << ',' << fmt(s.gamma.hi) << ','
            << s.gamma_undefined << ',' << fmt(s.gtg_over_psi.median) << ','
            << fmt(s.gtg_over_psi.lo) << ',' << fmt(s.gtg_over_psi.hi) << ','
            << fmt(s.n_psi.median) << ',' << fmt(s.n_psi.lo) << ',' << fmt(s.n_psi.hi) << ','
            << fmt(s.n_variance.median) << ',' << fmt(s.n_variance.lo) << ','
            << fmt(s.n_variance.hi) << '\n';
    }
}

Matrix load_cov_csv(std::istream& in) {
    Matrix m;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) row.push_back(std::stod(field));
        m.push_back(std::move(row));
    }
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("covariance CSV must be a square numeric matrix");
    return m;
}

void write_cov_csv(std::ostream& out, const Matrix& m) {
    for (const auto& row : m) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << fmt(row[c]);
        out << '\n';
    }
}

}  // namespace carlab
