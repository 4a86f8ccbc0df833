#include "carlab/survival_sim.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace carlab {

double HazardModel::log_hazard(const StratumIndex& stratum, int arm) const {
    if (covariate_log_hr.size() != stratum.multi.size())
        throw std::invalid_argument("HazardModel: one log hazard ratio per factor required");
    double lp = log_baseline + theta * arm;
    for (std::size_t k = 0; k < covariate_log_hr.size(); ++k) {
        const int high = k < high_level.size() ? high_level[k] : 2;
        if (stratum.multi[k] == high) lp += covariate_log_hr[k];
    }
    if (!std::isfinite(lp)) throw std::invalid_argument("HazardModel: non-finite linear predictor");
    return lp;
}

double HazardModel::hazard(const StratumIndex& stratum, int arm) const {
    return std::exp(log_hazard(stratum, arm));
}

void TrialDesign::validate() const {
    if (num_subjects < 2) throw std::invalid_argument("TrialDesign: need at least 2 subjects");
    if (enrollment_months < 0.0 || followup_months < enrollment_months)
        throw std::invalid_argument("TrialDesign: follow-up must cover the enrollment window");
    if (censor_hazard < 0.0) throw std::invalid_argument("TrialDesign: negative censor hazard");
}

TrialDataset simulate_trial(const FactorSpec& spec, const ProcedureConfig& cfg,
                            const HazardModel& model, const TrialDesign& design, Rng& rng) {
    design.validate();
    cfg.validate();
    TrialDataset data;
    data.num_strata = spec.num_strata();
    const int n = design.num_subjects;
    data.stratum.reserve(n);
    data.arm.reserve(n);
    data.time.reserve(n);
    data.event.reserve(n);

    AllocationState state(spec);
    for (int i = 0; i < n; ++i) {
        SubjectCovariates subject = sample_covariates(spec, rng);
        const double q = arm1_probability(state, subject, cfg);
        const int arm = rng.uniform() < q ? 1 : 0;
        state.apply(subject.stratum, arm);

        const double entry = design.enrollment_months > 0.0
                                 ? rng.uniform(0.0, design.enrollment_months)
                                 : 0.0;
        const double survival = rng.exponential(model.hazard(subject.stratum, arm));
        const double admin = design.followup_months - entry;
        double observed = std::min(survival, admin);
        if (design.censor_hazard > 0.0)
            observed = std::min(observed, rng.exponential(design.censor_hazard));

        data.stratum.push_back(subject.stratum.linear);
        data.arm.push_back(arm);
        data.time.push_back(observed);
        data.event.push_back(survival <= observed ? 1 : 0);
    }
    return data;
}

HazardModel case1_hazard(double theta) {
    HazardModel m;
    m.log_baseline = std::log(0.0625);
    m.covariate_log_hr = {0.0, 0.0};
    m.high_level = {2, 2};
    m.theta = theta;
    return m;
}

HazardModel case2_hazard(double theta) {
    HazardModel m;
    m.log_baseline = std::log(0.0625);
    m.covariate_log_hr = {std::log(10.0), std::log(5.0)};
    m.high_level = {2, 2};
    m.theta = theta;
    return m;
}

TrialDesign first_study_design(int num_subjects) {
    return TrialDesign{num_subjects, 29.0, 36.0, 0.01};
}

HazardModel four_factor_hazard(double theta) {
    HazardModel m;
    m.log_baseline = std::log(0.015);
    m.covariate_log_hr = {std::log(3.0), std::log(2.0), std::log(2.0), std::log(2.0)};
    m.high_level = {2, 2, 2, 2};
    m.theta = theta;
    return m;
}

TrialDesign second_study_design(int num_subjects) {
    return TrialDesign{num_subjects, 30.0, 50.0, 0.0};
}

void write_dataset_csv(std::ostream& out, const TrialDataset& data) {
    out << "subject,stratum,arm,time,event\n";
    char buffer[64];
    for (std::size_t i = 0; i < data.size(); ++i) {
        std::snprintf(buffer, sizeof buffer, "%.17g", data.time[i]);
        out << i << ',' << data.stratum[i] << ',' << data.arm[i] << ',' << buffer << ','
            << int(data.event[i]) << '\n';
    }
}

TrialDataset read_dataset_csv(std::istream& in, int num_strata) {
    TrialDataset data;
    data.num_strata = num_strata;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("dataset CSV: missing header");
    if (line != "subject,stratum,arm,time,event")
        throw std::runtime_error("dataset CSV: unexpected header: " + line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        long subject;
        int stratum, arm, event;
        double time;
        char comma;
        if (!(row >> subject >> comma >> stratum >> comma >> arm >> comma >> time >> comma >>
              event))
            throw std::runtime_error("dataset CSV: malformed row: " + line);
        if (stratum < 0 || stratum >= num_strata)
            throw std::runtime_error("dataset CSV: stratum out of range");
        if ((arm != 0 && arm != 1) || (event != 0 && event != 1) || !(time > 0.0))
            throw std::runtime_error("dataset CSV: invalid field values");
        data.stratum.push_back(stratum);
        data.arm.push_back(arm);
        data.time.push_back(time);
        data.event.push_back(static_cast<std::uint8_t>(event));
    }
    return data;
}

}  // namespace carlab
