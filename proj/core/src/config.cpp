#include "carlab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace carlab {

namespace {

struct Line {
    int number;
    std::string key;
    std::string value;
};

[[noreturn]] void fail(const std::string& source, const Line& line, const std::string& what) {
    throw std::invalid_argument(source + ":" + std::to_string(line.number) + ": key '" +
                                line.key + "': " + what);
}

std::string trim(const std::string& s) {
    const auto from = s.find_first_not_of(" \t\r");
    if (from == std::string::npos) return "";
    const auto to = s.find_last_not_of(" \t\r");
    return s.substr(from, to - from + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

long parse_long(const std::string& source, const Line& line) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(line.value, &pos);
        if (pos != line.value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail(source, line, "expected an integer, got '" + line.value + "'");
    }
}

double parse_double(const std::string& source, const Line& line, const std::string& field) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail(source, line, "expected a number, got '" + field + "'");
    }
}

std::vector<double> parse_doubles(const std::string& source, const Line& line) {
    std::vector<double> out;
    for (const auto& f : split(line.value, ',')) out.push_back(parse_double(source, line, f));
    return out;
}

std::vector<int> parse_ints(const std::string& source, const Line& line) {
    std::vector<int> out;
    for (const auto& f : split(line.value, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(f, &pos);
            if (pos != f.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (...) {
            fail(source, line, "expected an integer list, got '" + line.value + "'");
        }
    }
    return out;
}

const std::set<std::string> kTestNames{"TL", "TRL", "TSL", "TS", "TRS", "TPL", "TRPL"};

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
    ExperimentConfig cfg;
    std::string raw;
    int number = 0;
    bool saw_levels = false;
    std::map<int, std::vector<double>> per_factor_probs;

    while (std::getline(in, raw)) {
        ++number;
        std::string text = raw;
        if (const auto hash = text.find('#'); hash != std::string::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(source + ":" + std::to_string(number) +
                                        ": expected 'key = value', got '" + text + "'");
        Line line{number, trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
        const std::string& key = line.key;

        if (key == "levels") {
            cfg.levels = parse_ints(source, line);
            saw_levels = true;
        } else if (key.rfind("prevalence.", 0) == 0) {
            const std::string sub = key.substr(11);
            if (sub == "joint") {
                cfg.joint_probs = parse_doubles(source, line);
            } else {
                try {
                    per_factor_probs[std::stoi(sub)] = parse_doubles(source, line);
                } catch (const std::invalid_argument&) {
                    fail(source, line, "expected prevalence.<factor> or prevalence.joint");
                }
            }
        } else if (key == "procedure") {
            try {
                cfg.procedure.kind = procedure_from_string(line.value);
            } catch (const std::exception& e) {
                fail(source, line, e.what());
            }
        } else if (key == "bias") {
            cfg.procedure.bias_p = parse_double(source, line, line.value);
        } else if (key == "imbalance") {
            if (line.value == "squared")
                cfg.procedure.imbalance_measure = ImbalanceMeasure::squared;
            else if (line.value == "absolute")
                cfg.procedure.imbalance_measure = ImbalanceMeasure::absolute;
            else
                fail(source, line, "expected 'squared' or 'absolute'");
        } else if (key == "block-size") {
            cfg.procedure.block_size = static_cast<int>(parse_long(source, line));
        } else if (key == "mti-bound") {
            cfg.procedure.mti_bound = static_cast<int>(parse_long(source, line));
        } else if (key == "urn-alpha") {
            cfg.procedure.urn_alpha = static_cast<int>(parse_long(source, line));
        } else if (key == "urn-beta") {
            cfg.procedure.urn_beta = static_cast<int>(parse_long(source, line));
        } else if (key == "subjects") {
            cfg.subjects = static_cast<int>(parse_long(source, line));
        } else if (key == "baseline-hazard") {
            cfg.baseline_hazard = parse_double(source, line, line.value);
        } else if (key == "factor-hr") {
            cfg.factor_hr = parse_doubles(source, line);
        } else if (key == "treatment-hr") {
            cfg.treatment_hr = parse_double(source, line, line.value);
        } else if (key == "enrollment-months") {
            cfg.enrollment_months = parse_double(source, line, line.value);
        } else if (key == "followup-months") {
            cfg.followup_months = parse_double(source, line, line.value);
        } else if (key == "censor-hazard") {
            cfg.censor_hazard = parse_double(source, line, line.value);
        } else if (key == "tests") {
            cfg.tests.clear();
            for (auto& name : split(line.value, ',')) {
                std::transform(name.begin(), name.end(), name.begin(), ::toupper);
                if (!kTestNames.count(name)) fail(source, line, "unknown test '" + name + "'");
                cfg.tests.push_back(name);
            }
        } else if (key == "score-factors") {
            cfg.score_factors = line.value.empty() ? std::vector<int>{} : parse_ints(source, line);
        } else if (key == "analysis-factors") {
            cfg.analysis_factors =
                line.value.empty() ? std::vector<int>{} : parse_ints(source, line);
        } else if (key == "cov-source") {
            if (line.value == "analytic")
                cfg.cov_source = CovSource::analytic;
            else if (line.value == "monte-carlo")
                cfg.cov_source = CovSource::monte_carlo;
            else if (line.value == "file")
                cfg.cov_source = CovSource::file;
            else
                fail(source, line, "expected analytic, monte-carlo or file");
        } else if (key == "sigma2") {
            cfg.sigma2 = parse_double(source, line, line.value);
        } else if (key == "cov-file") {
            cfg.cov_file = line.value;
        } else if (key == "mc-subjects") {
            cfg.mc_subjects = static_cast<int>(parse_long(source, line));
        } else if (key == "mc-replications") {
            cfg.mc_replications = static_cast<int>(parse_long(source, line));
        } else if (key == "replications") {
            cfg.replications = static_cast<int>(parse_long(source, line));
        } else if (key == "seed") {
            cfg.master_seed = static_cast<std::uint64_t>(parse_long(source, line));
        } else if (key == "threads") {
            cfg.threads = static_cast<int>(parse_long(source, line));
        } else if (key == "output-dir") {
            cfg.output_dir = line.value;
        } else {
            fail(source, line, "unknown key");
        }
    }

    if (!saw_levels)
        throw std::invalid_argument(source + ": missing required key 'levels'");
    if (cfg.replications < 1)
        throw std::invalid_argument(source + ": replications must be >= 1");
    if (!per_factor_probs.empty()) {
        cfg.level_probs.assign(cfg.levels.size(), {});
        for (const auto& [factor, probs] : per_factor_probs) {
            if (factor < 1 || factor > static_cast<int>(cfg.levels.size()))
                throw std::invalid_argument(source + ": prevalence." + std::to_string(factor) +
                                            " is out of range");
            cfg.level_probs[factor - 1] = probs;
        }
        for (std::size_t k = 0; k < cfg.levels.size(); ++k)
            if (cfg.level_probs[k].empty())
                cfg.level_probs[k].assign(cfg.levels[k], 1.0 / cfg.levels[k]);
    }
    if (cfg.cov_source == CovSource::file) {
        if (cfg.cov_file.empty())
            throw std::invalid_argument(source + ": cov-source = file requires cov-file");
        if (!std::ifstream(cfg.cov_file).good())
            throw std::invalid_argument(source + ": cov-file does not exist: " + cfg.cov_file);
    }
    cfg.factor_spec();  // validates levels and prevalences eagerly
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return parse_config(in, path);
}

FactorSpec ExperimentConfig::factor_spec() const {
    if (!joint_probs.empty()) return FactorSpec::joint(levels, joint_probs);
    if (!level_probs.empty()) return FactorSpec::independent(levels, level_probs);
    return FactorSpec::uniform(levels);
}

HazardModel ExperimentConfig::hazard_model() const {
    HazardModel m;
    m.log_baseline = std::log(baseline_hazard);
    m.theta = std::log(treatment_hr);
    m.high_level.assign(levels.size(), 2);
    if (factor_hr.empty()) {
        m.covariate_log_hr.assign(levels.size(), 0.0);
    } else {
        if (factor_hr.size() != levels.size())
            throw std::invalid_argument("factor-hr needs one hazard ratio per factor");
        for (double hr : factor_hr) m.covariate_log_hr.push_back(std::log(hr));
    }
    return m;
}

TrialDesign ExperimentConfig::trial_design() const {
    return TrialDesign{subjects, enrollment_months, followup_months, censor_hazard};
}

WorkingModel ExperimentConfig::working_model() const {
    return WorkingModel::factors_at_level2(score_factors);
}

std::vector<int> ExperimentConfig::analysis_partition() const {
    const FactorSpec spec = factor_spec();
    if (analysis_factors.empty()) return identity_partition(spec.num_strata());
    return partition_by_factors(spec, analysis_factors);
}

}  // namespace carlab
