#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "carlab/config.hpp"
#include "carlab/correlation.hpp"
#include "carlab/experiment.hpp"
#include "carlab/imbalance_mc.hpp"
#include "carlab/reproduce.hpp"

namespace carlab {

namespace {

std::vector<int> parse_levels(const std::string& text) {
    std::vector<int> levels;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            std::size_t pos = 0;
            levels.push_back(std::stoi(field, &pos));
            if (pos != field.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("--levels expects a comma list of integers, got '" +
                                        text + "'");
        }
    }
    return levels;
}

// "factor:p1,p2,..." repeatable; unlisted factors stay uniform.
FactorSpec spec_from_options(const std::vector<int>& levels,
                             const std::vector<std::string>& prevalence) {
    if (prevalence.empty()) return FactorSpec::uniform(levels);
    std::vector<std::vector<double>> probs;
    for (int n : levels) probs.emplace_back(n, 1.0 / n);
    for (const auto& entry : prevalence) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--prevalence", "expected factor:p1,p2,...");
        const int factor = std::stoi(entry.substr(0, colon));
        if (factor < 1 || factor > static_cast<int>(levels.size()))
            throw CLI::ValidationError("--prevalence", "factor out of range");
        std::vector<double> p;
        std::stringstream ss(entry.substr(colon + 1));
        std::string field;
        while (std::getline(ss, field, ',')) p.push_back(std::stod(field));
        probs[factor - 1] = std::move(p);
    }
    return FactorSpec::independent(levels, probs);
}

std::string subset_names(std::uint32_t mask, int m) {
    std::string out;
    for (int k = 0; k < m; ++k)
        if (mask & (1U << k)) {
            if (!out.empty()) out += ';';
            out += std::to_string(k + 1);
        }
    return out;
}

std::ofstream must_open(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

void emit_cor_matrix(std::ostream& out, const CorrelationSpec& cor, bool exact) {
    for (const auto& row : cor.matrix) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            if (exact)
                out << row[c].to_string();
            else
                out << row[c].to_double();
        }
        out << '\n';
    }
}

void emit_spectrum(std::ostream& out, const CorrelationSpec& cor) {
    const SpectrumReport report = spectrum(cor);
    out << "subset,lambda_exact,lambda,multiplicity\n";
    for (const auto& [mask, lambda] : report.eigenvalues)
        out << '"' << subset_names(mask, cor.spec.num_factors()) << "\","
            << lambda.to_string() << ',' << lambda.to_double() << ','
            << report.multiplicities.at(mask) << '\n';
    out << "\"lambda_max\"," << report.lambda_max.to_string() << ','
        << report.lambda_max.to_double() << ',' << (report.closed_form_consistent ? 1 : 0)
        << '\n';
}

int cmd_cor_matrix(const std::string& levels_text, const std::string& out_dir) {
    const CorrelationSpec cor = build_cor_matrix(FactorSpec::uniform(parse_levels(levels_text)));
    emit_cor_matrix(std::cout, cor, true);
    if (!out_dir.empty()) {
        auto matrix = must_open(out_dir + "/cor_matrix.csv");
        emit_cor_matrix(matrix, cor, true);
        auto decimal = must_open(out_dir + "/cor_matrix_decimal.csv");
        emit_cor_matrix(decimal, cor, false);
        auto spec_out = must_open(out_dir + "/cor_spectrum.csv");
        emit_spectrum(spec_out, cor);
        std::cerr << "wrote " << out_dir << "/cor_matrix.csv, cor_matrix_decimal.csv, "
                  << "cor_spectrum.csv\n";
    } else {
        emit_spectrum(std::cout, cor);
    }
    return 0;
}

int cmd_eigen(const std::string& levels_text, const std::string& out_dir) {
    const CorrelationSpec cor = build_cor_matrix(FactorSpec::uniform(parse_levels(levels_text)));
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_dir.empty()) {
        file = must_open(out_dir + "/eigenbasis.csv");
        out = &file;
    }
    *out << "subset,lambda_exact,vector_index,entries\n";
    bool all_exact = true;
    for (const EigenClass& cls : eigenbasis(cor)) {
        int index = 0;
        for (const auto& v : cls.vectors) {
            const std::vector<Rational> product = multiply(cor, v);
            for (std::size_t z = 0; z < v.size(); ++z)
                if (product[z] != cls.eigenvalue * Rational(v[z])) all_exact = false;
            *out << '"' << subset_names(cls.subset, cor.spec.num_factors()) << "\","
                 << cls.eigenvalue.to_string() << ',' << index++ << ",\"";
            for (std::size_t z = 0; z < v.size(); ++z) *out << (z ? " " : "") << v[z];
            *out << "\"\n";
        }
    }
    std::cerr << "eigen identity Cor*v == lambda*v exact: " << (all_exact ? "yes" : "NO") << '\n';
    return all_exact ? 0 : 1;
}

int cmd_mc_cov(const std::string& levels_text, const std::vector<std::string>& prevalence,
               const std::string& procedure, double bias, const std::string& measure,
               int subjects, int replications, std::uint64_t seed, int threads,
               const std::string& out_dir, const std::string& trace_path) {
    const FactorSpec spec = spec_from_options(parse_levels(levels_text), prevalence);
    ProcedureConfig cfg;
    cfg.kind = procedure_from_string(procedure);
    cfg.bias_p = bias;
    cfg.imbalance_measure =
        measure == "absolute" ? ImbalanceMeasure::absolute : ImbalanceMeasure::squared;
    const int n = subjects > 0 ? subjects : 500 * spec.num_strata();

    if (!trace_path.empty()) {
        Rng rng = Rng::stream(seed, 0);
        std::vector<AllocationTraceRow> trace;
        run_allocation_traced(spec, cfg, n, rng, trace);
        auto out = must_open(trace_path);
        out << "subject_index,stratum_linear,arm,imb_after\n";
        for (const auto& row : trace)
            out << row.subject_index << ',' << row.stratum_linear << ',' << row.arm << ','
                << row.imb_after << '\n';
    }

    const auto samples = collect_imbalances(spec, cfg, n, replications, seed, threads);
    const CovEstimate est = estimate_cov(spec, samples);

    std::cout << "subjects=" << n << " replications=" << replications
              << " sigma2_hat=" << est.sigma2_hat << " mev_hat=" << est.mev_hat;
    if (spec.equal_prevalence())
        std::cout << " sigma2*lambda_max=" << mev_product(spec, est.sigma2_hat);
    std::cout << " empty_stratum_events=" << est.empty_stratum_events << '\n';

    if (!out_dir.empty()) {
        auto cov = must_open(out_dir + "/cov.csv");
        write_cov_csv(cov, est.cov_hat);
        auto classes = must_open(out_dir + "/class_correlations.csv");
        classes << "agreement_set,pairs,estimate";
        const bool equal = spec.equal_prevalence();
        if (equal) classes << ",theoretical,abs_diff";
        classes << '\n';
        for (const auto& [mask, value] : est.class_correlations) {
            classes << '"' << subset_names(mask, spec.num_factors()) << "\","
                    << est.class_pair_counts.at(mask) << ',' << value;
            if (equal) {
                const double exact = class_value(spec.levels(), mask).to_double();
                classes << ',' << exact << ',' << std::abs(value - exact);
            }
            classes << '\n';
        }
        std::cerr << "wrote " << out_dir << "/cov.csv, class_correlations.csv\n";
    }
    return 0;
}

int cmd_simulate_tests(const std::string& config_path, const std::string& out_dir_override) {
    ExperimentConfig cfg = load_config(config_path);
    if (!out_dir_override.empty()) cfg.output_dir = out_dir_override;
    const SimulationOutcome outcome = run_test_simulation(cfg);

    auto reps = must_open(cfg.output_dir + "/replications.csv");
    write_replication_csv(reps, outcome);
    auto summary = must_open(cfg.output_dir + "/summary.csv");
    write_summary_csv(summary, outcome);

    write_summary_csv(std::cout, outcome);
    if (outcome.sigma2_used >= 0.0)
        std::cout << "# robust Cov = sigma2 * Cor with sigma2 = " << outcome.sigma2_used << '\n';
    std::cerr << "wrote " << cfg.output_dir << "/replications.csv, summary.csv\n";
    return 0;
}

}  // namespace

int run_command(int argc, char** argv) {
    CLI::App app{"Simulation laboratory for covariate-adaptive randomization in "
                 "time-to-event trials"};
    app.require_subcommand(1);

    std::string levels = "2,2";
    std::string out_dir;
    std::vector<std::string> prevalence;
    std::string procedure = "pocock-simon";
    std::string measure = "squared";
    double bias = 0.9;
    int subjects = 0;
    int replications = 1000;
    std::uint64_t seed = 20250801;
    int threads = 0;
    std::string trace_path;
    std::string config_path;
    std::string target;
    ReproduceOptions rep_opts;

    auto* cor = app.add_subcommand("cor-matrix",
                                   "Exact equal-prevalence correlation matrix and spectrum");
    cor->add_option("--levels", levels, "factor level counts, e.g. 2,2,3")->required();
    cor->add_option("--out-dir", out_dir, "also write CSV files here");

    auto* eig = app.add_subcommand("eigen", "Tensor eigenbasis with exact verification");
    eig->add_option("--levels", levels)->required();
    eig->add_option("--out-dir", out_dir);

    auto* mc = app.add_subcommand("mc-cov",
                                  "Monte Carlo covariance of normalized imbalances");
    mc->add_option("--levels", levels)->required();
    mc->add_option("--prevalence", prevalence, "factor:p1,p2,... (default uniform)");
    mc->add_option("--procedure", procedure, "randomization procedure");
    mc->add_option("--bias", bias, "assignment bias p");
    mc->add_option("--imbalance", measure, "squared|absolute");
    mc->add_option("--subjects", subjects, "subjects per replication (0 = 500*M_s)");
    mc->add_option("--replications", replications);
    mc->add_option("--seed", seed);
    mc->add_option("--threads", threads);
    mc->add_option("--out-dir", out_dir);
    mc->add_option("--trace", trace_path, "dump replication 0 allocation trace CSV");

    auto* sim = app.add_subcommand("simulate-tests", "Run the test-family simulation");
    sim->add_option("--config", config_path, "experiment config file")->required();
    sim->add_option("--out-dir", out_dir, "override config output-dir");

    auto* rep = app.add_subcommand("reproduce", "Reproduce a published table at desk scale");
    rep->add_option("target", target, "table1..table4, tableA1..tableA5")->required();
    rep->add_option("--scale", rep_opts.scale, "divide R (then N) by this factor");
    rep->add_option("--reps", rep_opts.reps_override, "override replication count");
    rep->add_option("--per-stratum", rep_opts.per_stratum, "override N = per-stratum * M_s");
    rep->add_option("--rows", rep_opts.rows, "row filter, e.g. \"2 2\"");
    rep->add_option("--seed", rep_opts.seed);
    rep->add_option("--threads", rep_opts.threads);
    rep->add_option("--out-dir", rep_opts.output_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cor->parsed()) return cmd_cor_matrix(levels, out_dir);
        if (eig->parsed()) return cmd_eigen(levels, out_dir);
        if (mc->parsed())
            return cmd_mc_cov(levels, prevalence, procedure, bias, measure, subjects,
                              replications, seed, threads, out_dir, trace_path);
        if (sim->parsed()) return cmd_simulate_tests(config_path, out_dir);
        if (rep->parsed()) {
            const std::string path = reproduce(target, rep_opts, std::cerr);
            std::cout << path << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace carlab
