#include "carlab/correlation.hpp"

#include <stdexcept>

namespace carlab {

namespace {

void check_subset_limits(const FactorSpec& spec) {
    if (spec.num_factors() < 2)
        throw std::invalid_argument(
            "correlation matrix needs M >= 2 factors (one factor degenerates to "
            "stratified randomization)");
    if (spec.num_factors() > kMaxFactorsForSubsets)
        throw std::invalid_argument("subset enumeration supports at most 24 factors");
}

BigInt common_denominator(const std::vector<int>& levels) {
    BigInt prod(1), sum(0);
    for (int n : levels) {
        prod = prod * BigInt(n);
        sum = sum + BigInt(n);
    }
    return prod - sum + BigInt(static_cast<long long>(levels.size()) - 1);
}

std::uint32_t full_mask(int m) { return (m >= 32) ? 0xffffffffU : ((1U << m) - 1U); }

void expand_matrix(CorrelationSpec& cor) {
    const int ms = cor.spec.num_strata();
    const auto strata = enumerate_strata(cor.spec);
    cor.matrix.assign(ms, std::vector<Rational>(ms));
    for (int a = 0; a < ms; ++a)
        for (int b = a; b < ms; ++b) {
            const Rational& value = cor.class_values.at(agreement_mask(strata[a], strata[b]));
            cor.matrix[a][b] = value;
            cor.matrix[b][a] = value;
        }
}

}  // namespace

std::uint32_t agreement_mask(const StratumIndex& a, const StratumIndex& b) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < a.multi.size(); ++k)
        if (a.multi[k] == b.multi[k]) mask |= 1U << k;
    return mask;
}

Rational class_value(const std::vector<int>& levels, std::uint32_t agree_mask) {
    const int m = static_cast<int>(levels.size());
    if (agree_mask == full_mask(m)) return Rational(1);
    long long level_sum = 0;
    for (int k = 0; k < m; ++k)
        if (agree_mask & (1U << k)) level_sum += levels[k];
    return Rational(BigInt(m - 1 - level_sum), common_denominator(levels));
}

CorrelationSpec build_cor_matrix(const FactorSpec& spec) {
    check_subset_limits(spec);
    if (!spec.equal_prevalence())
        throw std::invalid_argument("closed-form correlation matrix assumes equal prevalence");

    CorrelationSpec cor;
    cor.spec = spec;
    cor.denominator = common_denominator(spec.levels());
    const std::uint32_t full = full_mask(spec.num_factors());
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        cor.class_values.emplace(mask, class_value(spec.levels(), mask));
    expand_matrix(cor);
    return cor;
}

CorrelationSpec correlation_from_class_values(const FactorSpec& spec,
                                              std::map<std::uint32_t, Rational> class_values) {
    check_subset_limits(spec);
    const std::uint32_t full = full_mask(spec.num_factors());
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        if (!class_values.count(mask))
            throw std::invalid_argument("correlation_from_class_values: missing subset value");
    CorrelationSpec cor;
    cor.spec = spec;
    cor.denominator = common_denominator(spec.levels());
    cor.class_values = std::move(class_values);
    expand_matrix(cor);
    return cor;
}

std::vector<Rational> constraint_residuals(const CorrelationSpec& cor) {
    const auto& levels = cor.spec.levels();
    const int m = static_cast<int>(levels.size());
    const std::uint32_t full = full_mask(m);
    std::vector<Rational> residuals;
    residuals.reserve(2 * m);
    for (int j = 0; j < m; ++j) {
        // Row sum within the margin {z : i_j = 1} against a member stratum:
        // subsets containing j, each contributing prod_{i in I^c} (n_i - 1)
        // matching strata.
        Rational inside(0);
        // ... and against a stratum outside that margin: subsets without j,
        // prod over I^c \ {j}.
        Rational outside(0);
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            long long count = 1;
            for (int i = 0; i < m; ++i)
                if (i != j && !(mask & (1U << i))) count *= levels[i] - 1;
            if (mask & (1U << j)) {
                inside += cor.class_values.at(mask) * Rational(count);
            } else {
                outside += cor.class_values.at(mask) * Rational(count);
            }
        }
        residuals.push_back(inside);
        residuals.push_back(outside);
    }
    return residuals;
}

Rational max_constraint_residual(const CorrelationSpec& cor) {
    Rational worst(0);
    for (const Rational& r : constraint_residuals(cor))
        if (r.abs() > worst) worst = r.abs();
    return worst;
}

SpectrumReport spectrum(const CorrelationSpec& cor) {
    const auto& levels = cor.spec.levels();
    const int m = static_cast<int>(levels.size());
    const std::uint32_t full = full_mask(m);

    SpectrumReport report;
    BigInt prod(1);
    for (int n : levels) prod = prod * BigInt(n);
    report.lambda_max = Rational(prod, cor.denominator);

    for (std::uint32_t j_mask = 0; j_mask <= full; ++j_mask) {
        Rational lambda(0);
        for (std::uint32_t i_mask = 0; i_mask <= full; ++i_mask) {
            const std::uint32_t outside_both = full & ~j_mask & ~i_mask;
            const int sign_bits = __builtin_popcount(outside_both);
            long long prod_j = 1;
            for (int k = 0; k < m; ++k)
                if ((j_mask & (1U << k)) && !(i_mask & (1U << k))) prod_j *= levels[k] - 1;
            Rational term = cor.class_values.at(i_mask) * Rational(prod_j);
            lambda += (sign_bits % 2 == 0) ? term : -term;
        }
        report.eigenvalues.emplace(j_mask, lambda);

        long mult = 1;
        for (int k = 0; k < m; ++k)
            if (!(j_mask & (1U << k))) mult *= levels[k] - 1;
        report.multiplicities.emplace(j_mask, mult);
    }

    report.closed_form_consistent = true;
    for (const auto& [j_mask, lambda] : report.eigenvalues) {
        const int size = __builtin_popcount(j_mask);
        const Rational expected = size < m - 1 ? report.lambda_max : Rational(0);
        if (lambda != expected) report.closed_form_consistent = false;
    }
    return report;
}

std::vector<EigenClass> eigenbasis(const CorrelationSpec& cor) {
    const auto& levels = cor.spec.levels();
    const int m = static_cast<int>(levels.size());
    const std::uint32_t full = full_mask(m);
    const SpectrumReport report = spectrum(cor);
    const auto strata = enumerate_strata(cor.spec);

    std::vector<EigenClass> basis;
    for (std::uint32_t j_mask = 0; j_mask <= full; ++j_mask) {
        EigenClass cls;
        cls.subset = j_mask;
        cls.eigenvalue = report.eigenvalues.at(j_mask);

        // One difference-vector choice per factor outside J; factors in J
        // use the all-ones vector. Iterate the mixed-radix product of
        // choices k_j in [1, n_j - 1].
        std::vector<int> choice(m, 0);  // 0 marks "all-ones" (factor in J)
        for (int k = 0; k < m; ++k)
            if (!(j_mask & (1U << k))) choice[k] = 1;
        while (true) {
            std::vector<int> v(strata.size());
            for (std::size_t z = 0; z < strata.size(); ++z) {
                int entry = 1;
                for (int k = 0; k < m && entry != 0; ++k) {
                    if (choice[k] == 0) continue;  // all-ones component
                    const int h = strata[z].multi[k];
                    if (h == choice[k])
                        entry *= 1;
                    else if (h == choice[k] + 1)
                        entry *= -1;
                    else
                        entry = 0;
                }
                v[z] = entry;
            }
            cls.vectors.push_back(std::move(v));

            int k = m - 1;
            for (; k >= 0; --k) {
                if (choice[k] == 0) continue;
                if (choice[k] < levels[k] - 1) {
                    ++choice[k];
                    break;
                }
                choice[k] = 1;
            }
            if (k < 0) break;
        }
        basis.push_back(std::move(cls));
    }
    return basis;
}

bool verify_eigenbasis_exact(const CorrelationSpec& cor) {
    const int ms = cor.spec.num_strata();
    const SpectrumReport report = spectrum(cor);

    // Integer route: every entry is num/Q and every eigenvalue is num/Q, so
    // Cor v = lambda v is equivalent to the numerator identity row by row.
    bool int_route = true;
    long long max_num = 0;
    std::vector<std::vector<long long>> numerators;
    std::map<std::uint32_t, long long> lambda_num;
    for (const auto& [mask, value] : cor.class_values) {
        const Rational scaled = value * Rational(cor.denominator, BigInt(1));
        if (!(scaled.den() == BigInt(1)) || !scaled.num().fits_int64()) {
            int_route = false;
            break;
        }
        max_num = std::max(max_num, std::llabs(scaled.num().to_int64()));
    }
    if (int_route) {
        for (const auto& [mask, lambda] : report.eigenvalues) {
            const Rational scaled = lambda * Rational(cor.denominator, BigInt(1));
            if (!(scaled.den() == BigInt(1)) || !scaled.num().fits_int64()) {
                int_route = false;
                break;
            }
            lambda_num[mask] = scaled.num().to_int64();
            max_num = std::max(max_num, std::llabs(lambda_num[mask]));
        }
    }
    if (int_route && max_num < (1LL << 50) / std::max(ms, 1)) {
        const auto strata = enumerate_strata(cor.spec);
        numerators.assign(ms, std::vector<long long>(ms));
        std::map<std::uint32_t, long long> class_num;
        for (const auto& [mask, value] : cor.class_values)
            class_num[mask] = (value * Rational(cor.denominator, BigInt(1))).num().to_int64();
        for (int a = 0; a < ms; ++a)
            for (int b = 0; b < ms; ++b)
                numerators[a][b] = class_num.at(agreement_mask(strata[a], strata[b]));

        long count = 0;
        for (const EigenClass& cls : eigenbasis(cor)) {
            const long long lnum = lambda_num.at(cls.subset);
            for (const auto& v : cls.vectors) {
                ++count;
                for (int a = 0; a < ms; ++a) {
                    long long sum = 0;
                    for (int b = 0; b < ms; ++b)
                        if (v[b]) sum += numerators[a][b] * v[b];
                    if (sum != lnum * v[a]) return false;
                }
            }
        }
        return count == ms;
    }

    long count = 0;
    for (const EigenClass& cls : eigenbasis(cor)) {
        for (const auto& v : cls.vectors) {
            ++count;
            const std::vector<Rational> product = multiply(cor, v);
            for (int a = 0; a < ms; ++a)
                if (product[a] != cls.eigenvalue * Rational(v[a])) return false;
        }
    }
    return count == ms;
}

std::vector<Rational> multiply(const CorrelationSpec& cor, const std::vector<int>& v) {
    if (v.size() != cor.matrix.size())
        throw std::invalid_argument("multiply: vector length must equal M_s");
    std::vector<Rational> out(v.size(), Rational(0));
    for (std::size_t r = 0; r < v.size(); ++r) {
        Rational sum(0);
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) sum += cor.matrix[r][c] * Rational(v[c]);
        out[r] = sum;
    }
    return out;
}

}  // namespace carlab
