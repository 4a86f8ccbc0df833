#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "carlab/rational.hpp"
#include "carlab/strata.hpp"

namespace carlab {

// Factor subsets are bitmasks: bit k set means factor k+1 belongs to the
// subset. Enumeration is refused above kMaxFactorsForSubsets factors.
inline constexpr int kMaxFactorsForSubsets = 24;

// The asymptotic correlation matrix of normalized within-stratum imbalances
// under equal stratum prevalence. Entries depend only on the set I of
// factors on which the two strata agree; class_values maps that set to c_I
// and `matrix` expands it to the full M_s x M_s symmetric matrix (exact
// rationals, common denominator Q for the off-class entries).
struct CorrelationSpec {
    FactorSpec spec;
    std::vector<std::vector<Rational>> matrix;
    std::map<std::uint32_t, Rational> class_values;
    BigInt denominator;  // Q = prod n_i - sum n_i + M - 1
};

// c_I for a level configuration: (M - 1 - sum_{i in I} n_i) / Q, and 1 for
// the full set.
Rational class_value(const std::vector<int>& levels, std::uint32_t agree_mask);

// The set of factors on which two strata agree, as a bitmask.
std::uint32_t agreement_mask(const StratumIndex& a, const StratumIndex& b);

// Builds the closed-form matrix. Requires M >= 2 (a single factor
// degenerates to stratified biased-coin randomization) and equal stratum
// prevalence.
CorrelationSpec build_cor_matrix(const FactorSpec& spec);

// Builds a level-permutation-invariant matrix from arbitrary class values
// (every subset of factors must be present). Used to study matrices other
// than the closed-form one; no constraint on the values themselves.
CorrelationSpec correlation_from_class_values(const FactorSpec& spec,
                                              std::map<std::uint32_t, Rational> class_values);

// Residuals of the 2M-equation linear system the correlation classes must
// satisfy: for each factor j, the within-margin row sums against a stratum
// inside and outside the margin. Exact rationals; the closed-form matrix
// gives all zeros.
std::vector<Rational> constraint_residuals(const CorrelationSpec& cor);
Rational max_constraint_residual(const CorrelationSpec& cor);

struct SpectrumReport {
    std::map<std::uint32_t, Rational> eigenvalues;  // J -> lambda_J
    std::map<std::uint32_t, long> multiplicities;   // J -> m_J = prod_{j notin J} (n_j - 1)
    Rational lambda_max;                            // closed form prod n_i / Q
    // True when the subset-sum eigenvalues match the closed-form pattern:
    // lambda_J = lambda_max for #J < M-1 and 0 otherwise.
    bool closed_form_consistent = false;
};

// Complete eigen-spectrum of a level-permutation-invariant matrix via the
// subset sums lambda_J = sum_I (-1)^{#(J^c & I^c)} c_I prod_{j in J & I^c} (n_j - 1).
SpectrumReport spectrum(const CorrelationSpec& cor);

// Eigenvectors are tensor products: the all-ones vector on factors in J and
// zero-sum difference vectors e_k - e_{k+1} on factors outside J. Entries
// are integers in {-1, 0, 1}; the vectors for all J jointly span R^{M_s}.
struct EigenClass {
    std::uint32_t subset;  // J
    Rational eigenvalue;
    std::vector<std::vector<int>> vectors;  // m_J vectors of length M_s
};

std::vector<EigenClass> eigenbasis(const CorrelationSpec& cor);

// Exact matrix-vector product against an integer vector.
std::vector<Rational> multiply(const CorrelationSpec& cor, const std::vector<int>& v);

// Checks Cor v = lambda_J v for every basis vector, exactly. Entries share
// the common denominator, so when numerators are small enough the check
// runs on 64-bit integers; otherwise it falls back to rational products.
// Returns true only if every identity holds and the basis size is M_s.
bool verify_eigenbasis_exact(const CorrelationSpec& cor);

}  // namespace carlab
