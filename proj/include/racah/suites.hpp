#pragma once

#include "racah/algebra.hpp"
#include "racah/config.hpp"
#include "racah/orthogonality.hpp"

namespace racah {

/// Drives the verification suites on one configuration, sharing the
/// generator table across suites.
class VerificationRun {
public:
    explicit VerificationRun(const RunConfig& cfg);

    /// Runs the selected suites (all applicable ones when the config names
    /// none) and returns the merged, sorted report.
    Report run();

    /// Runs one suite by name.
    Report run_suite(const std::string& name);

    GeneratorTable& table() { return table_; }
    const ParameterSet& params() const { return params_; }

private:
    Report suite_commutation();
    Report suite_rank_one();
    Report suite_classical();
    Report suite_lind();
    Report suite_bispectral();
    Report suite_sigma();
    Report suite_spectrum();
    Report suite_orthogonality();
    Report suite_specialization();

    RunConfig cfg_;
    ParameterSet params_;
    GeneratorTable table_;
};

/// Full report serialization: {config, relations, summary}; byte
/// deterministic for a fixed config.
std::string report_to_json(const RunConfig& cfg, const Report& report);

/// Univariate Racah vector r_k(beta1-beta0-1, beta2-beta1-1, -N-1, beta1+N; x)
/// on an n = 3 grid; the eigenvectors of the rank-one realization.
GridFunction univariate_racah_vector(const SimplexGrid& grid, long k);

/// The two closed-form shift coefficients of the rank-one operator,
/// coded independently of the G_nu machinery for specialization checks.
Rational rank_one_up_coefficient(long x, const ParameterSet& params);
Rational rank_one_down_coefficient(long x, const ParameterSet& params);

} // namespace racah
