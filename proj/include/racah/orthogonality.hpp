#pragma once

#include <map>
#include <memory>
#include <vector>

#include "racah/algebra.hpp"
#include "racah/grid.hpp"
#include "racah/polynomials.hpp"
#include "racah/report.hpp"

namespace racah {

/// A weight known exactly up to Gamma constants: rational_part times the
/// product of Gamma(base)^exponent over the recorded bases.
///
/// Gamma arguments are canonicalized: integer arguments fold into the
/// rational part as factorials (nonpositive integers raise PoleError), and
/// non-integer arguments split as base + integer offset with the base
/// reduced mod 1 into (0, 1). The offset is absorbed through Pochhammer
/// factors. With this normal form two weights describe the same value
/// exactly when their rational parts and exponent maps agree, and the
/// exponent map of a weight family (omega over x, mu over k) is constant
/// across the family, which is what lets Gram sums factor the Gamma
/// constant out.
class WeightValue {
public:
    static WeightValue one() { return WeightValue(); }

    Rational rational_part{1};
    std::map<Rational, int> gamma_exponents;  // canonical base in (0,1) -> exponent

    void multiply_rational(const Rational& r) { rational_part *= r; }
    void divide_rational(const Rational& r) { rational_part /= r; }
    /// Multiply by Gamma(arg)^{power}.
    void multiply_gamma(const Rational& arg, int power = 1);
    void divide_gamma(const Rational& arg) { multiply_gamma(arg, -1); }
    void multiply_factorial(long m) { rational_part *= factorial(m); }
    void divide_factorial(long m) { rational_part /= factorial(m); }

    WeightValue& operator*=(const WeightValue& o);

    bool same_bases(const WeightValue& o) const { return gamma_exponents == o.gamma_exponents; }

    /// log of the full value; requires rational_part > 0 (SignError otherwise).
    double log_value() const;

    friend bool operator==(const WeightValue& a, const WeightValue& b) {
        return a.rational_part == b.rational_part && a.gamma_exponents == b.gamma_exponents;
    }
};

/// omega_p(x): the x-side weight of the multivariate orthogonality relation.
/// Conventions x_0 = 0, x_{p+1} read through coord_value (so x_{p+1} = N
/// when p+1 = n-1).
WeightValue weight_omega(int p, const GridPoint& x, const ParameterSet& params);

/// mu_p(k): the k-side weight, including the N-boundary factor.
WeightValue weight_mu(int p, const MultiIndex& k, const ParameterSet& params);

/// Univariate weight rho(l) of the rank-one connection problem.
WeightValue weight_rho(long ell, const ParameterSet& params);

/// Univariate normalization 1/lambda(k).
WeightValue weight_lambda_inv(long k, const ParameterSet& params);

/// Connection coefficients R_k(x) = sqrt(omega(x) mu(k)) R_{n-2}(k; x).
/// Float entries via log-gamma; the exact companions keep the rational
/// parts and the polynomial values for the Gram checks.
class ConnectionMatrix {
public:
    explicit ConnectionMatrix(const ParameterSet& params, int threads = 1);

    const SimplexGrid& grid() const { return *grid_; }
    size_t dim() const { return grid_->size(); }

    double entry(size_t k_row, size_t x_col) const { return float_[k_row * dim() + x_col]; }
    const Rational& polynomial(size_t k_row, size_t x_col) const {
        return poly_[k_row * dim() + x_col];
    }
    const WeightValue& omega(size_t x_col) const { return omega_[x_col]; }
    const WeightValue& mu(size_t k_row) const { return mu_[k_row]; }

    /// max |(row_i . row_j) - delta_ij| over all row pairs.
    double gram_defect() const;

    std::string to_csv() const;

private:
    std::shared_ptr<const SimplexGrid> grid_;
    std::vector<Rational> poly_;
    std::vector<WeightValue> omega_;
    std::vector<WeightValue> mu_;
    std::vector<double> float_;
};

ConnectionMatrix connection_matrix(const ParameterSet& params, int threads = 1);

/// Exact orthogonality of the multivariate Racah family:
///  (a) off-diagonal Gram sums vanish exactly with the Gamma constant
///      factored out,
///  (b) the diagonal sum times mu_rational is one exact constant across k,
///  (c) that constant times the factored Gamma product is 1 within 1e-9
///      (and the aggregated Gamma exponents cancel identically, which the
///      check asserts on the exact side as well).
Report verify_orthogonality_exact(const ParameterSet& params, int threads = 1);

/// Eigen-equations of the labelling chain on the connection rows:
/// C_{[2..m+1]} R(k; .) = kappa(|k|_{m-1}, beta_m - beta_0 - 1) R(k; .)
/// exactly for every k and every m, while C_{[m]} stays diagonal.
Report verify_diagonalization(GeneratorTable& table);

} // namespace racah
