#pragma once

#include <variant>
#include <vector>

#include "racah/grid.hpp"
#include "racah/parameters.hpp"
#include "racah/polynomials.hpp"

namespace racah {

/// b_i^{nu}: the denominators of the Racah operator coefficients.
///   b_i^0  = (2x_i+beta_i+1)(2x_i+beta_i-1)
///   b_i^1  = (2x_i+beta_i+1)(2x_i+beta_i)
///   b_i^{-1} = I_i(b_i^1),  I_i : x_i -> -x_i - beta_i
Rational b_factor(int i, int nu, const GridPoint& x, const ParameterSet& params);

/// B_i^{s,t}: the numerator polynomials, with negative superscripts obtained
/// through the involutions I_i and I_{i+1}. Coordinates use the global
/// conventions x_0 = 0, x_{n-1} = N.
Rational B_factor(int i, int s, int t, const GridPoint& x, const ParameterSet& params);

/// Coefficient atoms. Operators store these symbolically so that the sigma
/// index shift and the offset substitution act exactly, and realize them
/// pointwise on grid nodes.
///
/// G_nu of the Racah operator L_j acting on coordinates
/// x_{offset+1} .. x_{offset+j}. With `substituted` set, the coefficient is
/// evaluated through the change of variables
///   x'_t = x_{offset+t} - x_{offset},  beta'_t = beta_{offset+t} + 2 x_{offset}
/// fed into the offset-0 formulas; this is the independent construction the
/// shift-covariance checks compare against.
struct GNuCoefficient {
    int j = 0;
    int offset = 0;
    std::vector<int> nu;  // length j, entries -1/0/1, never all zero
    bool substituted = false;
    Rational factor{1};
};

/// factor * kappa(x_m, beta_m) as a multiplication operator.
struct KappaCoordinate {
    int m = 0;
    Rational factor{1};
};

/// factor * kappa(0, beta_a - beta_b - 1), a constant (b = -1 uses the
/// beta_{-1} = -1 convention, giving kappa(0, beta_a)).
struct KappaConstant {
    int a = 0;
    int b = 0;
    Rational factor{1};
};

struct ConstantCoefficient {
    Rational value{0};
};

using Coefficient =
    std::variant<GNuCoefficient, KappaCoordinate, KappaConstant, ConstantCoefficient>;
using CoefficientSum = std::vector<Coefficient>;

/// Evaluate a coefficient sum at a grid point.
Rational evaluate(const CoefficientSum& sum, const GridPoint& x, const ParameterSet& params);

/// One shift term: the full-width shift vector nu (over positions 1..n-2)
/// and its coefficient. Entries outside the operator's window are zero.
struct ShiftTerm {
    std::vector<int> nu;
    CoefficientSum coeff;
};

/// Difference operator in the form
///   (op f)(x) = sum_nu G_nu(x) (f(x+nu) - f(x)) + identity_part(x) f(x).
/// At most one term per distinct nu; nu = 0 contributions live in
/// identity_part. Immutable after construction.
struct DifferenceOperator {
    ParameterSet params;
    std::vector<ShiftTerm> terms;
    CoefficientSum identity_part;
};

/// The Racah shift operator L_j acting on coordinates
/// x_{offset+1} .. x_{offset+j}:
///   L_j = sum_{nu in {-1,0,1}^j \ {0}} G_nu (E_nu - 1),
///   G_nu = 2^{#zeros(nu)} prod_{i=0}^{j} B_i^{nu_i, nu_{i+1}}
///          / prod_{i=1}^{j} b_i^{nu_i},      nu_0 = nu_{j+1} = 0,
/// all indices shifted by offset. j = 0 yields the zero operator.
/// Terms are listed in odometer order over {-1,0,1}^j (rightmost digit
/// fastest, digits in -1, 0, +1 order).
DifferenceOperator build_racah_operator(int j, int offset, const ParameterSet& params);

/// Same operator built through the offset substitution identity (see
/// GNuCoefficient::substituted). Realizes to the same matrix; the arithmetic
/// route is independent.
DifferenceOperator build_racah_operator_substituted(int j, int offset,
                                                    const ParameterSet& params);

/// Zero operator on the given parameter set.
DifferenceOperator zero_operator(const ParameterSet& params);

/// The sigma isomorphism: every coordinate, parameter and shift index
/// incremented by one. Composition handles sigma^m. Throws RangeError when
/// any index would leave 0..n-1.
DifferenceOperator sigma_shift(const DifferenceOperator& op);

/// Apply the operator to a grid function. A shifted point outside the
/// simplex is dropped when its coefficient vanishes exactly and raises
/// BoundaryError otherwise.
GridFunction apply(const DifferenceOperator& op, const GridFunction& f);

} // namespace racah
