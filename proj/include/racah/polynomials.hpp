#pragma once

#include <array>

#include "racah/grid.hpp"
#include "racah/parameters.hpp"
#include "racah/scalar.hpp"

namespace racah {

/// kappa(x, beta) = (x + (beta+1)/2)(x + (beta-1)/2), the quadratic whose
/// values make up every spectrum in the realization.
Rational kappa(const Rational& x, const Rational& beta);

/// Terminating 4F3 series at unit argument:
///   sum_{j=0}^{depth} (t1)_j (t2)_j (t3)_j (t4)_j / ((b1)_j (b2)_j (b3)_j j!).
/// One top parameter must equal -depth. Computed with a running-term
/// recurrence; throws PoleError when a bottom Pochhammer vanishes inside the
/// summation range.
Rational hyp4f3_terminating(const std::array<Rational, 4>& top,
                            const std::array<Rational, 3>& bottom,
                            long depth);

/// Univariate Racah polynomial
///   r_m(alpha, beta, gamma, delta; x) =
///     (alpha+1)_m (beta+delta+1)_m (gamma+1)_m
///       * 4F3[-m, m+alpha+beta+1, -x, x+gamma+delta+1;
///             alpha+1, beta+delta+1, gamma+1; 1].
///
/// Evaluated in the prefactor-folded form
///   sum_j (-m)_j (m+a+b+1)_j (-x)_j (x+g+d+1)_j
///         (a+1+j)_{m-j} (b+d+1+j)_{m-j} (g+1+j)_{m-j} / j!
/// which is the same polynomial with the bottom Pochhammers cleared. On
/// generic parameters this agrees with the prefactor * 4F3 product; when a
/// bottom Pochhammer vanishes inside the range (gamma+1 a nonpositive
/// integer, which integer lattice arguments do produce) it evaluates the
/// unique polynomial extension instead of raising a pole.
Rational racah_univariate(long m, const Rational& alpha, const Rational& beta,
                          const Rational& gamma, const Rational& delta,
                          const Rational& x);

/// Multivariate Racah polynomial R_p(k; x; beta; N): the product over
/// j = 1..p of univariate factors with chained, index-shifted parameters.
/// x_0 = 0 and x_{n-1} = N conventions apply through coord_value.
Rational racah_multivariate(int p, const MultiIndex& k, const GridPoint& x,
                            const ParameterSet& params);

} // namespace racah
