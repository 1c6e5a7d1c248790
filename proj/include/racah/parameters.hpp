#pragma once

#include <string>
#include <vector>

#include "racah/rational.hpp"

namespace racah {

/// The (n, N, beta) triple every construction hangs off.
///
/// n >= 3 counts the tensor factors, N is the top of the simplex grid
/// (x_{n-1} = N), and beta holds the n parameters beta_0 .. beta_{n-1}.
/// beta(-1) is the constant -1, the convention the spectra lemma uses for
/// uniform treatment of singleton generators.
class ParameterSet {
public:
    ParameterSet(int n, int N, std::vector<Rational> beta);

    int n() const { return n_; }
    int N() const { return N_; }
    int rank() const { return n_ - 2; }

    const Rational& beta(int i) const;
    const std::vector<Rational>& betas() const { return beta_; }

    /// Genericity predicate guarding every pole the constructions can hit
    /// on this grid:
    ///   - 2x + beta_i never lands in {-1, 0, 1} for grid coordinates
    ///     x in [0, N] (the b_i^nu denominators of the Racah operators),
    ///   - adjacent differences beta_{j+1} - beta_j are not integers
    ///     (weight Gamma factors and univariate parameter degeneracies),
    ///   - beta_j - beta_0 is not an integer <= 1 for j >= 2 (Pochhammer
    ///     denominators of the polynomial factors, mu weight bases),
    ///   - beta_j is not a nonpositive integer, beta_0 is not an integer
    ///     <= -1 (omega/mu Gamma bases).
    bool is_generic() const { return genericity_violation().empty(); }

    /// Empty when generic; otherwise a description of one violated condition.
    std::string genericity_violation() const;

    /// Throws ConfigError when not generic.
    void require_generic() const;

    friend bool operator==(const ParameterSet& a, const ParameterSet& b) {
        return a.n_ == b.n_ && a.N_ == b.N_ && a.beta_ == b.beta_;
    }
    friend bool operator!=(const ParameterSet& a, const ParameterSet& b) { return !(a == b); }

private:
    int n_;
    int N_;
    std::vector<Rational> beta_;
    Rational beta_minus_one_{-1};
};

} // namespace racah
