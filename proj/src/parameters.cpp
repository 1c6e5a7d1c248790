#include "racah/parameters.hpp"

namespace racah {

ParameterSet::ParameterSet(int n, int N, std::vector<Rational> beta)
    : n_(n), N_(N), beta_(std::move(beta)) {
    if (n_ < 3) throw ConfigError("ParameterSet: n must be >= 3");
    if (N_ < 0) throw ConfigError("ParameterSet: N must be >= 0");
    if (static_cast<int>(beta_.size()) != n_)
        throw ConfigError("ParameterSet: expected " + std::to_string(n_) +
                          " beta values, got " + std::to_string(beta_.size()));
}

const Rational& ParameterSet::beta(int i) const {
    if (i == -1) return beta_minus_one_;
    if (i < 0 || i >= n_) throw RangeError("ParameterSet::beta: index " + std::to_string(i));
    return beta_[static_cast<size_t>(i)];
}

std::string ParameterSet::genericity_violation() const {
    // b_i^{nu} denominators: 2x + beta_i with x a grid coordinate.
    for (int i = 1; i <= n_ - 2; ++i) {
        const Rational& b = beta_[static_cast<size_t>(i)];
        if (!b.is_integer()) continue;  // 2x + non-integer never hits -1/0/1
        for (long x = 0; x <= N_; ++x) {
            Rational u = Rational(2 * x) + b;
            if (u == Rational(-1) || u == Rational(0) || u == Rational(1))
                return "2x+beta_" + std::to_string(i) + " = " + u.str() +
                       " at x = " + std::to_string(x) + " (b-factor denominator vanishes)";
        }
    }
    // Adjacent differences must stay off the integers.
    for (int j = 0; j + 1 <= n_ - 1; ++j) {
        Rational d = beta_[static_cast<size_t>(j + 1)] - beta_[static_cast<size_t>(j)];
        if (d.is_integer())
            return "beta_" + std::to_string(j + 1) + " - beta_" + std::to_string(j) +
                   " = " + d.str() + " is an integer";
    }
    // beta_j - beta_0 as a small integer poisons the (alpha+1)-type
    // Pochhammers and the mu weight bases.
    for (int j = 2; j <= n_ - 1; ++j) {
        Rational d = beta_[static_cast<size_t>(j)] - beta_[0];
        if (d.is_integer_leq(1))
            return "beta_" + std::to_string(j) + " - beta_0 = " + d.str() +
                   " is an integer <= 1";
    }
    for (int j = 1; j <= n_ - 1; ++j) {
        if (beta_[static_cast<size_t>(j)].is_integer_leq(0))
            return "beta_" + std::to_string(j) + " = " + beta_[static_cast<size_t>(j)].str() +
                   " is a nonpositive integer";
    }
    if (beta_[0].is_integer_leq(-1))
        return "beta_0 = " + beta_[0].str() + " is an integer <= -1";
    return {};
}

void ParameterSet::require_generic() const {
    std::string why = genericity_violation();
    if (!why.empty()) throw ConfigError("parameters are not generic: " + why);
}

} // namespace racah
