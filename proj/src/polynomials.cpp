#include "racah/polynomials.hpp"

namespace racah {

Rational kappa(const Rational& x, const Rational& beta) {
    Rational half(1, 2);
    return (x + (beta + Rational(1)) * half) * (x + (beta - Rational(1)) * half);
}

Rational hyp4f3_terminating(const std::array<Rational, 4>& top,
                            const std::array<Rational, 3>& bottom,
                            long depth) {
    if (depth < 0) throw RangeError("hyp4f3_terminating: negative depth");
    bool terminates = false;
    for (const auto& t : top)
        if (t == Rational(-depth)) terminates = true;
    if (!terminates)
        throw std::invalid_argument("hyp4f3_terminating: no top parameter equals -depth");
    // The whole range must be pole-free, independent of where the numerator
    // truncates the series.
    for (const auto& b : bottom)
        if (b.is_integer() && b.sign() <= 0 && -b <= Rational(depth - 1))
            throw PoleError("hyp4f3_terminating: bottom parameter " + b.str() +
                            " vanishes at term " + (-b + Rational(1)).str());

    Rational sum(1);
    Rational term(1);
    for (long j = 0; j < depth; ++j) {
        Rational num(1);
        for (const auto& t : top) num *= t + Rational(j);
        if (num.is_zero()) break;  // a top Pochhammer died; all later terms are zero
        Rational den = Rational(j + 1);
        for (const auto& b : bottom) den *= b + Rational(j);
        term *= num / den;
        sum += term;
    }
    return sum;
}

Rational racah_univariate(long m, const Rational& alpha, const Rational& beta,
                          const Rational& gamma, const Rational& delta,
                          const Rational& x) {
    if (m < 0) throw RangeError("racah_univariate: negative degree");
    const Rational a1 = alpha + Rational(1);
    const Rational bd1 = beta + delta + Rational(1);
    const Rational g1 = gamma + Rational(1);
    const Rational t2 = Rational(m) + alpha + beta + Rational(1);
    const Rational t4 = x + gamma + delta + Rational(1);

    Rational sum(0);
    Rational rising(1);  // (-m)_j (m+a+b+1)_j (-x)_j (x+g+d+1)_j / j!
    for (long j = 0; j <= m; ++j) {
        if (j > 0) {
            Rational step = (Rational(-m + j - 1)) * (t2 + Rational(j - 1)) *
                            (Rational(j - 1) - x) * (t4 + Rational(j - 1));
            if (step.is_zero()) break;  // zero persists in every later term
            rising *= step / Rational(j);
        }
        Rational tail = pochhammer(a1 + Rational(j), m - j) *
                        pochhammer(bd1 + Rational(j), m - j) *
                        pochhammer(g1 + Rational(j), m - j);
        sum += rising * tail;
    }
    return sum;
}

Rational racah_multivariate(int p, const MultiIndex& k, const GridPoint& x,
                            const ParameterSet& params) {
    if (p < 0 || p > params.rank())
        throw RangeError("racah_multivariate: p = " + std::to_string(p) + " out of range");
    if (static_cast<int>(k.k.size()) < p)
        throw DimensionError("racah_multivariate: k has fewer than p components");
    if (static_cast<int>(x.size()) != params.rank())
        throw DimensionError("racah_multivariate: x has wrong dimension");
    if (k.abs_up_to(p) > params.N())
        throw RangeError("racah_multivariate: |k|_p exceeds N");

    Rational product(1);
    for (int j = 1; j <= p; ++j) {
        const long K = k.abs_up_to(j - 1);
        const long xj = coord_value(x, j, params);
        const long xj1 = coord_value(x, j + 1, params);
        const Rational alpha = Rational(2 * K) + params.beta(j) - params.beta(0) - Rational(1);
        const Rational beta = params.beta(j + 1) - params.beta(j) - Rational(1);
        const Rational gamma = Rational(K - xj1 - 1);
        const Rational delta = Rational(K) + params.beta(j) + Rational(xj1);
        product *= racah_univariate(k.k[static_cast<size_t>(j - 1)], alpha, beta, gamma,
                                    delta, Rational(xj - K));
        if (product.is_zero()) break;
    }
    return product;
}

} // namespace racah
