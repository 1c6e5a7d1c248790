#include "racah/operators.hpp"

namespace racah {

namespace {

// Base polynomials on explicit coordinate/parameter values. u, v stand for
// (possibly involuted) x_i, x_{i+1}; bu, bv for beta_i, beta_{i+1}.
Rational B_base(int s_abs, int t_abs, const Rational& u, const Rational& v,
                const Rational& bu, const Rational& bv) {
    if (s_abs == 0 && t_abs == 0)
        return u * (u + bu) + v * (v + bv) + (bu + Rational(1)) * (bv - Rational(1)) / Rational(2);
    if (s_abs == 0 && t_abs == 1) return (v + u + bv) * (v - u + bv - bu);
    if (s_abs == 1 && t_abs == 0) return (v - u) * (v + u + bv);
    return (v + u + bv) * (v + u + bv + Rational(1));
}

Rational B_eval(int s, int t, Rational u, Rational v, const Rational& bu, const Rational& bv) {
    if (s == -1) u = -u - bu;  // I_i
    if (t == -1) v = -v - bv;  // I_{i+1}
    return B_base(std::abs(s), std::abs(t), u, v, bu, bv);
}

Rational b_eval(int nu, const Rational& u_coord, const Rational& beta) {
    Rational w = Rational(2) * u_coord + beta;
    switch (nu) {
        case 0: return (w + Rational(1)) * (w - Rational(1));
        case 1: return (w + Rational(1)) * w;
        case -1: {
            // I_i(b^1): substitute x_i -> -x_i - beta_i, so w -> -w.
            Rational wi = -w;
            return (wi + Rational(1)) * wi;
        }
        default: throw RangeError("b_factor: nu must be -1, 0 or 1");
    }
}

Rational evaluate_gnu(const GNuCoefficient& g, const GridPoint& x, const ParameterSet& params) {
    const int j = g.j;
    // Window position t in [0, j+1] carries coordinate x_{offset+t} and
    // parameter beta_{offset+t}, or their substituted counterparts.
    std::vector<Rational> u(static_cast<size_t>(j) + 2), bt(static_cast<size_t>(j) + 2);
    const Rational base(coord_value(x, g.offset, params));
    for (int t = 0; t <= j + 1; ++t) {
        Rational c(coord_value(x, g.offset + t, params));
        if (g.substituted) {
            u[static_cast<size_t>(t)] = c - base;
            bt[static_cast<size_t>(t)] = params.beta(g.offset + t) + Rational(2) * base;
        } else {
            u[static_cast<size_t>(t)] = c;
            bt[static_cast<size_t>(t)] = params.beta(g.offset + t);
        }
    }
    auto nu_at = [&](int t) {
        return (t >= 1 && t <= j) ? g.nu[static_cast<size_t>(t - 1)] : 0;
    };
    int zeros = 0;
    for (int t = 1; t <= j; ++t)
        if (nu_at(t) == 0) ++zeros;

    Rational num(1);
    for (int i = 0; i <= j; ++i)
        num *= B_eval(nu_at(i), nu_at(i + 1), u[static_cast<size_t>(i)],
                      u[static_cast<size_t>(i + 1)], bt[static_cast<size_t>(i)],
                      bt[static_cast<size_t>(i + 1)]);
    Rational den(1);
    for (int i = 1; i <= j; ++i) {
        Rational d = b_eval(nu_at(i), u[static_cast<size_t>(i)], bt[static_cast<size_t>(i)]);
        if (d.is_zero())
            throw PoleError("G_nu: denominator b_" + std::to_string(g.offset + i) +
                            " vanishes at " + point_label(x));
        den *= d;
    }
    Rational two_pow(1);
    for (int z = 0; z < zeros; ++z) two_pow *= Rational(2);
    return g.factor * two_pow * num / den;
}

} // namespace

Rational b_factor(int i, int nu, const GridPoint& x, const ParameterSet& params) {
    return b_eval(nu, Rational(coord_value(x, i, params)), params.beta(i));
}

Rational B_factor(int i, int s, int t, const GridPoint& x, const ParameterSet& params) {
    return B_eval(s, t, Rational(coord_value(x, i, params)),
                  Rational(coord_value(x, i + 1, params)), params.beta(i), params.beta(i + 1));
}

Rational evaluate(const CoefficientSum& sum, const GridPoint& x, const ParameterSet& params) {
    Rational acc(0);
    for (const auto& c : sum) {
        if (const auto* g = std::get_if<GNuCoefficient>(&c)) {
            acc += evaluate_gnu(*g, x, params);
        } else if (const auto* kc = std::get_if<KappaCoordinate>(&c)) {
            acc += kc->factor *
                   kappa(Rational(coord_value(x, kc->m, params)), params.beta(kc->m));
        } else if (const auto* kk = std::get_if<KappaConstant>(&c)) {
            acc += kk->factor *
                   kappa(Rational(0), params.beta(kk->a) - params.beta(kk->b) - Rational(1));
        } else {
            acc += std::get<ConstantCoefficient>(c).value;
        }
    }
    return acc;
}

namespace {

DifferenceOperator build_racah_impl(int j, int offset, const ParameterSet& params,
                                    bool substituted) {
    if (j < 0 || offset < 0) throw RangeError("build_racah_operator: negative index");
    if (offset + j + 1 > params.n() - 1)
        throw RangeError("build_racah_operator: offset " + std::to_string(offset) + " + j " +
                         std::to_string(j) + " + 1 exceeds n-1");
    DifferenceOperator op{params, {}, {}};
    if (j == 0) return op;  // L_0 = 0

    std::vector<int> nu(static_cast<size_t>(j), -1);
    while (true) {
        bool all_zero = true;
        for (int v : nu)
            if (v != 0) all_zero = false;
        if (!all_zero) {
            ShiftTerm term;
            term.nu.assign(static_cast<size_t>(params.rank()), 0);
            for (int t = 1; t <= j; ++t)
                term.nu[static_cast<size_t>(offset + t - 1)] = nu[static_cast<size_t>(t - 1)];
            GNuCoefficient g;
            g.j = j;
            g.offset = offset;
            g.nu = nu;
            g.substituted = substituted;
            term.coeff.push_back(g);
            op.terms.push_back(std::move(term));
        }
        // Odometer: rightmost digit fastest over -1, 0, +1.
        int pos = j - 1;
        while (pos >= 0 && nu[static_cast<size_t>(pos)] == 1) {
            nu[static_cast<size_t>(pos)] = -1;
            --pos;
        }
        if (pos < 0) break;
        ++nu[static_cast<size_t>(pos)];
    }
    return op;
}

} // namespace

DifferenceOperator build_racah_operator(int j, int offset, const ParameterSet& params) {
    return build_racah_impl(j, offset, params, false);
}

DifferenceOperator build_racah_operator_substituted(int j, int offset,
                                                    const ParameterSet& params) {
    return build_racah_impl(j, offset, params, true);
}

DifferenceOperator zero_operator(const ParameterSet& params) {
    return DifferenceOperator{params, {}, {}};
}

namespace {

Coefficient sigma_atom(const Coefficient& c, const ParameterSet& params) {
    const int n = params.n();
    if (const auto* g = std::get_if<GNuCoefficient>(&c)) {
        GNuCoefficient out = *g;
        out.offset += 1;
        if (out.offset + out.j + 1 > n - 1)
            throw RangeError("sigma_shift: operator window leaves the index range");
        return out;
    }
    if (const auto* kc = std::get_if<KappaCoordinate>(&c)) {
        KappaCoordinate out = *kc;
        out.m += 1;
        if (out.m > n - 1) throw RangeError("sigma_shift: coordinate index leaves the range");
        return out;
    }
    if (const auto* kk = std::get_if<KappaConstant>(&c)) {
        KappaConstant out = *kk;
        out.a += 1;
        out.b += 1;
        if (out.a > n - 1 || out.b > n - 1)
            throw RangeError("sigma_shift: parameter index leaves the range");
        return out;
    }
    return c;
}

} // namespace

DifferenceOperator sigma_shift(const DifferenceOperator& op) {
    DifferenceOperator out{op.params, {}, {}};
    for (const auto& term : op.terms) {
        ShiftTerm t;
        t.nu.assign(term.nu.size(), 0);
        for (size_t i = 0; i + 1 < term.nu.size(); ++i) {
            if (term.nu[i] != 0) t.nu[i + 1] = term.nu[i];
        }
        if (!term.nu.empty() && term.nu.back() != 0)
            throw RangeError("sigma_shift: shift index leaves the coordinate range");
        for (const auto& c : term.coeff) t.coeff.push_back(sigma_atom(c, op.params));
        out.terms.push_back(std::move(t));
    }
    for (const auto& c : op.identity_part) out.identity_part.push_back(sigma_atom(c, op.params));
    return out;
}

GridFunction apply(const DifferenceOperator& op, const GridFunction& f) {
    if (!f.grid) throw DimensionError("apply: function is not bound to a grid");
    const SimplexGrid& grid = *f.grid;
    if (grid.params() != op.params)
        throw DimensionError("apply: operator and function live on different grids");
    GridFunction out(grid);
    for (size_t r = 0; r < grid.size(); ++r) {
        const GridPoint& x = grid.point(r);
        Rational acc = evaluate(op.identity_part, x, op.params) * f[r];
        for (const auto& term : op.terms) {
            Rational g = evaluate(term.coeff, x, op.params);
            GridPoint y = x;
            for (size_t i = 0; i < y.size(); ++i) y[i] += term.nu[i];
            auto idx = grid.index_of(y);
            if (!idx) {
                if (!g.is_zero())
                    throw BoundaryError("apply: shift from " + point_label(x) +
                                        " leaves the simplex with nonzero coefficient " +
                                        g.str());
                continue;
            }
            acc += g * (f[*idx] - f[r]);
        }
        out[r] = acc;
    }
    return out;
}

} // namespace racah
