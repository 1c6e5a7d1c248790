#include "racah/orthogonality.hpp"

#include <cmath>
#include <sstream>

#include "racah/parallel.hpp"
#include "racah/scalar.hpp"

namespace racah {

void WeightValue::multiply_gamma(const Rational& arg, int power) {
    if (power == 0) return;
    if (arg.is_integer()) {
        if (arg.sign() <= 0)
            throw PoleError("WeightValue: Gamma at nonpositive integer " + arg.str());
        Rational f = factorial(arg.numerator().get_si() - 1);
        for (int i = 0; i < std::abs(power); ++i)
            power > 0 ? rational_part *= f : rational_part /= f;
        return;
    }
    // Split arg = base + t with base in (0,1): Gamma(arg) = (base)_t Gamma(base),
    // and for t < 0, Gamma(arg) = Gamma(base) / (arg)_{-t}.
    mpz_class fl = arg.floor();
    Rational base = arg - Rational(fl);
    long t = fl.get_si();
    Rational shift = t >= 0 ? pochhammer(base, t) : Rational(1) / pochhammer(arg, -t);
    for (int i = 0; i < std::abs(power); ++i)
        power > 0 ? rational_part *= shift : rational_part /= shift;
    auto it = gamma_exponents.find(base);
    if (it == gamma_exponents.end()) {
        gamma_exponents.emplace(base, power);
    } else {
        it->second += power;
        if (it->second == 0) gamma_exponents.erase(it);
    }
}

WeightValue& WeightValue::operator*=(const WeightValue& o) {
    rational_part *= o.rational_part;
    for (const auto& [base, e] : o.gamma_exponents) {
        auto it = gamma_exponents.find(base);
        if (it == gamma_exponents.end()) {
            gamma_exponents.emplace(base, e);
        } else {
            it->second += e;
            if (it->second == 0) gamma_exponents.erase(it);
        }
    }
    return *this;
}

double WeightValue::log_value() const {
    if (rational_part.sign() <= 0)
        throw SignError("WeightValue: rational part " + rational_part.str() +
                        " is not positive");
    double lg = rational_part.log_abs();
    for (const auto& [base, e] : gamma_exponents)
        lg += static_cast<double>(e) * log_gamma(base.to_double());
    return lg;
}

WeightValue weight_omega(int p, const GridPoint& x, const ParameterSet& params) {
    if (p < 1 || p + 1 > params.n() - 1) throw RangeError("weight_omega: p out of range");
    WeightValue w;
    for (int j = 0; j <= p; ++j) {
        const Rational bj = params.beta(j);
        const Rational bj1 = params.beta(j + 1);
        const long xj = coord_value(x, j, params);
        const long xj1 = coord_value(x, j + 1, params);
        if (xj1 < xj) throw RangeError("weight_omega: point outside the simplex");
        w.multiply_gamma(bj1 + Rational(xj1 + xj));
        w.multiply_gamma(bj1 - bj + Rational(xj1 - xj));
        w.divide_gamma(bj + Rational(xj1 + 1 + xj));
        w.divide_factorial(xj1 - xj);
    }
    for (int j = 1; j <= p; ++j)
        w.multiply_rational(params.beta(j) + Rational(2 * coord_value(x, j, params)));
    return w;
}

WeightValue weight_mu(int p, const MultiIndex& k, const ParameterSet& params) {
    if (p < 1 || p + 1 > params.n() - 1) throw RangeError("weight_mu: p out of range");
    if (static_cast<int>(k.k.size()) < p) throw DimensionError("weight_mu: k too short");
    const Rational b0 = params.beta(0);
    WeightValue w;
    for (int j = 1; j <= p; ++j) {
        const Rational bj = params.beta(j);
        const Rational bj1 = params.beta(j + 1);
        const long K = k.abs_up_to(j - 1);
        const long kj = k.k[static_cast<size_t>(j - 1)];
        w.multiply_gamma(Rational(2 * K + kj) + bj1 - b0 - Rational(1));
        w.multiply_rational(Rational(2 * k.abs_up_to(j)) + bj1 - b0 - Rational(1));
        w.divide_gamma(Rational(kj) + bj1 - bj);
        w.divide_gamma(Rational(2 * K + kj) + bj - b0);
        w.divide_factorial(kj);
    }
    const long Kp = k.abs_up_to(p);
    const long N = params.N();
    if (Kp > N) throw RangeError("weight_mu: |k|_p exceeds N");
    const Rational bp1 = params.beta(p + 1);
    w.multiply_gamma(b0 + Rational(N + 1 - Kp));
    w.multiply_factorial(N - Kp);
    w.divide_gamma(bp1 - b0 + Rational(N + Kp));
    w.divide_gamma(bp1 + Rational(N + Kp));
    return w;
}

WeightValue weight_rho(long ell, const ParameterSet& params) {
    const Rational b0 = params.beta(0), b1 = params.beta(1), b2 = params.beta(2);
    const long N = params.N();
    if (ell < 0 || ell > N) throw RangeError("weight_rho: ell out of range");
    WeightValue w;
    w.multiply_gamma(b1 + Rational(ell));
    w.multiply_gamma(b1 - b0 + Rational(ell));
    w.divide_gamma(b0 + Rational(1 + ell));
    w.divide_factorial(ell);
    w.multiply_rational(b1 + Rational(2 * ell));
    w.multiply_gamma(b2 + Rational(N + ell));
    w.multiply_gamma(b2 - b1 + Rational(N - ell));
    w.divide_gamma(b1 + Rational(N + 1 + ell));
    w.divide_factorial(N - ell);
    return w;
}

WeightValue weight_lambda_inv(long k, const ParameterSet& params) {
    const Rational b0 = params.beta(0), b1 = params.beta(1), b2 = params.beta(2);
    const long N = params.N();
    if (k < 0 || k > N) throw RangeError("weight_lambda_inv: k out of range");
    WeightValue w;
    w.multiply_gamma(Rational(k) + b2 - b0 - Rational(1));
    w.divide_gamma(Rational(k) + b2 - b1);
    w.divide_gamma(Rational(k) + b1 - b0);
    w.divide_factorial(k);
    w.multiply_rational(Rational(2 * k) + b2 - b0 - Rational(1));
    w.multiply_gamma(b0 + Rational(N + 1 - k));
    w.multiply_factorial(N - k);
    w.divide_gamma(Rational(k) + b2 - b0 + Rational(N));
    w.divide_gamma(b2 + Rational(N + k));
    return w;
}

ConnectionMatrix::ConnectionMatrix(const ParameterSet& params, int threads)
    : grid_(std::make_shared<SimplexGrid>(params)) {
    params.require_generic();
    const size_t d = grid_->size();
    const int p = params.rank();
    poly_.assign(d * d, Rational(0));
    omega_.assign(d, WeightValue::one());
    mu_.assign(d, WeightValue::one());
    float_.assign(d * d, 0.0);

    parallel_for(d, threads, [&](size_t col) {
        omega_[col] = weight_omega(p, grid_->point(col), params);
        if (omega_[col].rational_part.sign() <= 0)
            throw SignError("connection_matrix: omega rational part is not positive at " +
                            point_label(grid_->point(col)));
    });
    parallel_for(d, threads, [&](size_t row) {
        MultiIndex k = grid_->k_point(row);
        mu_[row] = weight_mu(p, k, params);
        if (mu_[row].rational_part.sign() <= 0)
            throw SignError("connection_matrix: mu rational part is not positive at k = " +
                            point_label(grid_->point(row)));
        for (size_t col = 0; col < d; ++col)
            poly_[row * d + col] = racah_multivariate(p, k, grid_->point(col), params);
    });
    parallel_for(d, threads, [&](size_t row) {
        const double log_mu = mu_[row].log_value();
        for (size_t col = 0; col < d; ++col) {
            const Rational& r = poly_[row * d + col];
            if (r.is_zero()) {
                float_[row * d + col] = 0.0;
                continue;
            }
            double mag = std::exp(0.5 * (omega_[col].log_value() + log_mu) + r.log_abs());
            float_[row * d + col] = r.sign() < 0 ? -mag : mag;
        }
    });
}

double ConnectionMatrix::gram_defect() const {
    const size_t d = dim();
    double worst = 0.0;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            double dot = 0.0;
            for (size_t c = 0; c < d; ++c) dot += entry(i, c) * entry(j, c);
            double defect = std::fabs(dot - (i == j ? 1.0 : 0.0));
            if (defect > worst) worst = defect;
        }
    return worst;
}

std::string ConnectionMatrix::to_csv() const {
    std::ostringstream os;
    const size_t d = dim();
    os << "k\\x";
    for (size_t c = 0; c < d; ++c) os << ',' << point_label(grid_->point(c));
    os << '\n';
    char buf[64];
    for (size_t r = 0; r < d; ++r) {
        os << point_label(grid_->k_point(r).k);
        for (size_t c = 0; c < d; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", entry(r, c));
            os << ',' << buf;
        }
        os << '\n';
    }
    return os.str();
}

ConnectionMatrix connection_matrix(const ParameterSet& params, int threads) {
    return ConnectionMatrix(params, threads);
}

Report verify_orthogonality_exact(const ParameterSet& params, int threads) {
    params.require_generic();
    SimplexGrid grid(params);
    const size_t d = grid.size();
    const int p = params.rank();

    // Exact ingredients; the Gamma exponent maps must agree across the
    // family for the constants to factor out of the sums.
    std::vector<WeightValue> omega(d), mu(d);
    std::vector<std::vector<Rational>> R(d, std::vector<Rational>(d));
    parallel_for(d, threads, [&](size_t i) {
        omega[i] = weight_omega(p, grid.point(i), params);
        MultiIndex k = grid.k_point(i);
        mu[i] = weight_mu(p, k, params);
        for (size_t c = 0; c < d; ++c)
            R[i][c] = racah_multivariate(p, k, grid.point(c), params);
    });

    Report report;
    bool omega_uniform = true, mu_uniform = true;
    for (size_t i = 1; i < d; ++i) {
        omega_uniform = omega_uniform && omega[i].same_bases(omega[0]);
        mu_uniform = mu_uniform && mu[i].same_bases(mu[0]);
    }
    report.add("orthogonality-bases", "omega exponent map constant over x", omega_uniform);
    report.add("orthogonality-bases", "mu exponent map constant over k", mu_uniform);

    // (a) Off-diagonal Gram entries vanish exactly.
    struct OffDiag { size_t i, j; };
    std::vector<OffDiag> pairs;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) pairs.push_back({i, j});
    std::vector<char> off_ok(pairs.size(), 0);
    parallel_for(pairs.size(), threads, [&](size_t idx) {
        const auto [i, j] = pairs[idx];
        Rational sum(0);
        for (size_t c = 0; c < d; ++c) {
            if (R[i][c].is_zero() || R[j][c].is_zero()) continue;
            sum += omega[c].rational_part * R[i][c] * R[j][c];
        }
        off_ok[idx] = sum.is_zero() ? 1 : 0;
    });
    size_t bad = 0;
    std::string first_bad;
    for (size_t idx = 0; idx < pairs.size(); ++idx)
        if (!off_ok[idx]) {
            if (!bad)
                first_bad = point_label(grid.k_point(pairs[idx].i).k) + " " +
                            point_label(grid.k_point(pairs[idx].j).k);
            ++bad;
        }
    report.add("orthogonality-offdiag", std::to_string(pairs.size()) + " pairs", bad == 0,
               bad ? "first violation at k,k' = " + first_bad : "");

    // (b) Diagonal constant independent of k.
    std::vector<Rational> diag(d, Rational(0));
    parallel_for(d, threads, [&](size_t i) {
        Rational sum(0);
        for (size_t c = 0; c < d; ++c) {
            if (R[i][c].is_zero()) continue;
            sum += omega[c].rational_part * R[i][c] * R[i][c];
        }
        diag[i] = sum * mu[i].rational_part;
    });
    bool diag_const = true;
    for (size_t i = 1; i < d; ++i) diag_const = diag_const && diag[i] == diag[0];
    report.add("orthogonality-diagonal", "constant across " + std::to_string(d) + " rows",
               diag_const, diag_const ? "value " + diag[0].str() : "row-dependent diagonal");

    // (c) Normalization: diagonal constant times the factored Gamma product.
    WeightValue full = omega[0];
    full *= mu[0];
    bool gamma_cancel = full.gamma_exponents.empty();
    double log_total = diag[0].sign() > 0 ? diag[0].log_abs() : 0.0;
    for (const auto& [base, e] : full.gamma_exponents)
        log_total += static_cast<double>(e) * log_gamma(base.to_double());
    bool normalized = diag[0].sign() > 0 && std::fabs(log_total) <= 1e-9;
    report.add("orthogonality-normalization", "constant * Gamma factor = 1", normalized,
               "log residual " + std::to_string(log_total) +
                   (gamma_cancel ? " (Gamma exponents cancel exactly)" : ""));
    report.sort();
    return report;
}

Report verify_diagonalization(GeneratorTable& table) {
    const ParameterSet& params = table.params();
    const SimplexGrid& grid = *table.grid();
    const size_t d = grid.size();
    Report report;

    // The x-side labelling algebra acts diagonally.
    for (int m = 2; m <= params.n() - 1; ++m) {
        const OperatorMatrix& C = table.interval(1, m);
        bool ok = C.is_diagonal();
        if (ok)
            for (size_t r = 0; r < d && ok; ++r)
                ok = C.at(r, r) ==
                     kappa(Rational(coord_value(grid.point(r), m - 1, params)),
                           params.beta(m - 1));
        report.add("diagonalization-x", LabelSet::interval(1, m).label(), ok,
                   ok ? "" : "not the expected diagonal");
    }

    // The k-side labelling algebra acts on the Racah vectors by kappa.
    std::vector<const OperatorMatrix*> chain;
    for (int m = 1; m <= params.n() - 1; ++m) chain.push_back(&table.interval(2, m + 1));

    std::vector<char> ok_rows(d, 1);
    parallel_for(d, table.threads(), [&](size_t row) {
        MultiIndex k = grid.k_point(row);
        GridFunction v(grid);
        for (size_t c = 0; c < d; ++c)
            v[c] = racah_multivariate(params.rank(), k, grid.point(c), params);
        for (int m = 1; m <= params.n() - 1; ++m) {
            Rational eig = kappa(Rational(k.abs_up_to(m - 1)),
                                 params.beta(m) - params.beta(0) - Rational(1));
            GridFunction lhs = chain[static_cast<size_t>(m - 1)]->matvec(v);
            for (size_t c = 0; c < d; ++c)
                if (lhs[c] != eig * v[c]) {
                    ok_rows[row] = 0;
                    return;
                }
        }
    });
    bool all = true;
    for (char c : ok_rows) all = all && c;
    report.add("diagonalization-k", "eigen-equations for all k, all m", all,
               all ? "" : "residual nonzero");
    report.sort();
    return report;
}

} // namespace racah
