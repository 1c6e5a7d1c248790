#include "racah/matrix.hpp"

#include <sstream>

#include "racah/parallel.hpp"

namespace racah {

OperatorMatrix::OperatorMatrix(std::shared_ptr<const SimplexGrid> grid, Rational fill)
    : grid_(std::move(grid)), dim_(grid_->size()), data_(dim_ * dim_, std::move(fill)) {}

OperatorMatrix OperatorMatrix::identity(std::shared_ptr<const SimplexGrid> grid) {
    OperatorMatrix m(std::move(grid));
    for (size_t r = 0; r < m.dim_; ++r) m.at(r, r) = Rational(1);
    return m;
}

OperatorMatrix OperatorMatrix::diagonal(std::shared_ptr<const SimplexGrid> grid,
                                        const std::vector<Rational>& diag) {
    OperatorMatrix m(std::move(grid));
    if (diag.size() != m.dim_) throw DimensionError("diagonal: size mismatch");
    for (size_t r = 0; r < m.dim_; ++r) m.at(r, r) = diag[r];
    return m;
}

OperatorMatrix OperatorMatrix::scalar(std::shared_ptr<const SimplexGrid> grid, const Rational& c) {
    OperatorMatrix m(std::move(grid));
    for (size_t r = 0; r < m.dim_; ++r) m.at(r, r) = c;
    return m;
}

bool OperatorMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

bool OperatorMatrix::is_diagonal() const {
    for (size_t r = 0; r < dim_; ++r)
        for (size_t c = 0; c < dim_; ++c)
            if (r != c && !at(r, c).is_zero()) return false;
    return true;
}

std::unique_ptr<Rational> OperatorMatrix::as_scalar() const {
    if (!is_diagonal()) return nullptr;
    for (size_t r = 1; r < dim_; ++r)
        if (at(r, r) != at(0, 0)) return nullptr;
    return std::make_unique<Rational>(at(0, 0));
}

void OperatorMatrix::check_same_grid(const OperatorMatrix& o) const {
    if (grid_->params() != o.grid_->params())
        throw DimensionError("matrix operation on mismatched grids");
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
    check_same_grid(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
    check_same_grid(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.grid_->params() != b.grid_->params()) return false;
    return a.data_ == b.data_;
}

OperatorMatrix OperatorMatrix::scaled(const Rational& c) const {
    OperatorMatrix m = *this;
    for (auto& v : m.data_) v *= c;
    return m;
}

GridFunction OperatorMatrix::matvec(const GridFunction& f) const {
    if (f.values.size() != dim_) throw DimensionError("matvec: size mismatch");
    GridFunction out(*grid_);
    for (size_t r = 0; r < dim_; ++r) {
        Rational acc(0);
        for (size_t c = 0; c < dim_; ++c) {
            if (!at(r, c).is_zero()) acc += at(r, c) * f[c];
        }
        out[r] = acc;
    }
    return out;
}

Rational OperatorMatrix::trace() const {
    Rational t(0);
    for (size_t r = 0; r < dim_; ++r) t += at(r, r);
    return t;
}

std::string OperatorMatrix::to_json(int indent) const {
    // Hand-rolled writer: rows carry only nonzero entries, keys stay in a
    // fixed order, output is byte-deterministic.
    std::ostringstream os;
    const ParameterSet& p = grid_->params();
    auto nl = [&](int depth) {
        if (indent >= 0) {
            os << '\n';
            for (int i = 0; i < depth * indent; ++i) os << ' ';
        }
    };
    os << '{';
    nl(1);
    os << "\"grid\": {\"n\": " << p.n() << ", \"N\": " << p.N() << ", \"beta\": [";
    for (int i = 0; i < p.n(); ++i) {
        if (i) os << ", ";
        os << '"' << p.beta(i).str() << '"';
    }
    os << "]},";
    nl(1);
    os << "\"rows\": [";
    for (size_t r = 0; r < dim_; ++r) {
        if (r) os << ',';
        nl(2);
        os << '[';
        bool first = true;
        for (size_t c = 0; c < dim_; ++c) {
            if (at(r, c).is_zero()) continue;
            if (!first) os << ", ";
            first = false;
            os << "[" << c << ", \"" << at(r, c).str() << "\"]";
        }
        os << ']';
    }
    nl(1);
    os << ']';
    nl(0);
    os << '}';
    return os.str();
}

OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b, int threads) {
    if (a.grid().params() != b.grid().params())
        throw DimensionError("compose: mismatched grids");
    const size_t d = a.dim();
    OperatorMatrix out(a.grid_ptr());
    parallel_for(d, threads, [&](size_t r) {
        for (size_t k = 0; k < d; ++k) {
            const Rational& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (size_t c = 0; c < d; ++c) {
                const Rational& bkc = b.at(k, c);
                if (!bkc.is_zero()) out.at(r, c) += ark * bkc;
            }
        }
    });
    return out;
}

OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b) { return a + b; }

OperatorMatrix scale(const OperatorMatrix& a, const Rational& c) { return a.scaled(c); }

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b, int threads) {
    return compose(a, b, threads) - compose(b, a, threads);
}

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b, int threads) {
    return compose(a, b, threads) + compose(b, a, threads);
}

OperatorMatrix realize(const DifferenceOperator& op, std::shared_ptr<const SimplexGrid> grid,
                       int threads) {
    if (grid->params() != op.params)
        throw DimensionError("realize: operator and grid parameters differ");
    OperatorMatrix m(grid);
    const SimplexGrid& g = *grid;
    parallel_for(g.size(), threads, [&](size_t r) {
        const GridPoint& x = g.point(r);
        m.at(r, r) += evaluate(op.identity_part, x, op.params);
        for (const auto& term : op.terms) {
            Rational coeff = evaluate(term.coeff, x, op.params);
            GridPoint y = x;
            for (size_t i = 0; i < y.size(); ++i) y[i] += term.nu[i];
            auto idx = g.index_of(y);
            if (!idx) {
                if (!coeff.is_zero())
                    throw BoundaryError("realize: shift from " + point_label(x) +
                                        " leaves the simplex with nonzero coefficient " +
                                        coeff.str());
                continue;
            }
            if (coeff.is_zero()) continue;
            m.at(r, *idx) += coeff;
            m.at(r, r) -= coeff;
        }
    });
    return m;
}

std::vector<Rational> characteristic_polynomial(const OperatorMatrix& m, int threads) {
    // Faddeev-LeVerrier: A_1 = M, b_k = -tr(A_k)/k, A_{k+1} = M(A_k + b_k I);
    // then det(tI - M) = t^d + b_1 t^{d-1} + ... + b_d.
    const size_t d = m.dim();
    std::vector<Rational> coeffs(d + 1, Rational(0));
    coeffs[d] = Rational(1);
    OperatorMatrix B = OperatorMatrix::identity(m.grid_ptr());
    for (size_t k = 1; k <= d; ++k) {
        OperatorMatrix MB = compose(m, B, threads);
        Rational bk = MB.trace() / Rational(-static_cast<long>(k));
        coeffs[d - k] = bk;
        if (k < d) {
            B = MB;
            for (size_t r = 0; r < d; ++r) B.at(r, r) += bk;
        }
    }
    return coeffs;
}

Rational deflate_root(std::vector<Rational>& poly, const Rational& root) {
    if (poly.size() < 2) throw DimensionError("deflate_root: polynomial has no roots");
    std::vector<Rational> quotient(poly.size() - 1, Rational(0));
    Rational carry(0);
    for (size_t i = poly.size(); i-- > 1;) {
        carry = poly[i] + carry * root;
        quotient[i - 1] = carry;
    }
    Rational remainder = poly[0] + carry * root;
    poly = std::move(quotient);
    return remainder;
}

} // namespace racah
