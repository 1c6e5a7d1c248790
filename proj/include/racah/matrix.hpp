#pragma once

#include <memory>
#include <string>
#include <vector>

#include "racah/operators.hpp"

namespace racah {

/// Exact matrix realization of an operator on a simplex grid. Dense storage;
/// desk-scale grids stay within a few thousand rows, and dense exact
/// arithmetic is the simplest to audit. Rows and columns are indexed by the
/// grid's point enumeration.
class OperatorMatrix {
public:
    OperatorMatrix(std::shared_ptr<const SimplexGrid> grid, Rational fill = Rational(0));

    static OperatorMatrix identity(std::shared_ptr<const SimplexGrid> grid);
    /// Diagonal matrix with entries f(point).
    static OperatorMatrix diagonal(std::shared_ptr<const SimplexGrid> grid,
                                   const std::vector<Rational>& diag);
    static OperatorMatrix scalar(std::shared_ptr<const SimplexGrid> grid, const Rational& c);

    size_t dim() const { return dim_; }
    const SimplexGrid& grid() const { return *grid_; }
    std::shared_ptr<const SimplexGrid> grid_ptr() const { return grid_; }

    Rational& at(size_t r, size_t c) { return data_[r * dim_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * dim_ + c]; }

    bool is_zero() const;
    bool is_diagonal() const;
    /// Nonnull when the matrix is an exact scalar multiple of the identity.
    std::unique_ptr<Rational> as_scalar() const;

    OperatorMatrix& operator+=(const OperatorMatrix& o);
    OperatorMatrix& operator-=(const OperatorMatrix& o);
    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { a += b; return a; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { a -= b; return a; }
    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);
    friend bool operator!=(const OperatorMatrix& a, const OperatorMatrix& b) { return !(a == b); }

    OperatorMatrix scaled(const Rational& c) const;
    GridFunction matvec(const GridFunction& f) const;

    Rational trace() const;

    /// Serializes as {"grid": {...}, "rows": [[[col, "p/q"], ...], ...]} with
    /// rows sorted by index and nonzero entries sorted by column.
    std::string to_json(int indent = -1) const;

private:
    void check_same_grid(const OperatorMatrix& o) const;

    std::shared_ptr<const SimplexGrid> grid_;
    size_t dim_;
    std::vector<Rational> data_;
};

/// Exact matrix product, parallel over row blocks.
OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b, int threads = 1);
OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix scale(const OperatorMatrix& a, const Rational& c);
/// ab - ba.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b, int threads = 1);
/// ab + ba.
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b, int threads = 1);

/// Realize a symbolic operator as an exact matrix. Parallel over rows;
/// results are independent of the worker count.
OperatorMatrix realize(const DifferenceOperator& op, std::shared_ptr<const SimplexGrid> grid,
                       int threads = 1);

/// Coefficients of det(tI - M), monic, ascending order (size dim+1).
/// Faddeev-LeVerrier in exact arithmetic.
std::vector<Rational> characteristic_polynomial(const OperatorMatrix& m, int threads = 1);

/// Divides poly (ascending, monic leading term assumed nonzero) by (t - root)
/// in place. Returns the remainder; the quotient replaces the input.
Rational deflate_root(std::vector<Rational>& poly, const Rational& root);

} // namespace racah
