#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "racah/parameters.hpp"
#include "racah/rational.hpp"

namespace racah {

/// A point of the simplex grid: the free coordinates x_1 .. x_{n-2}.
/// x_0 = 0 and x_{n-1} = N are implicit.
using GridPoint = std::vector<int>;

/// A degree multi-index k_1 .. k_{n-2} with |k|_{n-2} <= N. Same shape as a
/// grid point (V_k = V_x), kept as a separate name for readability.
struct MultiIndex {
    std::vector<int> k;

    /// Partial sum |k|_j = k_1 + ... + k_j; |k|_0 = 0.
    long abs_up_to(int j) const {
        long s = 0;
        for (int i = 0; i < j && i < static_cast<int>(k.size()); ++i) s += k[static_cast<size_t>(i)];
        return s;
    }
    long total() const { return abs_up_to(static_cast<int>(k.size())); }
};

/// Coordinate value x_t with the implicit boundary conventions applied:
/// t = 0 gives 0 and t = n-1 gives N.
long coord_value(const GridPoint& x, int t, const ParameterSet& params);

std::string point_label(const GridPoint& x);

/// Ordered enumeration of V_x = { 0 <= x_1 <= ... <= x_{n-2} <= N } in
/// lexicographic order, with the point <-> row bijection. Immutable after
/// construction.
class SimplexGrid {
public:
    explicit SimplexGrid(ParameterSet params);

    const ParameterSet& params() const { return params_; }
    size_t size() const { return points_.size(); }
    const GridPoint& point(size_t r) const { return points_[r]; }
    const std::vector<GridPoint>& points() const { return points_; }

    bool contains(const GridPoint& x) const;
    /// Row index, or nullopt when x lies outside the simplex.
    std::optional<size_t> index_of(const GridPoint& x) const;

    /// The degree index paired with row r through the bijection
    /// k_j = x_j - x_{j-1} between V_x and V_k = { |k|_{n-2} <= N }.
    /// Row 0 is k = 0.
    MultiIndex k_point(size_t r) const;

    friend bool operator==(const SimplexGrid& a, const SimplexGrid& b) {
        return a.params_ == b.params_;
    }
    friend bool operator!=(const SimplexGrid& a, const SimplexGrid& b) { return !(a == b); }

private:
    ParameterSet params_;
    std::vector<GridPoint> points_;
    std::map<GridPoint, size_t> index_;
};

/// Exact-valued function on a simplex grid, stored by row index.
struct GridFunction {
    const SimplexGrid* grid = nullptr;
    std::vector<Rational> values;

    GridFunction() = default;
    explicit GridFunction(const SimplexGrid& g) : grid(&g), values(g.size(), Rational(0)) {}

    Rational& operator[](size_t r) { return values[r]; }
    const Rational& operator[](size_t r) const { return values[r]; }

    friend bool operator==(const GridFunction& a, const GridFunction& b) {
        return a.values == b.values;
    }
};

} // namespace racah
