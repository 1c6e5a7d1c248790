#include "racah/grid.hpp"

namespace racah {

long coord_value(const GridPoint& x, int t, const ParameterSet& params) {
    if (t == 0) return 0;
    if (t == params.n() - 1) return params.N();
    if (t < 0 || t > params.n() - 1)
        throw RangeError("coord_value: index " + std::to_string(t) + " out of range");
    return x[static_cast<size_t>(t - 1)];
}

std::string point_label(const GridPoint& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(x[i]);
    }
    s += ')';
    return s;
}

SimplexGrid::SimplexGrid(ParameterSet params) : params_(std::move(params)) {
    const int d = params_.rank();
    const int N = params_.N();
    GridPoint x(static_cast<size_t>(d), 0);
    // Lexicographic odometer over weakly increasing tuples.
    while (true) {
        points_.push_back(x);
        int i = d - 1;
        while (i >= 0) {
            int cap = (i == d - 1) ? N : x[static_cast<size_t>(i + 1)];
            // After incrementing x_i, the tail resets to the smallest
            // admissible values (all equal to the new x_i).
            if (x[static_cast<size_t>(i)] < cap) break;
            --i;
        }
        if (i < 0) break;
        ++x[static_cast<size_t>(i)];
        for (int t = i + 1; t < d; ++t) x[static_cast<size_t>(t)] = x[static_cast<size_t>(i)];
    }
    // The odometer above increments x_i only while it stays <= x_{i+1}, so
    // re-sorting is never needed; record the bijection.
    for (size_t r = 0; r < points_.size(); ++r) index_[points_[r]] = r;
}

bool SimplexGrid::contains(const GridPoint& x) const {
    if (static_cast<int>(x.size()) != params_.rank()) return false;
    int prev = 0;
    for (int v : x) {
        if (v < prev) return false;
        prev = v;
    }
    return prev <= params_.N();
}

std::optional<size_t> SimplexGrid::index_of(const GridPoint& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

MultiIndex SimplexGrid::k_point(size_t r) const {
    const GridPoint& x = points_[r];
    MultiIndex k;
    k.k.resize(x.size());
    int prev = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        k.k[i] = x[i] - prev;
        prev = x[i];
    }
    return k;
}

} // namespace racah
