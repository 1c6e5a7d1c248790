#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "racah/matrix.hpp"
#include "racah/operators.hpp"
#include "racah/scalar.hpp"
#include "racah/suites.hpp"

using namespace racah;

namespace {

ParameterSet params_n3(int N = 5) {
    return ParameterSet(3, N, {Rational(1, 3), Rational(5, 3), Rational(10, 3)});
}

ParameterSet params_n4(int N = 4) {
    return ParameterSet(4, N,
                        {Rational(1, 3), Rational(5, 3), Rational(10, 3), Rational(14, 3)});
}

ParameterSet params_n5(int N = 3) {
    return ParameterSet(5, N,
                        {Rational(1, 3), Rational(5, 3), Rational(10, 3), Rational(14, 3),
                         Rational(19, 3)});
}

GridFunction random_function(const SimplexGrid& grid, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 7);
    GridFunction f(grid);
    for (size_t r = 0; r < grid.size(); ++r) f[r] = Rational(num(rng), den(rng));
    return f;
}

} // namespace

TEST_CASE("simplex grid enumeration") {
    ParameterSet p = params_n4(4);
    SimplexGrid grid(p);
    CHECK(grid.size() == 15);  // C(4+2, 2)
    // Lexicographic and weakly increasing.
    for (size_t r = 0; r + 1 < grid.size(); ++r) CHECK(grid.point(r) < grid.point(r + 1));
    for (const auto& x : grid.points()) {
        CHECK(x[0] >= 0);
        CHECK(x[0] <= x[1]);
        CHECK(x[1] <= p.N());
        CHECK(grid.point(*grid.index_of(x)) == x);
    }
    CHECK_FALSE(grid.index_of(GridPoint{2, 1}).has_value());
    CHECK_FALSE(grid.index_of(GridPoint{0, 5}).has_value());

    SimplexGrid g5(params_n5(3));
    CHECK(g5.size() == 20);  // C(3+3, 3)
}

TEST_CASE("b factors") {
    ParameterSet p(3, 4, {Rational(1, 3), Rational(1, 2), Rational(10, 3)});
    GridPoint x{1};
    // b^1 at x = 1, beta_1 = 1/2.
    CHECK(b_factor(1, 1, x, p) == Rational(35, 4));
    // b^{-1} = I(b^1): substitute x -> -x - beta into (2x+beta+1)(2x+beta).
    Rational sub = (Rational(2) * (Rational(-1) - Rational(1, 2)) + Rational(1, 2) + Rational(1)) *
                   (Rational(2) * (Rational(-1) - Rational(1, 2)) + Rational(1, 2));
    CHECK(b_factor(1, -1, x, p) == sub);
    // b^0 vanishes when 2x + beta = 1.
    ParameterSet q(3, 4, {Rational(1, 3), Rational(1), Rational(10, 3)});
    CHECK(b_factor(1, 0, GridPoint{0}, q) == Rational(0));
}

TEST_CASE("B factors") {
    // Hand value of B_0^{0,0} at x0=0, x1=2, beta0=1/3, beta1=5/3.
    ParameterSet p = params_n3();
    CHECK(B_factor(0, 0, 0, GridPoint{2}, p) == Rational(70, 9));
    // B^{1,0} vanishes when x_{i+1} = x_i.
    ParameterSet p4 = params_n4(4);
    CHECK(B_factor(1, 1, 0, GridPoint{2, 2}, p4) == Rational(0));
    // B^{1,-1} vanishes when x_{i+1} = x_i and when x_{i+1} = x_i + 1.
    CHECK(B_factor(1, 1, -1, GridPoint{2, 2}, p4) == Rational(0));
    CHECK(B_factor(1, 1, -1, GridPoint{2, 3}, p4) == Rational(0));
}

TEST_CASE("racah operator construction") {
    ParameterSet p4 = params_n4(4);
    CHECK(build_racah_operator(0, 0, p4).terms.empty());
    CHECK(build_racah_operator(1, 0, p4).terms.size() == 2);
    CHECK(build_racah_operator(2, 0, p4).terms.size() == 8);
    CHECK_THROWS_AS(build_racah_operator(3, 1, p4), RangeError);

    // Odometer order: (-1,-1), (-1,0), (-1,1), (0,-1), (0,1), (1,-1), (1,0), (1,1).
    auto op = build_racah_operator(2, 0, p4);
    std::vector<std::vector<int>> expect = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                            {0, 1},   {1, -1}, {1, 0},  {1, 1}};
    for (size_t i = 0; i < expect.size(); ++i) CHECK(op.terms[i].nu == expect[i]);
}

TEST_CASE("rank-one operator matches the closed three-point form") {
    ParameterSet p = params_n3(5);
    auto grid = std::make_shared<SimplexGrid>(p);
    OperatorMatrix L1 = realize(build_racah_operator(1, 0, p), grid);
    for (size_t r = 0; r < grid->size(); ++r) {
        long x = grid->point(r)[0];
        Rational up = rank_one_up_coefficient(x, p);
        Rational down = rank_one_down_coefficient(x, p);
        if (x < p.N())
            CHECK(L1.at(r, r + 1) == up);
        else
            CHECK(up == Rational(0));
        if (x > 0)
            CHECK(L1.at(r, r - 1) == down);
        else
            CHECK(down == Rational(0));
        CHECK(L1.at(r, r) == -(up + down));
    }
}

TEST_CASE("apply: zero operator and constants") {
    ParameterSet p = params_n4(3);
    SimplexGrid grid(p);
    std::mt19937_64 rng(5);
    GridFunction f = random_function(grid, rng);

    GridFunction zf = apply(zero_operator(p), f);
    for (size_t r = 0; r < grid.size(); ++r) CHECK(zf[r].is_zero());

    // A pure sum of G_nu (E_nu - 1) terms kills constants.
    GridFunction ones(grid);
    for (size_t r = 0; r < grid.size(); ++r) ones[r] = Rational(7, 3);
    for (int j : {1, 2}) {
        GridFunction out = apply(build_racah_operator(j, 0, p), ones);
        for (size_t r = 0; r < grid.size(); ++r) CHECK(out[r].is_zero());
    }
}

TEST_CASE("boundary shifts carry exactly vanishing coefficients") {
    ParameterSet p = params_n4(3);
    SimplexGrid grid(p);
    for (int j : {1, 2}) {
        auto op = build_racah_operator(j, 0, p);
        for (const auto& term : op.terms)
            for (const auto& x : grid.points()) {
                GridPoint y = x;
                for (size_t i = 0; i < y.size(); ++i) y[i] += term.nu[i];
                if (!grid.contains(y))
                    CHECK(evaluate(term.coeff, x, p) == Rational(0));
            }
    }
    // offset window: L_1 at offset 1 moves x_2 with x_1 as a live coordinate.
    auto op = build_racah_operator(1, 1, p);
    for (const auto& term : op.terms)
        for (const auto& x : grid.points()) {
            GridPoint y = x;
            for (size_t i = 0; i < y.size(); ++i) y[i] += term.nu[i];
            if (!grid.contains(y)) CHECK(evaluate(term.coeff, x, p) == Rational(0));
        }
}

TEST_CASE("nonzero coefficients on boundary-leaving shifts are hard errors") {
    ParameterSet p = params_n4(2);
    auto grid = std::make_shared<SimplexGrid>(p);
    // A handcrafted term that shifts the top coordinate up with a constant
    // coefficient: leaves the simplex at x_2 = N without vanishing.
    DifferenceOperator bogus = zero_operator(p);
    ShiftTerm term;
    term.nu = {0, 1};
    term.coeff.push_back(ConstantCoefficient{Rational(1)});
    bogus.terms.push_back(term);
    GridFunction f(*grid);
    for (size_t r = 0; r < grid->size(); ++r) f[r] = Rational(1 + static_cast<long>(r));
    CHECK_THROWS_AS(apply(bogus, f), BoundaryError);
    CHECK_THROWS_AS(realize(bogus, grid), BoundaryError);
}

TEST_CASE("realize agrees with apply on random functions") {
    ParameterSet p = params_n4(4);
    auto grid = std::make_shared<SimplexGrid>(p);
    auto op = build_racah_operator(2, 0, p);
    OperatorMatrix M = realize(op, grid);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        GridFunction f = random_function(*grid, rng);
        CHECK(M.matvec(f) == apply(op, f));
    }
}

TEST_CASE("realize of multiplication operators is diagonal") {
    ParameterSet p = params_n4(4);
    auto grid = std::make_shared<SimplexGrid>(p);
    DifferenceOperator mult = zero_operator(p);
    mult.identity_part.push_back(KappaCoordinate{1, Rational(1)});
    OperatorMatrix M = realize(mult, grid);
    CHECK(M.is_diagonal());
    for (size_t r = 0; r < grid->size(); ++r)
        CHECK(M.at(r, r) == kappa(Rational(grid->point(r)[0]), p.beta(1)));
    OperatorMatrix Z = realize(zero_operator(p), grid);
    CHECK(Z.is_zero());
}

TEST_CASE("matrix product represents operator composition") {
    ParameterSet p = params_n4(4);
    auto grid = std::make_shared<SimplexGrid>(p);
    auto op1 = build_racah_operator(1, 0, p);
    auto op2 = build_racah_operator(2, 0, p);
    OperatorMatrix M1 = realize(op1, grid);
    OperatorMatrix M2 = realize(op2, grid);
    OperatorMatrix M12 = compose(M1, M2);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        GridFunction f = random_function(*grid, rng);
        CHECK(M12.matvec(f) == apply(op1, apply(op2, f)));
    }
    // Diagonal multiplication operators commute.
    std::vector<Rational> d1, d2;
    for (const auto& x : grid->points()) {
        d1.push_back(kappa(Rational(x[0]), p.beta(1)));
        d2.push_back(kappa(Rational(x[1]), p.beta(2)));
    }
    OperatorMatrix D1 = OperatorMatrix::diagonal(grid, d1);
    OperatorMatrix D2 = OperatorMatrix::diagonal(grid, d2);
    CHECK(commutator(D1, D2).is_zero());
    CHECK(commutator(M1, M1).is_zero());
}

TEST_CASE("racah operators commute pairwise") {
    ParameterSet p = params_n4(4);
    auto grid = std::make_shared<SimplexGrid>(p);
    OperatorMatrix L1 = realize(build_racah_operator(1, 0, p), grid);
    OperatorMatrix L2 = realize(build_racah_operator(2, 0, p), grid);
    CHECK(commutator(L1, L2).is_zero());
}

TEST_CASE("sigma shift relabels kappa and operator windows") {
    ParameterSet p = params_n4(4);
    auto grid = std::make_shared<SimplexGrid>(p);

    DifferenceOperator mult = zero_operator(p);
    mult.identity_part.push_back(KappaCoordinate{1, Rational(1)});
    OperatorMatrix shifted = realize(sigma_shift(mult), grid);
    CHECK(shifted.is_diagonal());
    for (size_t r = 0; r < grid->size(); ++r)
        CHECK(shifted.at(r, r) == kappa(Rational(grid->point(r)[1]), p.beta(2)));

    // sigma(L_1 at offset 0) = L_1 at offset 1.
    OperatorMatrix a = realize(sigma_shift(build_racah_operator(1, 0, p)), grid);
    OperatorMatrix b = realize(build_racah_operator(1, 1, p), grid);
    CHECK(a == b);
    // Repeated shifts leave the range eventually.
    CHECK_THROWS_AS(sigma_shift(sigma_shift(build_racah_operator(1, 1, p))), RangeError);
}

TEST_CASE("shift covariance: offset construction equals the substitution route") {
    ParameterSet p = params_n5(2);
    auto grid = std::make_shared<SimplexGrid>(p);
    for (auto [j, offset] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
        OperatorMatrix direct = realize(build_racah_operator(j, offset, p), grid);
        OperatorMatrix substituted =
            realize(build_racah_operator_substituted(j, offset, p), grid);
        CHECK(direct == substituted);
    }
}

TEST_CASE("characteristic polynomial and deflation") {
    ParameterSet p = params_n3(2);
    auto grid = std::make_shared<SimplexGrid>(p);
    std::vector<Rational> d = {Rational(1), Rational(2), Rational(2)};
    OperatorMatrix D = OperatorMatrix::diagonal(grid, d);
    auto poly = characteristic_polynomial(D);
    // (t-1)(t-2)^2 = t^3 - 5 t^2 + 8 t - 4.
    CHECK(poly == std::vector<Rational>{Rational(-4), Rational(8), Rational(-5), Rational(1)});
    CHECK(deflate_root(poly, Rational(2)) == Rational(0));
    CHECK(deflate_root(poly, Rational(2)) == Rational(0));
    CHECK(deflate_root(poly, Rational(1)) == Rational(0));
    CHECK(poly == std::vector<Rational>{Rational(1)});
    auto poly2 = characteristic_polynomial(D);
    CHECK(deflate_root(poly2, Rational(7)) != Rational(0));
}

TEST_CASE("matrix json serialization") {
    ParameterSet p = params_n3(1);
    auto grid = std::make_shared<SimplexGrid>(p);
    OperatorMatrix M(grid);
    M.at(0, 0) = Rational(1, 3);
    M.at(0, 1) = Rational(-2);
    M.at(1, 1) = Rational(5, 7);
    CHECK(M.to_json() ==
          "{\"grid\": {\"n\": 3, \"N\": 1, \"beta\": [\"1/3\", \"5/3\", \"10/3\"]},"
          "\"rows\": [[[0, \"1/3\"], [1, \"-2\"]],[[1, \"5/7\"]]]}");
    // Mismatched grids are rejected.
    auto grid2 = std::make_shared<SimplexGrid>(params_n3(2));
    OperatorMatrix other(grid2);
    CHECK_THROWS_AS(M += other, DimensionError);
    CHECK_THROWS_AS(compose(M, other), DimensionError);
}

TEST_CASE("realize is independent of the worker count") {
    ParameterSet p = params_n4(4);
    auto grid = std::make_shared<SimplexGrid>(p);
    auto op = build_racah_operator(2, 0, p);
    OperatorMatrix m1 = realize(op, grid, 1);
    OperatorMatrix m4 = realize(op, grid, 4);
    CHECK(m1 == m4);
    CHECK(compose(m1, m1, 1) == compose(m1, m1, 3));
}
