#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "racah/algebra.hpp"
#include "racah/suites.hpp"

using namespace racah;

namespace {

ParameterSet params_n3(int N = 5) {
    return ParameterSet(3, N, {Rational(1, 3), Rational(5, 3), Rational(10, 3)});
}

ParameterSet params_n4(int N = 3) {
    return ParameterSet(4, N,
                        {Rational(1, 3), Rational(5, 3), Rational(10, 3), Rational(14, 3)});
}

ParameterSet params_n5(int N = 3) {
    return ParameterSet(5, N,
                        {Rational(1, 3), Rational(5, 3), Rational(10, 3), Rational(14, 3),
                         Rational(19, 3)});
}

RunConfig config_for(const ParameterSet& p) {
    RunConfig cfg;
    cfg.n = p.n();
    cfg.N = p.N();
    cfg.beta = p.betas();
    cfg.threads = 2;
    return cfg;
}

} // namespace

TEST_CASE("label sets") {
    CHECK(LabelSet({3, 1, 2}).kind() == LabelSet::Kind::Interval);
    CHECK(LabelSet({2}).kind() == LabelSet::Kind::Singleton);
    CHECK(LabelSet({1, 3}).kind() == LabelSet::Kind::General);
    CHECK(LabelSet({1, 3}).label() == "C{1,3}");
    CHECK(LabelSet::interval(2, 4).members() == std::vector<int>{2, 3, 4});
    CHECK(LabelSet({1, 2}).disjoint(LabelSet({3, 4})));
    CHECK(LabelSet({1, 2, 3}).contains(LabelSet({2})));
    CHECK(all_label_sets(4).size() == 15);
    CHECK_THROWS_AS(LabelSet(std::vector<int>{}), RangeError);
}

TEST_CASE("central generators are the expected scalars") {
    ParameterSet p = params_n3(4);
    GeneratorTable table(p);
    // C_1 = kappa(0, beta_0) Id through the diagonal OperatorOne route.
    auto s1 = table.interval(1, 1).as_scalar();
    REQUIRE(s1);
    CHECK(*s1 == kappa(Rational(0), p.beta(0)));
    // C_{j+1} = kappa(0, beta_j - beta_{j-1} - 1) Id through the L_0 route.
    for (int j = 1; j <= 2; ++j) {
        auto s = table.interval(j + 1, j + 1).as_scalar();
        REQUIRE(s);
        CHECK(*s == kappa(Rational(0), p.beta(j) - p.beta(j - 1) - Rational(1)));
    }
    // C_{[3]} = kappa(x_2, beta_2) = kappa(N, beta_2) Id.
    auto sfull = table.interval(1, 3).as_scalar();
    REQUIRE(sfull);
    CHECK(*sfull == kappa(Rational(p.N()), p.beta(2)));
}

TEST_CASE("pair generators collapse onto intervals") {
    ParameterSet p = params_n3(4);
    GeneratorTable table(p);
    CHECK(table.pair(1, 2) == table.interval(1, 2));
    CHECK(table.pair(2, 3) == table.interval(2, 3));
    // C_13 = C_123 - C_23 - C_12 + C_1 + C_2 + C_3 (Lind rearranged).
    OperatorMatrix expect = table.interval(1, 3);
    expect -= table.interval(2, 3);
    expect -= table.interval(1, 2);
    expect += table.interval(1, 1);
    expect += table.interval(2, 2);
    expect += table.interval(3, 3);
    CHECK(table.pair(1, 3) == expect);
}

TEST_CASE("general generators: singleton, full set, cross-checked pair") {
    ParameterSet p = params_n4(2);
    GeneratorTable table(p);
    CHECK(table.general(LabelSet({2})) == table.interval(2, 2));
    // A = [n] at n=3-style collapse: interval assertion runs inside general().
    CHECK(table.general(LabelSet({1, 2, 3, 4})) == table.interval(1, 4));
    CHECK(table.general(LabelSet({1, 3})) == table.pair(1, 3));
}

TEST_CASE("C34 for n=4 is the offset rank-one operator") {
    ParameterSet p = params_n4(3);
    GeneratorTable table(p);
    DifferenceOperator direct = build_racah_operator(1, 1, p);
    for (auto& term : direct.terms)
        for (auto& c : term.coeff) std::get<GNuCoefficient>(c).factor = Rational(-1);
    direct.identity_part.push_back(KappaConstant{3, 1, Rational(1)});
    CHECK(realize(direct, table.grid()) == table.interval(3, 4));
    // and equals sigma applied to the symbolic C_23.
    CHECK(realize(sigma_shift(table.symbolic_interval(2, 3)), table.grid()) ==
          table.interval(3, 4));
}

TEST_CASE("commutation sweep at n=4") {
    ParameterSet p = params_n4(2);
    GeneratorTable table(p, 2);
    Report report = verify_commutation(table);
    CHECK(report.all_pass());
    // Qualifying pairs only; every relation is named.
    CHECK(report.relations().size() > 50);
    for (const auto& r : report.relations()) CHECK(r.name == "commute");
}

TEST_CASE("rank-one relations at n=3 and n=4") {
    {
        GeneratorTable table(params_n3(5), 2);
        Report r = verify_rank_one(table, LabelSet({1}), LabelSet({2}), LabelSet({3}));
        CHECK(r.all_pass());
        CHECK(r.relations().size() == 6);
    }
    {
        GeneratorTable table(params_n4(3), 2);
        CHECK(verify_rank_one(table, LabelSet({1, 2}), LabelSet({3}), LabelSet({4})).all_pass());
        CHECK(verify_rank_one(table, LabelSet({1}), LabelSet({2, 3}), LabelSet({4})).all_pass());
        CHECK(verify_rank_one(table, LabelSet({1}), LabelSet({2}), LabelSet({3, 4})).all_pass());
        GeneratorTable t2(params_n4(3));
        CHECK_THROWS_AS(verify_rank_one(t2, LabelSet({1, 2}), LabelSet({2}), LabelSet({3})),
                        ConfigError);
    }
}

TEST_CASE("rank-one partition families") {
    auto few = rank_one_partitions(4, false);
    CHECK(few.size() == 5);  // {1}{2}{3}, {2}{3}{4}, and three splits of [1..4]
    auto all = rank_one_partitions(4, true);
    CHECK(all.size() > few.size());
    for (const auto& [K, L, M] : all) {
        CHECK(K.disjoint(L));
        CHECK(L.disjoint(M));
        CHECK(K.disjoint(M));
    }
}

TEST_CASE("classical presentation at n=3, N=4") {
    GeneratorTable table(params_n3(4), 2);
    Report r = verify_classical_presentation(table, LabelSet({1, 2}), LabelSet({2, 3}));
    CHECK(r.all_pass());
    CHECK_THROWS_AS(verify_classical_presentation(table, LabelSet({1, 2}), LabelSet({1, 2})),
                    ConfigError);
    GeneratorTable t4(params_n4(2));
    CHECK_THROWS_AS(verify_classical_presentation(t4, LabelSet({1, 2}), LabelSet({2, 3})),
                    ConfigError);
}

TEST_CASE("expected spectra account for the full dimension") {
    for (const ParameterSet& p : {params_n4(3), params_n5(2)}) {
        SimplexGrid grid(p);
        for (int a = 1; a <= p.n(); ++a)
            for (int q = a; q <= p.n(); ++q) {
                long total = 0;
                for (const auto& [eig, mult] : expected_spectrum(p, a, q)) total += mult;
                CHECK(total == static_cast<long>(grid.size()));
            }
    }
}

TEST_CASE("spectrum verification routes") {
    GeneratorTable table(params_n4(3), 2);
    // Diagonal route.
    CHECK(verify_spectrum(table, 1, 2).all_pass());
    CHECK(verify_spectrum(table, 1, 3).all_pass());
    // Eigenvector route on the distinguished chain.
    CHECK(verify_spectrum(table, 2, 3).all_pass());
    CHECK(verify_spectrum(table, 2, 4).all_pass());
    // Forced characteristic polynomial.
    CHECK(verify_spectrum(table, 2, 4, SpectrumMode::CharPoly).all_pass());
    // sigma-shifted interval via char poly.
    CHECK(verify_spectrum(table, 3, 4).all_pass());

    // Lemma-spectra example C_{[3..5]} at n=5.
    GeneratorTable t5(params_n5(3), 2);
    CHECK(verify_spectrum(t5, 3, 5).all_pass());
}

TEST_CASE("suite driver on a small n=3 configuration") {
    RunConfig cfg = config_for(params_n3(3));
    VerificationRun run(cfg);
    Report all = run.run();
    CHECK(all.all_pass());
    // classical and specialization suites are applicable at n=3.
    bool saw_classical = false, saw_special = false;
    for (const auto& r : all.relations()) {
        if (r.name.rfind("classical", 0) == 0) saw_classical = true;
        if (r.name.rfind("specialization", 0) == 0) saw_special = true;
    }
    CHECK(saw_classical);
    CHECK(saw_special);
}

TEST_CASE("suite driver at n=4 covers sigma and lind") {
    RunConfig cfg = config_for(params_n4(2));
    cfg.suites = {"lind", "sigma", "bispectral"};
    VerificationRun run(cfg);
    Report report = run.run();
    CHECK(report.all_pass());
    size_t sigma_rel = 0;
    for (const auto& r : report.relations())
        if (r.name.rfind("sigma", 0) == 0) ++sigma_rel;
    CHECK(sigma_rel >= 4);  // C34, C234 shifts plus substitution routes
}

TEST_CASE("maximum desk-scale rank: n=6 smoke checks") {
    ParameterSet p(6, 2,
                   {Rational(1, 3), Rational(5, 3), Rational(10, 3), Rational(14, 3),
                    Rational(19, 3), Rational(23, 3)});
    REQUIRE(p.is_generic());
    RunConfig cfg;
    cfg.n = 6;
    cfg.N = 2;
    cfg.beta = p.betas();
    cfg.threads = 2;
    cfg.suites = {"bispectral"};
    VerificationRun run(cfg);
    CHECK(run.run().all_pass());
    CHECK(verify_rank_one(run.table(), LabelSet({1}), LabelSet({2, 3, 4}), LabelSet({5, 6}))
              .all_pass());
    CHECK(verify_spectrum(run.table(), 2, 5).all_pass());
}

TEST_CASE("report serialization is deterministic") {
    RunConfig cfg = config_for(params_n3(3));
    cfg.suites = {"specialization"};
    VerificationRun run1(cfg);
    std::string a = report_to_json(cfg, run1.run());
    VerificationRun run2(cfg);
    std::string b = report_to_json(cfg, run2.run());
    CHECK(a == b);
    cfg.threads = 5;
    VerificationRun run3(cfg);
    // Thread count must not leak into the report content.
    CHECK(report_to_json(config_for(params_n3(3)), run3.run()) ==
          report_to_json(config_for(params_n3(3)), run1.run()));
}
