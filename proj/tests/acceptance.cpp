// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every check is exact unless explicitly marked as a float
// tolerance; runtime bounds are asserted alongside the content.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "racah/matrix.hpp"
#include "racah/orthogonality.hpp"
#include "racah/parallel.hpp"
#include "racah/suites.hpp"

using namespace racah;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
        ok = false;
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > time_limit_s) {
        ok = false;
        detail = "runtime limit exceeded";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::vector<Rational> thirds(std::initializer_list<long> numerators) {
    std::vector<Rational> out;
    for (long n : numerators) out.push_back(Rational(n, 3));
    return out;
}

RunConfig make_config(int n, int N, std::vector<Rational> beta) {
    RunConfig cfg;
    cfg.n = n;
    cfg.N = N;
    cfg.beta = std::move(beta);
    cfg.threads = 0;  // resolve from environment/hardware
    return cfg;
}

bool report_ok(const Report& r, std::string& detail) {
    if (r.all_pass()) return true;
    for (const auto& rel : r.relations())
        if (!rel.pass) {
            detail = rel.name + " " + rel.operands +
                     (rel.witness.empty() ? "" : ": " + rel.witness);
            return false;
        }
    return false;
}

} // namespace

int main() {
    // 1. Rank-one realization: -L_1 + kappa(0, beta_2 - beta_0 - 1) has the
    //    univariate Racah vectors as exact eigenvectors, all k = 0..N.
    criterion(1, "rank-one realization (n=3, N=10)", 1.0, [](std::string& detail) {
        RunConfig cfg = make_config(3, 10, thirds({1, 5, 10}));
        VerificationRun run(cfg);
        GeneratorTable& table = run.table();
        const SimplexGrid& grid = *table.grid();
        const OperatorMatrix& C23 = table.interval(2, 3);
        for (long k = 0; k <= 10; ++k) {
            GridFunction v = univariate_racah_vector(grid, k);
            GridFunction lhs = C23.matvec(v);
            Rational eig =
                kappa(Rational(k), run.params().beta(2) - run.params().beta(0) - Rational(1));
            for (size_t r = 0; r < grid.size(); ++r)
                if (lhs[r] != eig * v[r]) {
                    detail = "eigen-equation fails at k = " + std::to_string(k);
                    return false;
                }
        }
        return true;
    });

    // 2. Rank-one relations as exact 11 x 11 matrix equations.
    criterion(2, "rank-one relations (n=3, N=10)", 1.0, [](std::string& detail) {
        RunConfig cfg = make_config(3, 10, thirds({1, 5, 10}));
        VerificationRun run(cfg);
        Report r = verify_rank_one(run.table(), LabelSet({1}), LabelSet({2}), LabelSet({3}));
        if (r.relations().size() != 6) {
            detail = "expected six identities";
            return false;
        }
        return report_ok(r, detail);
    });

    // 3. Full generator family at rank 2: commutation, linear dependencies,
    //    embedded rank-one copies, and the sigma relation.
    criterion(3, "rank-2 generator family (n=4, N=5)", 30.0, [](std::string& detail) {
        RunConfig cfg = make_config(4, 5, thirds({1, 5, 10, 14}));
        VerificationRun run(cfg);
        GeneratorTable& table = run.table();

        Report commutation = verify_commutation(table);
        if (!report_ok(commutation, detail)) return false;

        Report lind = run.run_suite("lind");
        if (!report_ok(lind, detail)) return false;

        for (const auto& [K, L, M] : std::vector<std::array<LabelSet, 3>>{
                 {LabelSet({1}), LabelSet({2}), LabelSet({3})},
                 {LabelSet({1}), LabelSet({2, 3}), LabelSet({4})},
                 {LabelSet({1, 2}), LabelSet({3}), LabelSet({4})},
                 {LabelSet({1}), LabelSet({2}), LabelSet({3, 4})}}) {
            Report r = verify_rank_one(table, K, L, M);
            if (!report_ok(r, detail)) return false;
        }

        OperatorMatrix sigma_c23 =
            realize(sigma_shift(table.symbolic_interval(2, 3)), table.grid(), table.threads());
        if (!(sigma_c23 == table.interval(3, 4))) {
            detail = "C34 != sigma(C23)";
            return false;
        }
        return true;
    });

    // 4. Bispectrality at n=5, N=5: eigen-equations for all k and j, and
    //    pairwise commutation of the Racah operators.
    criterion(4, "bispectrality (n=5, N=5)", 120.0, [](std::string& detail) {
        RunConfig cfg = make_config(5, 5, thirds({1, 5, 10, 14, 19}));
        VerificationRun run(cfg);
        Report r = run.run_suite("bispectral");
        return report_ok(r, detail);
    });

    // 5. Orthogonality at n=4, N=6: exact off-diagonals and diagonal
    //    constant, float normalization within 1e-9.
    criterion(5, "orthogonality (n=4, N=6)", 120.0, [](std::string& detail) {
        ParameterSet params(4, 6, thirds({1, 5, 10, 14}));
        Report r = verify_orthogonality_exact(params, resolve_threads(0));
        return report_ok(r, detail);
    });

    // 6. Shift covariance at n=5, N=4 for (j, offset) in {(1,1),(1,2),(2,1)}.
    criterion(6, "shift covariance (n=5, N=4)", 60.0, [](std::string& detail) {
        ParameterSet params(5, 4, thirds({1, 5, 10, 14, 19}));
        auto grid = std::make_shared<SimplexGrid>(params);
        int threads = resolve_threads(0);
        for (auto [j, offset] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
            OperatorMatrix direct = realize(build_racah_operator(j, offset, params), grid, threads);
            OperatorMatrix substituted =
                realize(build_racah_operator_substituted(j, offset, params), grid, threads);
            if (!(direct == substituted)) {
                detail = "mismatch at j=" + std::to_string(j) +
                         " offset=" + std::to_string(offset);
                return false;
            }
        }
        return true;
    });

    // 7. Spectrum oracle: characteristic polynomial of C_{[2..4]} at n=4,
    //    N=3 factors exactly over the predicted kappa multiset.
    criterion(7, "spectrum oracle (n=4, N=3)", 60.0, [](std::string& detail) {
        RunConfig cfg = make_config(4, 3, thirds({1, 5, 10, 14}));
        VerificationRun run(cfg);
        Report r = verify_spectrum(run.table(), 2, 4, SpectrumMode::CharPoly);
        return report_ok(r, detail);
    });

    // 8. Classical presentation at n=3, N=4: residuals in the prescribed
    //    spans with one shared d; cyclic sum of the equitable constants is 0.
    criterion(8, "classical presentation (n=3, N=4)", 60.0, [](std::string& detail) {
        RunConfig cfg = make_config(3, 4, thirds({1, 5, 10}));
        VerificationRun run(cfg);
        Report r = verify_classical_presentation(run.table(), LabelSet({1, 2}), LabelSet({2, 3}));
        return report_ok(r, detail);
    });

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
