#include "racah/algebra.hpp"

#include <array>
#include <sstream>

#include "racah/parallel.hpp"
#include "racah/scalar.hpp"

namespace racah {

LabelSet::LabelSet(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw RangeError("LabelSet: empty set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.front() < 1) throw RangeError("LabelSet: members must be >= 1");
}

LabelSet LabelSet::interval(int p, int q) {
    if (p < 1 || q < p) throw RangeError("LabelSet::interval: bad bounds");
    std::vector<int> m;
    for (int i = p; i <= q; ++i) m.push_back(i);
    return LabelSet(std::move(m));
}

LabelSet::Kind LabelSet::kind() const {
    if (members_.size() == 1) return Kind::Singleton;
    return is_interval() ? Kind::Interval : Kind::General;
}

bool LabelSet::is_interval() const {
    return members_.back() - members_.front() + 1 == static_cast<int>(members_.size());
}

bool LabelSet::contains(const LabelSet& other) const {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                         other.members_.end());
}

bool LabelSet::disjoint(const LabelSet& other) const {
    std::vector<int> common;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(common));
    return common.empty();
}

LabelSet LabelSet::unite(const LabelSet& other) const {
    std::vector<int> u = members_;
    u.insert(u.end(), other.members_.begin(), other.members_.end());
    return LabelSet(std::move(u));
}

std::string LabelSet::label() const {
    std::string s = "C{";
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(members_[i]);
    }
    s += '}';
    return s;
}

GeneratorTable::GeneratorTable(const ParameterSet& params, int threads)
    : params_(params), grid_(std::make_shared<SimplexGrid>(params)), threads_(threads) {
    params_.require_generic();
}

DifferenceOperator GeneratorTable::symbolic_interval(int p, int q) const {
    const int n = params_.n();
    if (p < 1 || q < p || q > n) throw RangeError("generator_interval: bad interval bounds");
    DifferenceOperator op = zero_operator(params_);
    if (p == 1) {
        op.identity_part.push_back(KappaCoordinate{q - 1, Rational(1)});
        return op;
    }
    op = build_racah_operator(q - p, p - 2, params_);
    for (auto& term : op.terms)
        for (auto& c : term.coeff) std::get<GNuCoefficient>(c).factor = Rational(-1);
    op.identity_part.push_back(KappaConstant{q - 1, p - 2, Rational(1)});
    return op;
}

const OperatorMatrix& GeneratorTable::store(const LabelSet& key, OperatorMatrix m) {
    return cache_.emplace(key, std::move(m)).first->second;
}

const OperatorMatrix& GeneratorTable::interval(int p, int q) {
    LabelSet key = LabelSet::interval(p, q);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return store(key, realize(symbolic_interval(p, q), grid_, threads_));
}

const OperatorMatrix& GeneratorTable::pair(int i, int j) {
    if (i < 1 || j <= i || j > params_.n()) throw RangeError("generator_pair: bad indices");
    LabelSet key({i, j});
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    OperatorMatrix m = interval(i, j);
    m -= interval(i + 1, j);
    m -= interval(i, j - 1);
    if (i + 1 <= j - 1) m += interval(i + 1, j - 1);  // empty interval contributes zero
    m += interval(i, i);
    m += interval(j, j);
    if (j == i + 1) {
        // Adjacent pairs are intervals; the degenerate terms must cancel
        // exactly and the interval construction stays the cached entry.
        const OperatorMatrix& direct = interval(i, j);
        if (!(m == direct))
            throw StructureError("generator_pair: degenerate terms of " + key.label() +
                                 " fail to cancel");
        return direct;
    }
    return store(key, std::move(m));
}

const OperatorMatrix& GeneratorTable::general(const LabelSet& A) {
    if (A.size() == 1) return interval(A.min(), A.min());
    auto it = cache_.find(A);
    if (it != cache_.end()) return it->second;

    const auto& m = A.members();
    OperatorMatrix acc(grid_);
    for (size_t a = 0; a < m.size(); ++a)
        for (size_t b = a + 1; b < m.size(); ++b) acc += pair(m[a], m[b]);
    Rational excess(static_cast<long>(A.size()) - 2);
    for (int i : m) acc -= interval(i, i).scaled(excess);

    if (A.is_interval()) {
        // Both construction paths must coincide bit-exactly.
        const OperatorMatrix& direct = interval(A.min(), A.max());
        if (!(acc == direct))
            throw StructureError("generator_general: linear-dependency assembly of " +
                                 A.label() + " disagrees with the interval construction");
        return direct;
    }
    return store(A, std::move(acc));
}

const OperatorMatrix& GeneratorTable::get(const LabelSet& A) {
    if (A.is_interval()) return interval(A.min(), A.max());
    return general(A);
}

void GeneratorTable::populate_all() {
    for (const auto& A : all_label_sets(params_.n())) get(A);
}

std::vector<LabelSet> all_label_sets(int n) {
    std::vector<LabelSet> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> m;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) m.push_back(i + 1);
        out.emplace_back(std::move(m));
    }
    return out;
}

Report verify_commutation(GeneratorTable& table) {
    table.populate_all();
    auto sets = all_label_sets(table.params().n());
    struct Pair { LabelSet a, b; };
    std::vector<Pair> pairs;
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i; j < sets.size(); ++j) {
            const LabelSet& A = sets[i];
            const LabelSet& B = sets[j];
            if (A.contains(B) || B.contains(A) || A.disjoint(B)) pairs.push_back({A, B});
        }

    std::vector<RelationResult> results(pairs.size());
    parallel_for(pairs.size(), table.threads(), [&](size_t idx) {
        const auto& [A, B] = pairs[idx];
        OperatorMatrix c = commutator(table.get(A), table.get(B));
        RelationResult r;
        r.name = "commute";
        r.operands = A.label() + " " + B.label();
        r.pass = c.is_zero();
        if (!r.pass) r.witness = "nonzero commutator";
        results[idx] = std::move(r);
    });
    Report report;
    for (auto& r : results) report.add(std::move(r));
    report.sort();
    return report;
}

Report verify_rank_one(GeneratorTable& table, const LabelSet& K, const LabelSet& L,
                       const LabelSet& M) {
    if (!K.disjoint(L) || !L.disjoint(M) || !K.disjoint(M))
        throw ConfigError("verify_rank_one: K, L, M must be pairwise disjoint");
    const int threads = table.threads();
    const std::string tag = K.label() + " " + L.label() + " " + M.label();

    const OperatorMatrix& CK = table.get(K);
    const OperatorMatrix& CL = table.get(L);
    const OperatorMatrix& CM = table.get(M);
    const OperatorMatrix& CKL = table.get(K.unite(L));
    const OperatorMatrix& CLM = table.get(L.unite(M));
    const OperatorMatrix& CKM = table.get(K.unite(M));
    const OperatorMatrix& CKLM = table.get(K.unite(L).unite(M));

    Report report;
    OperatorMatrix F2 = commutator(CKL, CLM, threads);
    report.add("rank-one-F", tag + " [KM,KL]", commutator(CKM, CKL, threads) == F2);
    report.add("rank-one-F", tag + " [LM,KM]", commutator(CLM, CKM, threads) == F2);

    OperatorMatrix F = F2.scaled(Rational(1, 2));
    // [C_KL, F] = C_LM C_KL - C_KL C_KM + (C_L - C_K)(C_M - C_KLM)
    {
        OperatorMatrix lhs = commutator(CKL, F, threads);
        OperatorMatrix rhs = compose(CLM, CKL, threads) - compose(CKL, CKM, threads) +
                             compose(CL - CK, CM - CKLM, threads);
        report.add("rank-one-rel", tag + " [KL,F]", lhs == rhs);
    }
    // [C_LM, F] = C_KM C_LM - C_LM C_KL + (C_M - C_L)(C_K - C_KLM)
    {
        OperatorMatrix lhs = commutator(CLM, F, threads);
        OperatorMatrix rhs = compose(CKM, CLM, threads) - compose(CLM, CKL, threads) +
                             compose(CM - CL, CK - CKLM, threads);
        report.add("rank-one-rel", tag + " [LM,F]", lhs == rhs);
    }
    // [C_KM, F] = C_KL C_KM - C_KM C_LM + (C_K - C_M)(C_L - C_KLM)
    {
        OperatorMatrix lhs = commutator(CKM, F, threads);
        OperatorMatrix rhs = compose(CKL, CKM, threads) - compose(CKM, CLM, threads) +
                             compose(CK - CM, CL - CKLM, threads);
        report.add("rank-one-rel", tag + " [KM,F]", lhs == rhs);
    }
    // Block linear dependency: C_KLM = C_KL + C_KM + C_LM - C_K - C_L - C_M.
    {
        OperatorMatrix rhs = CKL + CKM;
        rhs += CLM;
        rhs -= CK;
        rhs -= CL;
        rhs -= CM;
        report.add("rank-one-lind", tag, CKLM == rhs);
    }
    report.sort();
    return report;
}

std::vector<std::array<LabelSet, 3>> rank_one_partitions(int n, bool full_enumeration) {
    std::vector<std::array<LabelSet, 3>> out;
    if (!full_enumeration) {
        for (int a = 1; a <= n; ++a)
            for (int s1 = a; s1 <= n; ++s1)
                for (int s2 = s1 + 1; s2 <= n; ++s2)
                    for (int b = s2 + 1; b <= n; ++b)
                        out.push_back({LabelSet::interval(a, s1), LabelSet::interval(s1 + 1, s2),
                                       LabelSet::interval(s2 + 1, b)});
        return out;
    }
    // Every assignment of [n] to {unused, K, L, M}; dedupe unordered triples
    // by requiring K < L < M lexicographically.
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (long code = 0; code < total; ++code) {
        std::array<std::vector<int>, 3> parts;
        long c = code;
        for (int i = 1; i <= n; ++i, c /= 4) {
            int slot = static_cast<int>(c % 4);
            if (slot > 0) parts[static_cast<size_t>(slot - 1)].push_back(i);
        }
        if (parts[0].empty() || parts[1].empty() || parts[2].empty()) continue;
        LabelSet K(parts[0]), L(parts[1]), M(parts[2]);
        if (K < L && L < M) out.push_back({K, L, M});
    }
    return out;
}

namespace {

/// Fits R = d * X + e * I exactly; returns false when R is not in the span.
bool fit_in_span(const OperatorMatrix& R, const OperatorMatrix& X, Rational& d, Rational& e,
                 bool d_fixed) {
    const size_t dim = R.dim();
    if (!d_fixed) {
        bool found = false;
        for (size_t r = 0; r < dim && !found; ++r)
            for (size_t c = 0; c < dim && !found; ++c) {
                if (r == c || X.at(r, c).is_zero()) continue;
                d = R.at(r, c) / X.at(r, c);
                found = true;
            }
        if (!found) return false;  // X has no off-diagonal structure to fit against
    }
    e = R.at(0, 0) - d * X.at(0, 0);
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
            Rational expect = d * X.at(r, c);
            if (r == c) expect += e;
            if (R.at(r, c) != expect) return false;
        }
    return true;
}

} // namespace

Report verify_classical_presentation(GeneratorTable& table, const LabelSet& K1,
                                     const LabelSet& K2) {
    if (table.params().n() != 3)
        throw ConfigError("verify_classical_presentation: requires an n = 3 configuration");
    if (K1 == K2) throw ConfigError("verify_classical_presentation: K1 and K2 must differ");
    if (K1.size() != 2 || K2.size() != 2)
        throw ConfigError("verify_classical_presentation: K1, K2 must be two-element sets");
    const int threads = table.threads();

    Report report;
    // Quadratic presentation. The intermediate Casimirs close on it with the
    // normalization K = -C/2; the raw generators would put -2(K^2 + {K1,K2})
    // on the right-hand side instead.
    OperatorMatrix k1 = table.get(K1).scaled(Rational(-1, 2));
    OperatorMatrix k2 = table.get(K2).scaled(Rational(-1, 2));
    OperatorMatrix k3 = commutator(k1, k2, threads);

    OperatorMatrix anti = anticommutator(k1, k2, threads);
    OperatorMatrix r1 = commutator(k2, k3, threads) - compose(k2, k2, threads) - anti;
    OperatorMatrix r2 = commutator(k3, k1, threads) - compose(k1, k1, threads) - anti;

    Rational d, e1, e2;
    bool ok1 = fit_in_span(r1, k2, d, e1, false);
    report.add("classical-quadratic", "[K2,K3] span{K2,Id}", ok1,
               ok1 ? "d=" + d.str() + " e1=" + e1.str() : "residual not in span");
    bool ok2 = ok1 && fit_in_span(r2, k1, d, e2, true);
    report.add("classical-quadratic", "[K3,K1] span{K1,Id} shared d", ok2,
               ok2 ? "d=" + d.str() + " e2=" + e2.str()
                   : "residual not in span with shared d");

    // Equitable presentation on the raw generators.
    const OperatorMatrix& c12 = table.get(LabelSet({1, 2}));
    const OperatorMatrix& c23 = table.get(LabelSet({2, 3}));
    const OperatorMatrix& c13 = table.get(LabelSet({1, 3}));
    OperatorMatrix f2 = commutator(c12, c23, threads);
    report.add("classical-equitable", "2F [C23,C13]", commutator(c23, c13, threads) == f2);
    report.add("classical-equitable", "2F [C13,C12]", commutator(c13, c12, threads) == f2);
    OperatorMatrix f = f2.scaled(Rational(1, 2));

    auto scalar_residual = [&](const OperatorMatrix& X, const OperatorMatrix& P,
                               const OperatorMatrix& Q, const char* name, Rational& value,
                               bool& ok) {
        OperatorMatrix res =
            commutator(X, f, threads) - compose(P, X, threads) + compose(X, Q, threads);
        auto s = res.as_scalar();
        ok = static_cast<bool>(s);
        if (ok) value = *s;
        report.add("classical-equitable", name, ok,
                   ok ? "i=" + value.str() : "residual is not scalar");
    };
    Rational i12, i23, i13;
    bool s12 = false, s23 = false, s13 = false;
    scalar_residual(c12, c23, c13, "[C12,F] residual", i12, s12);
    scalar_residual(c23, c13, c12, "[C23,F] residual", i23, s23);
    scalar_residual(c13, c12, c23, "[C13,F] residual", i13, s13);
    bool cyc = s12 && s23 && s13 && (i12 + i23 + i13).is_zero();
    report.add("classical-equitable", "cyclic sum i12+i23+i13", cyc,
               cyc ? "0" : "nonzero cyclic sum");
    report.sort();
    return report;
}

std::map<Rational, long> expected_spectrum(const ParameterSet& params, int p, int q) {
    if (p < 1 || q < p || q > params.n()) throw RangeError("expected_spectrum: bad interval");
    const int len = q - p;
    const int s = params.rank() - len;
    const Rational beta_diff = params.beta(q - 1) - params.beta(p - 2) - Rational(1);
    std::map<Rational, long> expect;
    if (len == params.n() - 1) {
        // The full interval is central; its quantum number is pinned at N.
        SimplexGrid grid(params);
        expect[kappa(Rational(params.N()), beta_diff)] = static_cast<long>(grid.size());
        return expect;
    }
    for (long t = 0; t <= params.N(); ++t) {
        Rational m1 = len == 0 ? Rational(t == 0 ? 1 : 0) : binomial(t + len - 1, len - 1);
        Rational m2 = binomial(params.N() - t + s, s);
        Rational mult = m1 * m2;
        if (mult.is_zero()) continue;
        expect[kappa(Rational(t), beta_diff)] += mult.numerator().get_si();
    }
    return expect;
}

Report verify_spectrum(GeneratorTable& table, int p, int q, SpectrumMode mode) {
    const ParameterSet& params = table.params();
    const OperatorMatrix& C = table.interval(p, q);
    auto expect = expected_spectrum(params, p, q);
    const std::string tag = LabelSet::interval(p, q).label();
    Report report;

    if (mode == SpectrumMode::Auto && p == 1) {
        // Diagonal generator: multiset read off the diagonal.
        bool diag = C.is_diagonal();
        std::map<Rational, long> actual;
        if (diag)
            for (size_t r = 0; r < C.dim(); ++r) actual[C.at(r, r)] += 1;
        bool pass = diag && actual == expect;
        report.add("spectrum-diagonal", tag, pass,
                   diag ? (pass ? "" : "diagonal multiset mismatch") : "matrix not diagonal");
        report.sort();
        return report;
    }

    if (mode == SpectrumMode::Auto && p == 2) {
        // Distinguished chain: verify the eigen-equations on the multivariate
        // Racah eigenvectors, then account for multiplicities by counting k.
        const SimplexGrid& grid = *table.grid();
        bool all_eigen = true;
        std::map<Rational, long> actual;
        for (size_t row = 0; row < grid.size(); ++row) {
            MultiIndex k = grid.k_point(row);
            GridFunction v(grid);
            for (size_t r = 0; r < grid.size(); ++r)
                v[r] = racah_multivariate(params.rank(), k, grid.point(r), params);
            Rational eig = kappa(Rational(k.abs_up_to(q - 2)),
                                 params.beta(q - 1) - params.beta(0) - Rational(1));
            GridFunction lhs = C.matvec(v);
            bool ok = true;
            for (size_t r = 0; r < grid.size(); ++r)
                if (lhs[r] != eig * v[r]) { ok = false; break; }
            all_eigen = all_eigen && ok;
            actual[eig] += 1;
        }
        bool pass = all_eigen && actual == expect;
        report.add("spectrum-eigenvector", tag, pass,
                   all_eigen ? (pass ? "" : "multiplicity mismatch") : "eigen-equation failed");
        report.sort();
        return report;
    }

    // Exact characteristic polynomial, deflated by every predicted root.
    std::vector<Rational> poly = characteristic_polynomial(C, table.threads());
    std::string witness;
    bool pass = true;
    for (const auto& [eig, mult] : expect) {
        for (long i = 0; i < mult; ++i) {
            Rational rem = deflate_root(poly, eig);
            if (!rem.is_zero()) {
                pass = false;
                witness = "missing eigenvalue " + eig.str() + " (multiplicity " +
                          std::to_string(i) + " of " + std::to_string(mult) + ")";
                break;
            }
        }
        if (!pass) break;
    }
    if (pass && !(poly.size() == 1 && poly[0] == Rational(1))) {
        pass = false;
        witness = "extra eigenvalues: residual polynomial degree " +
                  std::to_string(poly.size() - 1);
    }
    report.add("spectrum-charpoly", tag, pass, witness);
    report.sort();
    return report;
}

} // namespace racah
