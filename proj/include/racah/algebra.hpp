#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "racah/matrix.hpp"
#include "racah/report.hpp"

namespace racah {

/// A nonempty subset of [n] = {1, ..., n} labelling a generator C_A.
class LabelSet {
public:
    enum class Kind { Singleton, Interval, General };

    LabelSet() = default;
    explicit LabelSet(std::vector<int> members);
    static LabelSet interval(int p, int q);
    static LabelSet singleton(int i) { return interval(i, i); }

    const std::vector<int>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    Kind kind() const;
    bool is_interval() const;
    int min() const { return members_.front(); }
    int max() const { return members_.back(); }

    bool contains(const LabelSet& other) const;
    bool disjoint(const LabelSet& other) const;
    LabelSet unite(const LabelSet& other) const;

    /// "C{2,3}" style label for reports.
    std::string label() const;

    friend bool operator<(const LabelSet& a, const LabelSet& b) { return a.members_ < b.members_; }
    friend bool operator==(const LabelSet& a, const LabelSet& b) {
        return a.members_ == b.members_;
    }
    friend bool operator!=(const LabelSet& a, const LabelSet& b) { return !(a == b); }

private:
    std::vector<int> members_;  // sorted ascending, unique
};

/// Builds and caches every generator C_A of the discrete realization on one
/// grid. Interval generators come from the defining formulas; pairs from
/// inclusion-exclusion over nested intervals; general sets from the linear
/// dependency on pairs and singletons. Construction is single-writer;
/// lookups after warm-up are read-only and safe to share.
class GeneratorTable {
public:
    explicit GeneratorTable(const ParameterSet& params, int threads = 1);

    const ParameterSet& params() const { return params_; }
    std::shared_ptr<const SimplexGrid> grid() const { return grid_; }
    int threads() const { return threads_; }

    /// C_{[p..q]}, 1 <= p <= q <= n.
    const OperatorMatrix& interval(int p, int q);
    /// C_{ij} via C_{[i..j]} - C_{[i+1..j]} - C_{[i..j-1]} + C_{[i+1..j-1]} + C_i + C_j.
    const OperatorMatrix& pair(int i, int j);
    /// C_A = sum_{{i,j} in A} C_ij - (|A|-2) sum_{i in A} C_i.
    const OperatorMatrix& general(const LabelSet& A);
    /// Dispatch on the set's kind.
    const OperatorMatrix& get(const LabelSet& A);

    /// Symbolic form of an interval generator (p >= 2 path), exposed for the
    /// sigma-relation and specialization checks.
    DifferenceOperator symbolic_interval(int p, int q) const;

    /// Warm every subset of [n]; useful before parallel read-only sweeps.
    void populate_all();

private:
    const OperatorMatrix& store(const LabelSet& key, OperatorMatrix m);

    ParameterSet params_;
    std::shared_ptr<const SimplexGrid> grid_;
    int threads_;
    std::map<LabelSet, OperatorMatrix> cache_;
};

/// All nonempty subsets of [n].
std::vector<LabelSet> all_label_sets(int n);

/// [C_A, C_B] = 0 for every pair with A in B, B in A, or A disjoint from B.
Report verify_commutation(GeneratorTable& table);

/// The six exact identities of the embedded rank-one algebra R^{K,L,M}(3):
/// the three equal commutators defining 2F, the three [C, F] relations, and
/// the block linear dependency for C_{KLM} (checked alongside).
Report verify_rank_one(GeneratorTable& table, const LabelSet& K, const LabelSet& L,
                       const LabelSet& M);

/// Default rank-one partition family: consecutive interval triples. With
/// full_enumeration, every ordered triple of disjoint nonempty subsets
/// appears instead (three unordered set choices; combinatorially heavy).
std::vector<std::array<LabelSet, 3>> rank_one_partitions(int n, bool full_enumeration = false);

/// Classical two-generator presentation at n = 3. Uses the normalization
/// K1 = -C_{K1}/2, K2 = -C_{K2}/2 under which the quadratic relations close
/// with coefficient one; verifies both residuals lie exactly in the
/// prescribed spans with a shared d, then the equitable-form relations with
/// scalar structure constants summing to zero.
Report verify_classical_presentation(GeneratorTable& table, const LabelSet& K1,
                                     const LabelSet& K2);

enum class SpectrumMode { Auto, CharPoly };

/// Spectrum of C_{[p..q]} against the predicted multiset
/// { kappa(t, beta_{q-1} - beta_{p-2} - 1) } with multiplicity
/// C(t+q-p-1, q-p-1) * C(N-t+s, s), s = (n-2) - (q-p). Diagonal generators
/// are read off directly, the distinguished chain is checked on its Racah
/// eigenvectors, and everything else (or CharPoly mode) goes through exact
/// characteristic-polynomial deflation.
Report verify_spectrum(GeneratorTable& table, int p, int q,
                       SpectrumMode mode = SpectrumMode::Auto);

/// Expected spectrum entries (eigenvalue, multiplicity) for C_{[p..q]},
/// collisions merged.
std::map<Rational, long> expected_spectrum(const ParameterSet& params, int p, int q);

} // namespace racah
