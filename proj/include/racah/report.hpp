#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace racah {

/// Outcome of one verified relation.
struct RelationResult {
    std::string name;      // suite-scoped relation name, e.g. "commute"
    std::string operands;  // e.g. "C{1,2} C{1,2,3}"
    bool pass = false;
    std::string witness;   // diagnostic for failures, optional detail otherwise
};

/// Deterministic verification report. Relations are sorted by (name,
/// operands) before serialization so output bytes do not depend on the
/// execution schedule.
class Report {
public:
    void add(RelationResult r) { relations_.push_back(std::move(r)); }
    void add(const std::string& name, const std::string& operands, bool pass,
             const std::string& witness = {}) {
        relations_.push_back({name, operands, pass, witness});
    }
    void merge(Report other) {
        for (auto& r : other.relations_) relations_.push_back(std::move(r));
    }

    const std::vector<RelationResult>& relations() const { return relations_; }
    size_t passed() const {
        return static_cast<size_t>(
            std::count_if(relations_.begin(), relations_.end(),
                          [](const RelationResult& r) { return r.pass; }));
    }
    size_t failed() const { return relations_.size() - passed(); }
    bool all_pass() const { return failed() == 0; }

    void sort() {
        std::stable_sort(relations_.begin(), relations_.end(),
                         [](const RelationResult& a, const RelationResult& b) {
                             if (a.name != b.name) return a.name < b.name;
                             return a.operands < b.operands;
                         });
    }

private:
    std::vector<RelationResult> relations_;
};

} // namespace racah
