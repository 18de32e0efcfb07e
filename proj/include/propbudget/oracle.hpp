#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "propbudget/axioms.hpp"
#include "propbudget/error.hpp"
#include "propbudget/model.hpp"

namespace propbudget {

inline constexpr std::size_t kMaxEnumerationItems = 20;

struct ExistenceReport {
    AxiomId axiom;
    bool exhaustiveOnly = false;
    bool exists = false;
    std::vector<Budget> satisfyingBudgets;
    std::size_t totalFeasible = 0;
};

struct ImplicationViolation {
    Budget budget;
    AxiomId premise;
    AxiomId conclusion;
};

/// All feasible budgets, optionally only the exhaustive ones, in
/// lexicographic order of their ascending item sequences.
inline std::vector<Budget> enumerate_feasible(const Instance& inst, bool exhaustiveOnly)
{
    if (inst.size() > kMaxEnumerationItems)
        throw Error(ErrorKind::TooLargeForExact, "enumerating budgets over " + std::to_string(inst.size()) +
                                                     " items exceeds the limit of " +
                                                     std::to_string(kMaxEnumerationItems));
    std::vector<Budget> out;
    ItemSet current = inst.empty_set();
    auto emit = [&] {
        Budget b(inst, current);
        if (!exhaustiveOnly || is_exhaustive(inst, b)) out.push_back(std::move(b));
    };
    // Pre-order DFS: a set is emitted before its extensions by larger indices.
    auto rec = [&](auto&& self, std::size_t next, double spent) -> void {
        for (std::size_t c = next; c < inst.size(); ++c) {
            if (!leq(spent + inst.cost(c), inst.limit())) continue;
            current.insert(c);
            emit();
            self(self, c + 1, spent + inst.cost(c));
            current.erase(c);
        }
    };
    emit();
    rec(rec, 0, 0.0);
    return out;
}

inline ExistenceReport certify_existence(const Instance& inst, const Profile& profile, AxiomId axiom,
                                         bool exhaustiveOnly)
{
    ExistenceReport report{axiom, exhaustiveOnly, false, {}, 0};
    for (auto& budget : enumerate_feasible(inst, exhaustiveOnly)) {
        ++report.totalFeasible;
        if (check(inst, profile, budget, axiom).satisfied) report.satisfyingBudgets.push_back(std::move(budget));
    }
    report.exists = !report.satisfyingBudgets.empty();
    return report;
}

/// Verdicts for all ten axioms, indexed like `all_axioms()`.
inline std::array<bool, 10> evaluate_all(const Instance& inst, const Profile& profile, const Budget& budget)
{
    std::array<bool, 10> out{};
    auto ids = all_axioms();
    for (std::size_t k = 0; k < ids.size(); ++k) out[k] = check(inst, profile, budget, ids[k]).satisfied;
    return out;
}

/// Every lattice edge A -> B (transitively closed) that some budget breaks by
/// satisfying A but not B.
inline std::vector<ImplicationViolation> verify_implications(const Instance& inst, const Profile& profile,
                                                             const std::vector<Budget>& budgets)
{
    std::vector<ImplicationViolation> out;
    auto ids = all_axioms();
    auto edges = implication_edges();
    for (const auto& budget : budgets) {
        auto verdicts = evaluate_all(inst, profile, budget);
        auto satisfied = [&](AxiomId id) {
            for (std::size_t k = 0; k < ids.size(); ++k)
                if (ids[k] == id) return verdicts[k];
            return false;
        };
        for (auto [premise, conclusion] : edges)
            if (satisfied(premise) && !satisfied(conclusion)) out.push_back({budget, premise, conclusion});
    }
    return out;
}

} // namespace propbudget
