#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "propbudget/error.hpp"
#include "propbudget/item_set.hpp"
#include "propbudget/knapsack.hpp"
#include "propbudget/load.hpp"
#include "propbudget/model.hpp"

namespace propbudget {

enum class TieBreakPolicy { Lexicographic, CheapestFirst, MostApprovedFirst };

inline std::string_view to_string(TieBreakPolicy p)
{
    switch (p) {
    case TieBreakPolicy::Lexicographic: return "lex";
    case TieBreakPolicy::CheapestFirst: return "cheapest";
    case TieBreakPolicy::MostApprovedFirst: return "most-approved";
    }
    return "lex";
}

inline std::optional<TieBreakPolicy> parse_tie_break(std::string_view s)
{
    if (s == "lex" || s == "lexicographic") return TieBreakPolicy::Lexicographic;
    if (s == "cheapest" || s == "cheapest-first") return TieBreakPolicy::CheapestFirst;
    if (s == "most-approved" || s == "most-approved-first") return TieBreakPolicy::MostApprovedFirst;
    return std::nullopt;
}

/// Strict total order: true when `a` is preferred over `b`. Every policy
/// falls back to the item index.
inline bool tie_preferred(const Instance& inst, const Profile& profile, TieBreakPolicy policy, std::size_t a,
                          std::size_t b)
{
    switch (policy) {
    case TieBreakPolicy::Lexicographic: break;
    case TieBreakPolicy::CheapestFirst:
        if (!approx_eq(inst.cost(a), inst.cost(b))) return inst.cost(a) < inst.cost(b);
        break;
    case TieBreakPolicy::MostApprovedFirst: {
        auto sa = profile.approvals(a), sb = profile.approvals(b);
        if (sa != sb) return sa > sb;
        if (!approx_eq(inst.cost(a), inst.cost(b))) return inst.cost(a) < inst.cost(b);
        break;
    }
    }
    return a < b;
}

struct RuleStep {
    std::size_t chosen = 0;
    std::vector<std::size_t> candidates;
    /// Optimal max load after adding each candidate, aligned with `candidates`.
    std::vector<double> loads;
    std::vector<std::size_t> ties;
};

struct RuleTrace {
    std::vector<RuleStep> steps;
    /// Unapproved items appended by the optional post-processing pass.
    std::vector<std::size_t> filled;
    Budget finalBudget;
    std::optional<LoadAssignment> finalAssignment;
};

struct GpseqOptions {
    TieBreakPolicy tie = TieBreakPolicy::Lexicographic;
    bool fillUnapproved = false;
};

/// Generalized sequential Phragmén: repeatedly add the affordable approved
/// item whose inclusion yields the smallest optimal maximum voter load.
/// Loads of earlier picks may be redistributed at every step.
inline std::pair<Budget, RuleTrace> gpseq(const Instance& inst, const Profile& profile, GpseqOptions options = {})
{
    if (profile.size() == 0) throw Error(ErrorKind::InvalidProfile, "GPseq needs at least one voter");

    RuleTrace trace;
    ItemSet selected = inst.empty_set();
    double spent = 0.0;
    while (true) {
        RuleStep step;
        for (std::size_t c = 0; c < inst.size(); ++c) {
            if (selected.contains(c) || !leq(spent + inst.cost(c), inst.limit()) || profile.approvals(c) == 0)
                continue;
            ItemSet next = selected;
            next.insert(c);
            step.candidates.push_back(c);
            step.loads.push_back(min_max_load(inst, profile, next).maxLoad);
        }
        if (step.candidates.empty()) break;

        double best = *std::min_element(step.loads.begin(), step.loads.end());
        for (std::size_t k = 0; k < step.candidates.size(); ++k)
            if (leq(step.loads[k], best)) step.ties.push_back(step.candidates[k]);
        step.chosen = *std::min_element(step.ties.begin(), step.ties.end(), [&](std::size_t a, std::size_t b) {
            return tie_preferred(inst, profile, options.tie, a, b);
        });

        selected.insert(step.chosen);
        spent += inst.cost(step.chosen);
        trace.steps.push_back(std::move(step));
    }

    ItemSet approvedPart = selected;
    if (options.fillUnapproved) {
        for (auto c : cheapest_first_order(inst)) {
            if (selected.contains(c) || profile.approvals(c) != 0) continue;
            if (leq(spent + inst.cost(c), inst.limit())) {
                selected.insert(c);
                spent += inst.cost(c);
                trace.filled.push_back(c);
            }
        }
    }

    Budget budget(inst, selected);
    trace.finalBudget = budget;
    trace.finalAssignment = min_max_load(inst, profile, approvedPart);
    return {std::move(budget), std::move(trace)};
}

/// Exhaustive budget satisfying BJR-L. When the unit-cost items all fit they
/// are all taken; otherwise unit-cost items are picked greedily by how many
/// still-unrepresented voters approve them, ⌊L⌋ times.
inline Budget greedy_bjr_l(const Instance& inst, const Profile& profile)
{
    std::vector<std::size_t> unitItems;
    for (std::size_t c = 0; c < inst.size(); ++c)
        if (approx_eq(inst.cost(c), 1.0)) unitItems.push_back(c);

    ItemSet selected = inst.empty_set();
    if (leq(static_cast<double>(unitItems.size()), inst.limit())) {
        for (auto c : unitItems) selected.insert(c);
        return fill_exhaustive(inst, Budget(inst, selected));
    }

    const double target = std::floor(inst.limit() + kEps);
    std::vector<bool> remaining(profile.size(), true);
    double spent = 0.0;
    while (spent < target - kEps && !unitItems.empty()) {
        std::size_t bestPos = 0, bestScore = 0;
        for (std::size_t k = 0; k < unitItems.size(); ++k) {
            std::size_t score = 0;
            for (std::size_t i = 0; i < profile.size(); ++i)
                if (remaining[i] && profile.ballot(i).contains(unitItems[k])) ++score;
            if (k == 0 || score > bestScore) {
                bestPos = k;
                bestScore = score;
            }
        }
        auto c = unitItems[bestPos];
        selected.insert(c);
        spent += inst.cost(c);
        for (std::size_t i = 0; i < profile.size(); ++i)
            if (profile.ballot(i).contains(c)) remaining[i] = false;
        unitItems.erase(unitItems.begin() + static_cast<std::ptrdiff_t>(bestPos));
    }
    return fill_exhaustive(inst, Budget(inst, selected));
}

/// Exhaustive budget satisfying BPJR-L by descending bundle levels.
///
/// Levels are the distinct weights (<= L) of bundles that some voter approves
/// in full. At each level the bundle with the most still-unserved supporters
/// is funded while it has at least level·n/L of them and still fits; its
/// supporters are then considered served. Finally the budget is filled to
/// exhaustiveness cheapest first.
inline Budget bpjr_construct(const Instance& inst, const Profile& profile)
{
    const std::size_t m = inst.size(), n = profile.size();
    if (m > kMaxBundleItems)
        throw Error(ErrorKind::TooLargeForExact, "bundle enumeration over " + std::to_string(m) +
                                                     " items exceeds the exact limit");

    auto to_mask = [&](const ItemSet& s) {
        std::uint32_t mask = 0;
        s.for_each([&](std::size_t c) { mask |= std::uint32_t{1} << c; });
        return mask;
    };
    auto mask_weight = [&](std::uint32_t mask) {
        double w = 0.0;
        for (auto bits = mask; bits != 0; bits &= bits - 1) w += inst.cost(static_cast<std::size_t>(std::countr_zero(bits)));
        return w;
    };

    std::vector<std::uint32_t> ballots;
    for (const auto& b : profile.ballots()) ballots.push_back(to_mask(b));

    std::vector<std::uint32_t> distinct = ballots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::pair<double, std::uint32_t>> bundles;
    {
        std::vector<std::uint32_t> all;
        for (auto b : distinct)
            for (std::uint32_t sub = b; sub != 0; sub = (sub - 1) & b) all.push_back(sub);
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (auto sub : all) {
            double w = mask_weight(sub);
            if (leq(w, inst.limit())) bundles.push_back({w, sub});
        }
    }
    std::sort(bundles.begin(), bundles.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<bool> served(n, false);
    std::uint32_t chosen = 0;
    double spent = 0.0;
    const double perUnit = n == 0 || inst.limit() <= 0.0 ? 0.0 : static_cast<double>(n) / inst.limit();

    std::size_t start = 0;
    while (start < bundles.size()) {
        std::size_t end = start;
        const double level = bundles[start].first;
        while (end < bundles.size() && approx_eq(bundles[end].first, level)) ++end;

        while (leq(spent + level, inst.limit())) {
            std::size_t bestSupport = 0;
            std::optional<std::uint32_t> best;
            for (std::size_t k = start; k < end; ++k) {
                auto mask = bundles[k].second;
                std::size_t support = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (!served[i] && (ballots[i] & mask) == mask) ++support;
                bool better = !best || support > bestSupport;
                if (best && support == bestSupport) {
                    auto pc = std::popcount(mask), pb = std::popcount(*best);
                    better = pc < pb || (pc == pb && detail::mask_lex_less(mask, *best));
                }
                if (better) {
                    best = mask;
                    bestSupport = support;
                }
            }
            if (!best || bestSupport == 0 || !geq(static_cast<double>(bestSupport), level * perUnit)) break;
            chosen |= *best;
            spent = mask_weight(chosen);
            for (std::size_t i = 0; i < n; ++i)
                if ((ballots[i] & *best) == *best) served[i] = true;
        }
        start = end;
    }

    ItemSet selected = inst.empty_set();
    for (std::size_t c = 0; c < m; ++c)
        if ((chosen >> c) & 1U) selected.insert(c);
    return fill_exhaustive(inst, Budget(inst, selected));
}

} // namespace propbudget
