#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "propbudget/error.hpp"
#include "propbudget/item_set.hpp"
#include "propbudget/knapsack.hpp"
#include "propbudget/model.hpp"

namespace propbudget {

/// Voter subsets are enumerated exhaustively up to this many voters.
inline constexpr std::size_t kMaxBruteForceVoters = 22;

/// A voter group that is under-represented by a budget.
struct AxiomWitness {
    std::vector<std::size_t> voters;
    double level = 0.0;
    ItemSet commonItems;
    ItemSet witnessBundle;
    double representedWeight = 0.0;
    double requiredWeight = 0.0;

    double deficit() const noexcept { return requiredWeight - representedWeight; }
};

enum class CheckMethod { Polynomial, BruteForce };

struct AxiomReport {
    AxiomId axiom;
    bool satisfied = true;
    std::optional<AxiomWitness> witness;
    CheckMethod method = CheckMethod::BruteForce;
};

namespace detail {

inline void require_feasible(const Instance& inst, const Budget& budget)
{
    if (!is_feasible(inst, budget)) throw Error(ErrorKind::InvalidBudget, "budget exceeds the limit");
}

inline void require_brute_force_size(const Profile& profile)
{
    if (profile.size() > kMaxBruteForceVoters)
        throw Error(ErrorKind::TooLargeForExact, "brute-force check over " + std::to_string(profile.size()) +
                                                     " voters exceeds the limit of " +
                                                     std::to_string(kMaxBruteForceVoters));
}

/// Entitlement denominator: the limit for L-variants, the spend for W-variants.
inline double entitlement(const Instance& inst, const Budget& budget, AxiomVariant variant)
{
    return variant == AxiomVariant::L ? inst.limit() : budget.total_cost();
}

/// W-variants quantify over levels in [1, w(W)]; an empty spend leaves none.
inline bool vacuous(const Budget& budget, AxiomVariant variant)
{
    return variant == AxiomVariant::W && budget.total_cost() <= kEps;
}

/// Keeps the violation with the largest deficit; earlier (lexicographically
/// smaller) voter sets win ties.
class WitnessPicker {
public:
    void offer(AxiomWitness w)
    {
        if (!best_ || w.deficit() > best_->deficit() + kEps ||
            (approx_eq(w.deficit(), best_->deficit()) && w.voters < best_->voters))
            best_ = std::move(w);
    }

    AxiomReport report(AxiomId id, CheckMethod method) &&
    {
        AxiomReport r{id, !best_.has_value(), std::move(best_), method};
        return r;
    }

private:
    std::optional<AxiomWitness> best_;
};

/// Depth-first walk over voter subsets with a nonempty common ballot, in
/// lexicographic order of their ascending index sequences. Subsets whose
/// common ballot is empty are pruned together with all their supersets.
template <typename Visit>
void for_each_cohesive_group(const Profile& profile, std::size_t universe, Visit&& visit)
{
    std::vector<std::size_t> group;
    auto rec = [&](auto&& self, std::size_t next, const ItemSet& common, const ItemSet& covered) -> void {
        for (std::size_t i = next; i < profile.size(); ++i) {
            ItemSet c = common & profile.ballot(i);
            if (c.empty()) continue;
            ItemSet u = covered | profile.ballot(i);
            group.push_back(i);
            visit(std::as_const(group), std::as_const(c), std::as_const(u));
            self(self, i + 1, c, u);
            group.pop_back();
        }
    };
    rec(rec, 0, ItemSet::full(universe), ItemSet(universe));
}

} // namespace detail

/// BJR / Strong-BJR test in O(n·m): only wholly unrepresented voters can form
/// a violating group, and the approvers of any single common item already do.
inline AxiomReport check_bjr_poly(const Instance& inst, const Profile& profile, const Budget& budget, AxiomId axiom)
{
    if (axiom.family != AxiomFamily::BJR && axiom.family != AxiomFamily::StrongBJR)
        throw Error(ErrorKind::InvalidSpec, "check_bjr_poly only handles BJR and Strong-BJR");
    detail::require_feasible(inst, budget);
    detail::WitnessPicker picker;
    if (detail::vacuous(budget, axiom.variant) || profile.size() == 0)
        return std::move(picker).report(axiom, CheckMethod::Polynomial);

    const double n = static_cast<double>(profile.size());
    const double denom = detail::entitlement(inst, budget, axiom.variant);

    std::vector<std::size_t> unrepresented;
    for (std::size_t i = 0; i < profile.size(); ++i)
        if (!profile.ballot(i).intersects(budget.selected())) unrepresented.push_back(i);

    for (std::size_t c = 0; c < inst.size(); ++c) {
        // Normalized costs are all >= 1, so any common item gives w(common) >= 1.
        if (axiom.family == AxiomFamily::BJR && !approx_eq(inst.cost(c), 1.0)) continue;
        std::vector<std::size_t> group;
        for (auto i : unrepresented)
            if (profile.ballot(i).contains(c)) group.push_back(i);
        if (group.empty() || !geq(static_cast<double>(group.size()) * denom / n, 1.0)) continue;

        ItemSet common = ItemSet::full(inst.size());
        for (auto i : group) common &= profile.ballot(i);
        picker.offer(AxiomWitness{group, 1.0, common, ItemSet(inst.size(), {c}), 0.0, 1.0});
    }
    return std::move(picker).report(axiom, CheckMethod::Polynomial);
}

/// Strong-BPJR by sweeping all cohesive groups. For a group V' the binding
/// level is l* = min(|V'|·D/n, w(common)); a violation at any l <= l*
/// implies one at l*.
inline AxiomReport check_strong_bpjr(const Instance& inst, const Profile& profile, const Budget& budget,
                                     AxiomVariant variant)
{
    const AxiomId id{AxiomFamily::StrongBPJR, variant};
    detail::require_feasible(inst, budget);
    detail::require_brute_force_size(profile);
    detail::WitnessPicker picker;
    if (detail::vacuous(budget, variant) || profile.size() == 0)
        return std::move(picker).report(id, CheckMethod::BruteForce);

    const double n = static_cast<double>(profile.size());
    const double denom = detail::entitlement(inst, budget, variant);
    detail::for_each_cohesive_group(
        profile, inst.size(), [&](const std::vector<std::size_t>& group, const ItemSet& common, const ItemSet& covered) {
            double level = std::min(static_cast<double>(group.size()) * denom / n, inst.weight(common));
            if (!geq(level, 1.0)) return;
            double represented = inst.weight(covered & budget.selected());
            if (less(represented, level)) picker.offer(AxiomWitness{group, level, common, common, represented, level});
        });
    return std::move(picker).report(id, CheckMethod::BruteForce);
}

/// BPJR: a qualifying group must be represented by at least the heaviest
/// common bundle that fits within |V'|·D/n.
inline AxiomReport check_bpjr(const Instance& inst, const Profile& profile, const Budget& budget, AxiomVariant variant)
{
    const AxiomId id{AxiomFamily::BPJR, variant};
    detail::require_feasible(inst, budget);
    detail::require_brute_force_size(profile);
    detail::WitnessPicker picker;
    if (detail::vacuous(budget, variant) || profile.size() == 0)
        return std::move(picker).report(id, CheckMethod::BruteForce);

    const double n = static_cast<double>(profile.size());
    const double denom = detail::entitlement(inst, budget, variant);
    detail::for_each_cohesive_group(
        profile, inst.size(), [&](const std::vector<std::size_t>& group, const ItemSet& common, const ItemSet& covered) {
            double cap = static_cast<double>(group.size()) * denom / n;
            double level = std::min(cap, inst.weight(common));
            if (!geq(level, 1.0)) return;
            double represented = inst.weight(covered & budget.selected());
            // Cheap exit: the threshold never exceeds l*.
            if (!less(represented, level)) return;
            auto bundle = best_bundle(inst, common, cap);
            if (less(represented, bundle.weight))
                picker.offer(AxiomWitness{group, level, common, bundle.items, represented, bundle.weight});
        });
    return std::move(picker).report(id, CheckMethod::BruteForce);
}

/// Local-BPJR: the group's represented items W' must not be strictly
/// extendable to a common bundle that is heaviest for some level
/// l <= |V'|·D/n. Any common bundle of weight w in [1, |V'|·D/n] is heaviest
/// at l = w, so it suffices to ask whether W' lies inside the common ballot
/// and some nonempty extension still fits; the witness uses the heaviest one.
inline AxiomReport check_local_bpjr(const Instance& inst, const Profile& profile, const Budget& budget,
                                    AxiomVariant variant)
{
    const AxiomId id{AxiomFamily::LocalBPJR, variant};
    detail::require_feasible(inst, budget);
    detail::require_brute_force_size(profile);
    detail::WitnessPicker picker;
    if (detail::vacuous(budget, variant) || profile.size() == 0)
        return std::move(picker).report(id, CheckMethod::BruteForce);

    const double n = static_cast<double>(profile.size());
    const double denom = detail::entitlement(inst, budget, variant);
    detail::for_each_cohesive_group(
        profile, inst.size(), [&](const std::vector<std::size_t>& group, const ItemSet& common, const ItemSet& covered) {
            double maxLevel = static_cast<double>(group.size()) * denom / n;
            if (!geq(maxLevel, 1.0)) return;
            ItemSet represented = covered & budget.selected();
            if (!represented.is_subset_of(common)) return;
            double representedWeight = inst.weight(represented);
            auto extension = best_bundle(inst, common - represented, maxLevel - representedWeight);
            if (extension.items.empty()) return;
            ItemSet bundle = represented | extension.items;
            double level = representedWeight + extension.weight;
            picker.offer(AxiomWitness{group, level, common, bundle, representedWeight, level});
        });
    return std::move(picker).report(id, CheckMethod::BruteForce);
}

inline AxiomReport check(const Instance& inst, const Profile& profile, const Budget& budget, AxiomId axiom)
{
    switch (axiom.family) {
    case AxiomFamily::StrongBJR:
    case AxiomFamily::BJR: return check_bjr_poly(inst, profile, budget, axiom);
    case AxiomFamily::StrongBPJR: return check_strong_bpjr(inst, profile, budget, axiom.variant);
    case AxiomFamily::BPJR: return check_bpjr(inst, profile, budget, axiom.variant);
    case AxiomFamily::LocalBPJR: return check_local_bpjr(inst, profile, budget, axiom.variant);
    }
    throw Error(ErrorKind::InvalidSpec, "unknown axiom");
}

namespace detail {

inline std::size_t axiom_index(AxiomId id)
{
    return (id.variant == AxiomVariant::L ? 0 : 5) + static_cast<std::size_t>(id.family);
}

// Drawn arrows of the implication diagram, before closure.
inline std::vector<std::pair<AxiomId, AxiomId>> direct_implications()
{
    std::vector<std::pair<AxiomId, AxiomId>> edges;
    for (auto v : {AxiomVariant::L, AxiomVariant::W}) {
        edges.push_back({{AxiomFamily::StrongBPJR, v}, {AxiomFamily::BPJR, v}});
        edges.push_back({{AxiomFamily::BPJR, v}, {AxiomFamily::LocalBPJR, v}});
        edges.push_back({{AxiomFamily::LocalBPJR, v}, {AxiomFamily::BJR, v}});
        edges.push_back({{AxiomFamily::StrongBPJR, v}, {AxiomFamily::StrongBJR, v}});
        edges.push_back({{AxiomFamily::StrongBJR, v}, {AxiomFamily::BJR, v}});
    }
    for (auto f : kAllFamilies) edges.push_back({{f, AxiomVariant::L}, {f, AxiomVariant::W}});
    return edges;
}

inline const std::array<std::array<bool, 10>, 10>& implication_closure()
{
    static const auto closure = [] {
        std::array<std::array<bool, 10>, 10> reach{};
        for (std::size_t i = 0; i < 10; ++i) reach[i][i] = true;
        for (auto [from, to] : direct_implications()) reach[axiom_index(from)][axiom_index(to)] = true;
        for (std::size_t k = 0; k < 10; ++k)
            for (std::size_t i = 0; i < 10; ++i)
                for (std::size_t j = 0; j < 10; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        return reach;
    }();
    return closure;
}

} // namespace detail

/// True when satisfying `b` guarantees satisfying `a`.
inline bool implied_by(AxiomId a, AxiomId b)
{
    return detail::implication_closure()[detail::axiom_index(b)][detail::axiom_index(a)];
}

/// Every (premise, conclusion) pair of the closed lattice with premise != conclusion.
inline std::vector<std::pair<AxiomId, AxiomId>> implication_edges()
{
    std::vector<std::pair<AxiomId, AxiomId>> out;
    for (auto from : all_axioms())
        for (auto to : all_axioms())
            if (!(from == to) && implied_by(to, from)) out.push_back({from, to});
    return out;
}

} // namespace propbudget
