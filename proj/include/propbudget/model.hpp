#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "propbudget/error.hpp"
#include "propbudget/item_set.hpp"

namespace propbudget {

/// Absolute tolerance shared by every cost and threshold comparison.
inline constexpr double kEps = 1e-9;

inline bool approx_eq(double a, double b) noexcept { return std::abs(a - b) <= kEps; }
inline bool leq(double a, double b) noexcept { return a <= b + kEps; }
inline bool geq(double a, double b) noexcept { return a >= b - kEps; }
inline bool less(double a, double b) noexcept { return a < b - kEps; }

struct RawItem {
    std::string name;
    double cost;
};

/// Items with normalized costs (cheapest item costs exactly 1) and a limit
/// expressed in the same unit.
class Instance {
public:
    std::size_t size() const noexcept { return costs_.size(); }
    double cost(std::size_t c) const { return costs_.at(c); }
    const std::vector<double>& costs() const noexcept { return costs_; }
    const std::string& name(std::size_t c) const { return names_.at(c); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    double limit() const noexcept { return limit_; }

    /// Raw currency units per normalized unit.
    double scale() const noexcept { return scale_; }

    double weight(const ItemSet& items) const
    {
        double w = 0.0;
        items.for_each([&](std::size_t c) { w += costs_[c]; });
        return w;
    }

    double total_cost() const { return std::accumulate(costs_.begin(), costs_.end(), 0.0); }

    std::optional<std::size_t> find(std::string_view itemName) const
    {
        auto it = std::find(names_.begin(), names_.end(), itemName);
        if (it == names_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_.begin());
    }

    ItemSet empty_set() const { return ItemSet(size()); }

    friend Instance normalize(const std::vector<RawItem>& items, double rawLimit);

private:
    std::vector<std::string> names_;
    std::vector<double> costs_;
    double limit_ = 0.0;
    double scale_ = 1.0;
};

/// Divides every cost and the limit by the cheapest raw cost.
inline Instance normalize(const std::vector<RawItem>& items, double rawLimit)
{
    if (items.empty()) throw Error(ErrorKind::InvalidCost, "instance has no items");
    if (!std::isfinite(rawLimit) || rawLimit < 0.0)
        throw Error(ErrorKind::InvalidLimit, "limit must be a finite non-negative number");
    double minCost = items.front().cost;
    for (const auto& item : items) {
        if (!std::isfinite(item.cost) || item.cost <= 0.0)
            throw Error(ErrorKind::InvalidCost, "item '" + item.name + "' has non-positive cost");
        minCost = std::min(minCost, item.cost);
    }

    Instance inst;
    inst.scale_ = minCost;
    inst.limit_ = rawLimit / minCost;
    for (const auto& item : items) {
        inst.names_.push_back(item.name);
        inst.costs_.push_back(item.cost / minCost);
    }
    return inst;
}

inline Instance normalize(const Instance& inst)
{
    std::vector<RawItem> items;
    for (std::size_t c = 0; c < inst.size(); ++c) items.push_back({inst.name(c), inst.cost(c)});
    return normalize(items, inst.limit());
}

/// One approval ballot per voter. Voters with empty ballots count towards n.
class Profile {
public:
    Profile() = default;

    Profile(const Instance& inst, const std::vector<std::vector<std::size_t>>& ballots,
            std::vector<std::string> labels = {})
        : labels_(std::move(labels))
    {
        for (const auto& ballot : ballots) {
            ItemSet set(inst.size());
            for (auto c : ballot) {
                if (c >= inst.size())
                    throw Error(ErrorKind::InvalidProfile, "ballot references unknown item index " + std::to_string(c));
                set.insert(c);
            }
            ballots_.push_back(std::move(set));
        }
        if (labels_.empty()) {
            for (std::size_t i = 0; i < ballots_.size(); ++i) labels_.push_back(std::to_string(i + 1));
        }
        if (labels_.size() != ballots_.size())
            throw Error(ErrorKind::InvalidProfile, "voter label count does not match ballot count");
    }

    std::size_t size() const noexcept { return ballots_.size(); }
    const ItemSet& ballot(std::size_t i) const { return ballots_.at(i); }
    const std::vector<ItemSet>& ballots() const noexcept { return ballots_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::size_t approvals(std::size_t c) const
    {
        return static_cast<std::size_t>(
            std::count_if(ballots_.begin(), ballots_.end(), [c](const ItemSet& b) { return b.contains(c); }));
    }

    ItemSet approved_items(std::size_t universe) const
    {
        ItemSet all(universe);
        for (const auto& b : ballots_) all |= b;
        return all;
    }

private:
    std::vector<ItemSet> ballots_;
    std::vector<std::string> labels_;
};

/// Selected item set together with its total cost.
class Budget {
public:
    Budget() = default;

    Budget(const Instance& inst, ItemSet selected)
        : selected_(std::move(selected))
    {
        if (selected_.universe() != inst.size())
            throw Error(ErrorKind::InvalidBudget, "budget is not over this instance's items");
        total_ = inst.weight(selected_);
    }

    Budget(const Instance& inst, std::initializer_list<std::size_t> items)
        : Budget(inst, make_set(inst, std::vector<std::size_t>(items)))
    {
    }

    Budget(const Instance& inst, const std::vector<std::size_t>& items)
        : Budget(inst, make_set(inst, items))
    {
    }

    const ItemSet& selected() const noexcept { return selected_; }
    double total_cost() const noexcept { return total_; }
    bool contains(std::size_t c) const noexcept { return selected_.contains(c); }

    friend bool operator==(const Budget& a, const Budget& b) noexcept { return a.selected_ == b.selected_; }

private:
    static ItemSet make_set(const Instance& inst, const std::vector<std::size_t>& items)
    {
        ItemSet set(inst.size());
        for (auto c : items) {
            if (c >= inst.size())
                throw Error(ErrorKind::InvalidBudget, "unknown item index " + std::to_string(c));
            set.insert(c);
        }
        return set;
    }

    ItemSet selected_;
    double total_ = 0.0;
};

inline bool is_feasible(const Instance& inst, const Budget& budget)
{
    if (budget.selected().universe() != inst.size())
        throw Error(ErrorKind::InvalidBudget, "budget is not over this instance's items");
    return leq(budget.total_cost(), inst.limit());
}

inline bool is_exhaustive(const Instance& inst, const Budget& budget)
{
    if (!is_feasible(inst, budget)) throw Error(ErrorKind::InvalidBudget, "budget exceeds the limit");
    for (std::size_t c = 0; c < inst.size(); ++c) {
        if (!budget.contains(c) && leq(budget.total_cost() + inst.cost(c), inst.limit())) return false;
    }
    return true;
}

/// Item indices sorted cheapest first, ties by index.
inline std::vector<std::size_t> cheapest_first_order(const Instance& inst)
{
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return less(inst.cost(a), inst.cost(b)); });
    return order;
}

/// Adds items cheapest first until nothing else fits. One pass suffices:
/// an item skipped once can never fit later because the budget only grows.
inline Budget fill_exhaustive(const Instance& inst, const Budget& budget)
{
    ItemSet selected = budget.selected();
    double total = budget.total_cost();
    for (auto c : cheapest_first_order(inst)) {
        if (selected.contains(c)) continue;
        if (leq(total + inst.cost(c), inst.limit())) {
            selected.insert(c);
            total += inst.cost(c);
        }
    }
    return Budget(inst, std::move(selected));
}

enum class AxiomFamily { StrongBJR, BJR, StrongBPJR, BPJR, LocalBPJR };
enum class AxiomVariant { L, W };

struct AxiomId {
    AxiomFamily family;
    AxiomVariant variant;

    friend bool operator==(const AxiomId&, const AxiomId&) = default;
};

inline constexpr std::array<AxiomFamily, 5> kAllFamilies = {
    AxiomFamily::StrongBJR, AxiomFamily::BJR, AxiomFamily::StrongBPJR, AxiomFamily::BPJR, AxiomFamily::LocalBPJR};

inline std::array<AxiomId, 10> all_axioms()
{
    std::array<AxiomId, 10> out{};
    std::size_t k = 0;
    for (auto v : {AxiomVariant::L, AxiomVariant::W})
        for (auto f : kAllFamilies) out[k++] = AxiomId{f, v};
    return out;
}

inline std::string to_string(AxiomId id)
{
    std::string s;
    switch (id.family) {
    case AxiomFamily::StrongBJR: s = "strong-bjr"; break;
    case AxiomFamily::BJR: s = "bjr"; break;
    case AxiomFamily::StrongBPJR: s = "strong-bpjr"; break;
    case AxiomFamily::BPJR: s = "bpjr"; break;
    case AxiomFamily::LocalBPJR: s = "local-bpjr"; break;
    }
    return s + (id.variant == AxiomVariant::L ? "-l" : "-w");
}

inline std::optional<AxiomId> parse_axiom(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    for (auto id : all_axioms())
        if (to_string(id) == lower) return id;
    return std::nullopt;
}

} // namespace propbudget
