#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "propbudget/error.hpp"
#include "propbudget/item_set.hpp"
#include "propbudget/model.hpp"

namespace propbudget {

/// Largest exact subset-enumeration problem the checkers accept.
inline constexpr std::size_t kMaxBundleItems = 25;

struct Bundle {
    double weight = 0.0;
    ItemSet items;
};

namespace detail {

// Lexicographic order of ascending index sequences, on masks over the same
// member list.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) noexcept
{
    std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    std::uint64_t above = ~((low << 1) - 1);
    if ((a & low) != 0) return (b & above) != 0;
    return (a & above) == 0;
}

} // namespace detail

/// Heaviest subset of `items` whose weight stays within `cap`.
///
/// Ties on weight prefer fewer items, then the lexicographically smallest
/// index sequence. The empty bundle (weight 0) is returned when nothing fits.
inline Bundle best_bundle(const Instance& inst, const ItemSet& items, double cap)
{
    auto members = items.indices();
    if (members.size() > kMaxBundleItems)
        throw Error(ErrorKind::TooLargeForExact,
                    "bundle search over " + std::to_string(members.size()) + " items exceeds the exact limit");

    std::vector<double> w;
    w.reserve(members.size());
    for (auto c : members) w.push_back(inst.cost(c));

    double bestWeight = 0.0;
    std::uint64_t bestMask = 0;
    auto consider = [&](std::uint64_t mask, double weight) {
        if (weight > bestWeight + kEps) {
            bestWeight = weight;
            bestMask = mask;
            return;
        }
        if (weight < bestWeight - kEps) return;
        auto pc = std::popcount(mask), pb = std::popcount(bestMask);
        if (pc < pb || (pc == pb && detail::mask_lex_less(mask, bestMask))) {
            bestWeight = weight;
            bestMask = mask;
        }
    };

    // Depth-first include/exclude with cap pruning.
    auto rec = [&](auto&& self, std::size_t k, std::uint64_t mask, double weight) -> void {
        if (k == members.size()) {
            if (mask != 0) consider(mask, weight);
            return;
        }
        if (leq(weight + w[k], cap)) self(self, k + 1, mask | (std::uint64_t{1} << k), weight + w[k]);
        self(self, k + 1, mask, weight);
    };
    if (cap >= -kEps) rec(rec, 0, 0, 0.0);

    return Bundle{bestWeight, ItemSet::from_mask(inst.size(), members, bestMask)};
}

inline double max_bundle_weight(const Instance& inst, const ItemSet& items, double cap)
{
    if (cap < 0.0) throw Error(ErrorKind::InvalidLimit, "bundle cap must be non-negative");
    return best_bundle(inst, items, cap).weight;
}

/// Distinct weights of nonempty subsets of `items`, ascending, merged within kEps.
inline std::vector<double> achievable_weights(const Instance& inst, const ItemSet& items)
{
    auto members = items.indices();
    if (members.size() > kMaxBundleItems)
        throw Error(ErrorKind::TooLargeForExact, "weight enumeration exceeds the exact limit");
    std::vector<double> sums{0.0};
    for (auto c : members) {
        auto k = sums.size();
        for (std::size_t i = 0; i < k; ++i) sums.push_back(sums[i] + inst.cost(c));
    }
    std::sort(sums.begin(), sums.end());
    std::vector<double> out;
    for (auto s : sums) {
        if (s < kEps) continue;
        if (out.empty() || s > out.back() + kEps) out.push_back(s);
    }
    return out;
}

} // namespace propbudget
