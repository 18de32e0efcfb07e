#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace propbudget {

/// Dense bitset over item indices 0..universe-1.
///
/// Ordering (`lex_less`) compares the ascending index sequences
/// lexicographically, so {0} < {0,1} < {0,2} < {1}.
class ItemSet {
public:
    ItemSet() = default;

    explicit ItemSet(std::size_t universe)
        : universe_(universe)
        , words_((universe + 63) / 64, 0)
    {
    }

    ItemSet(std::size_t universe, std::initializer_list<std::size_t> items)
        : ItemSet(universe)
    {
        for (auto c : items) insert(c);
    }

    ItemSet(std::size_t universe, std::span<const std::size_t> items)
        : ItemSet(universe)
    {
        for (auto c : items) insert(c);
    }

    static ItemSet full(std::size_t universe)
    {
        ItemSet s(universe);
        for (std::size_t c = 0; c < universe; ++c) s.insert(c);
        return s;
    }

    /// Bits of `mask` select positions of `members` (at most 64).
    static ItemSet from_mask(std::size_t universe, std::span<const std::size_t> members, std::uint64_t mask)
    {
        ItemSet s(universe);
        while (mask != 0) {
            auto bit = static_cast<std::size_t>(std::countr_zero(mask));
            s.insert(members[bit]);
            mask &= mask - 1;
        }
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(std::size_t c) const noexcept
    {
        return c < universe_ && ((words_[c / 64] >> (c % 64)) & 1U) != 0;
    }

    void insert(std::size_t c) { words_.at(c / 64) |= std::uint64_t{1} << (c % 64); }
    void erase(std::size_t c) { words_.at(c / 64) &= ~(std::uint64_t{1} << (c % 64)); }

    std::size_t size() const noexcept
    {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const noexcept
    {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    bool is_subset_of(const ItemSet& other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto o = i < other.words_.size() ? other.words_[i] : 0;
            if ((words_[i] & ~o) != 0) return false;
        }
        return true;
    }

    bool intersects(const ItemSet& other) const noexcept
    {
        auto k = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < k; ++i)
            if ((words_[i] & other.words_[i]) != 0) return true;
        return false;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for_each([&](std::size_t c) { out.push_back(c); });
        return out;
    }

    ItemSet& operator&=(const ItemSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return *this;
    }

    ItemSet& operator|=(const ItemSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    ItemSet& operator-=(const ItemSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend ItemSet operator&(ItemSet a, const ItemSet& b) { return a &= b; }
    friend ItemSet operator|(ItemSet a, const ItemSet& b) { return a |= b; }
    friend ItemSet operator-(ItemSet a, const ItemSet& b) { return a -= b; }

    friend bool operator==(const ItemSet& a, const ItemSet& b) noexcept
    {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    friend bool lex_less(const ItemSet& a, const ItemSet& b)
    {
        auto x = a.indices();
        auto y = b.indices();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace propbudget
