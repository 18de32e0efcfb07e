#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "propbudget/error.hpp"
#include "propbudget/item_set.hpp"
#include "propbudget/model.hpp"

namespace propbudget {

/// Fractional spread of selected item costs over approving voters.
struct LoadAssignment {
    /// spread[c][i]: share of item c's cost carried by voter i.
    std::vector<std::vector<double>> spread;
    std::vector<double> voterLoad;
    double maxLoad = 0.0;
};

namespace detail {

/// Dinic max-flow on real capacities.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t nodes)
        : adj_(nodes)
        , level_(nodes)
        , next_(nodes)
    {
    }

    std::size_t add_edge(std::size_t from, std::size_t to, double cap)
    {
        adj_[from].push_back(edges_.size());
        edges_.push_back({to, cap});
        adj_[to].push_back(edges_.size());
        edges_.push_back({from, 0.0});
        return edges_.size() - 2;
    }

    double flow_on(std::size_t edge) const { return edges_[edge ^ 1].cap; }

    double run(std::size_t source, std::size_t sink)
    {
        double total = 0.0;
        while (bfs(source, sink)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (true) {
                double pushed = dfs(source, sink, std::numeric_limits<double>::infinity());
                if (pushed <= kResidual) break;
                total += pushed;
            }
        }
        return total;
    }

private:
    static constexpr double kResidual = 1e-15;

    struct Edge {
        std::size_t to;
        double cap;
    };

    bool bfs(std::size_t source, std::size_t sink)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::size_t> q;
        level_[source] = 0;
        q.push(source);
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            for (auto e : adj_[v]) {
                if (edges_[e].cap > kResidual && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[v] + 1;
                    q.push(edges_[e].to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    double dfs(std::size_t v, std::size_t sink, double limit)
    {
        if (v == sink) return limit;
        for (auto& k = next_[v]; k < adj_[v].size(); ++k) {
            auto e = adj_[v][k];
            auto to = edges_[e].to;
            if (edges_[e].cap <= kResidual || level_[to] != level_[v] + 1) continue;
            double pushed = dfs(to, sink, std::min(limit, edges_[e].cap));
            if (pushed > kResidual) {
                edges_[e].cap -= pushed;
                edges_[e ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0.0;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Edge> edges_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

struct LoadNetwork {
    double routed = 0.0;
    LoadAssignment assignment;
};

// Routes every selected item's cost to its approvers with each voter capped at `cap`.
inline LoadNetwork route_loads(const Instance& inst, const Profile& profile, const std::vector<std::size_t>& items,
                               double cap)
{
    const std::size_t k = items.size(), n = profile.size();
    const std::size_t source = 0, sink = 1 + k + n;
    MaxFlow net(k + n + 2);
    double total = 0.0;
    for (auto c : items) total += inst.cost(c);

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> arcs(k);
    for (std::size_t j = 0; j < k; ++j) {
        net.add_edge(source, 1 + j, inst.cost(items[j]));
        for (std::size_t i = 0; i < n; ++i)
            if (profile.ballot(i).contains(items[j])) arcs[j].push_back({i, net.add_edge(1 + j, 1 + k + i, total)});
    }
    for (std::size_t i = 0; i < n; ++i) net.add_edge(1 + k + i, sink, cap);

    LoadNetwork out;
    out.routed = net.run(source, sink);
    out.assignment.spread.assign(inst.size(), std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < k; ++j)
        for (auto [voter, edge] : arcs[j]) out.assignment.spread[items[j]][voter] = net.flow_on(edge);
    return out;
}

} // namespace detail

/// Minimizes the maximum voter load over all ways of spreading the selected
/// items' costs across their approvers. Binary search on the voter cap with a
/// max-flow feasibility test at each probe.
inline LoadAssignment min_max_load(const Instance& inst, const Profile& profile, const ItemSet& selected)
{
    const std::size_t n = profile.size();
    auto items = selected.indices();
    for (auto c : items) {
        if (c >= inst.size()) throw Error(ErrorKind::InvalidBudget, "unknown item index");
        if (profile.approvals(c) == 0)
            throw Error(ErrorKind::NoApprover, "item '" + inst.name(c) + "' has no approving voter");
    }

    double total = 0.0, lo = 0.0;
    std::vector<double> equalSplit(n, 0.0);
    for (auto c : items) {
        auto approvers = static_cast<double>(profile.approvals(c));
        total += inst.cost(c);
        lo = std::max(lo, inst.cost(c) / approvers);
        for (std::size_t i = 0; i < n; ++i)
            if (profile.ballot(i).contains(c)) equalSplit[i] += inst.cost(c) / approvers;
    }
    double hi = n == 0 ? 0.0 : *std::max_element(equalSplit.begin(), equalSplit.end());
    const double slack = 1e-12 * std::max(1.0, total);

    for (int iter = 0; iter < 60 && hi - lo > 1e-12; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (detail::route_loads(inst, profile, items, mid).routed >= total - slack)
            hi = mid;
        else
            lo = mid;
    }

    auto result = detail::route_loads(inst, profile, items, hi).assignment;
    result.voterLoad.assign(n, 0.0);
    for (std::size_t c = 0; c < inst.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) result.voterLoad[i] += result.spread[c][i];
    result.maxLoad = n == 0 ? 0.0 : *std::max_element(result.voterLoad.begin(), result.voterLoad.end());
    return result;
}

} // namespace propbudget
