#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "propbudget/error.hpp"
#include "propbudget/io.hpp"
#include "propbudget/model.hpp"

namespace propbudget {

enum class CostModel { Unit, Uniform, HeavyTail };
enum class BallotModel { Impartial, Groups };

struct GenSpec {
    std::size_t m = 6;
    std::size_t n = 9;

    CostModel costModel = CostModel::Unit;
    double costLo = 1.0;
    double costHi = 3.0;
    /// Raw costs are rounded to multiples of this step.
    double costStep = 0.01;
    double tailAlpha = 1.5;

    BallotModel ballotModel = BallotModel::Impartial;
    double approvalProb = 0.3;
    std::size_t groups = 3;
    /// Probability that a bloc member also approves each item outside its bundle.
    double overlap = 0.0;
    /// Items in each bloc's shared bundle.
    std::size_t bundleSize = 1;

    /// Limit as a fraction of the total raw cost.
    double limitFraction = 0.5;

    std::uint64_t seed = 1;
};

namespace detail {

inline double unit_interval(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double round_to_step(double x, double step) { return std::max(step, std::round(x / step) * step); }

inline void validate(const GenSpec& s)
{
    auto bad = [](const std::string& msg) { throw Error(ErrorKind::InvalidSpec, msg); };
    if (s.m == 0) bad("m must be positive");
    if (s.n == 0) bad("n must be positive");
    if (!(s.costStep > 0.0)) bad("costStep must be positive");
    if (s.costModel != CostModel::Unit && !(s.costLo > 0.0 && s.costHi >= s.costLo)) bad("need 0 < costLo <= costHi");
    if (s.costModel == CostModel::HeavyTail && !(s.tailAlpha > 0.0)) bad("tailAlpha must be positive");
    if (!(s.limitFraction > 0.0 && s.limitFraction <= 1.0)) bad("limitFraction must be in (0, 1]");
    if (s.ballotModel == BallotModel::Impartial && !(s.approvalProb >= 0.0 && s.approvalProb <= 1.0))
        bad("approvalProb must be in [0, 1]");
    if (s.ballotModel == BallotModel::Groups) {
        if (s.groups == 0 || s.groups > s.n) bad("groups must be in [1, n]");
        if (s.bundleSize == 0 || s.groups * s.bundleSize > s.m) bad("groups * bundleSize must not exceed m");
        if (!(s.overlap >= 0.0 && s.overlap <= 1.0)) bad("overlap must be in [0, 1]");
    }
}

} // namespace detail

/// Deterministic in `spec.seed`; uses only the raw 64-bit engine output so
/// instances are identical across standard library implementations.
inline InstanceFile generate_file(const GenSpec& spec)
{
    detail::validate(spec);
    std::mt19937_64 rng(spec.seed);

    InstanceFile file;
    file.name = "gen-seed-" + std::to_string(spec.seed);
    double total = 0.0, minCost = 0.0;
    for (std::size_t c = 0; c < spec.m; ++c) {
        double cost = 1.0;
        switch (spec.costModel) {
        case CostModel::Unit: break;
        case CostModel::Uniform:
            cost = detail::round_to_step(spec.costLo + detail::unit_interval(rng) * (spec.costHi - spec.costLo),
                                         spec.costStep);
            break;
        case CostModel::HeavyTail: {
            double u = 1.0 - detail::unit_interval(rng);
            cost = detail::round_to_step(spec.costLo / std::pow(u, 1.0 / spec.tailAlpha), spec.costStep);
            break;
        }
        }
        total += cost;
        minCost = c == 0 ? cost : std::min(minCost, cost);
        auto id = "c" + std::to_string(c + 1);
        file.items.push_back({id, id, detail::format_number(cost)});
    }

    double limit = spec.limitFraction * total;
    if (limit < minCost - kEps)
        throw Error(ErrorKind::InvalidSpec, "limitFraction leaves a limit below the cheapest item");
    file.rawLimit = detail::format_number(limit);

    for (std::size_t i = 0; i < spec.n; ++i) {
        InstanceFile::Ballot ballot{std::to_string(i + 1), {}};
        if (spec.ballotModel == BallotModel::Impartial) {
            for (std::size_t c = 0; c < spec.m; ++c)
                if (detail::unit_interval(rng) < spec.approvalProb) ballot.items.push_back(file.items[c].id);
        } else {
            std::size_t bloc = i * spec.groups / spec.n;
            std::size_t first = bloc * spec.bundleSize, last = first + spec.bundleSize;
            for (std::size_t c = 0; c < spec.m; ++c) {
                bool shared = c >= first && c < last;
                if (shared || detail::unit_interval(rng) < spec.overlap) ballot.items.push_back(file.items[c].id);
            }
        }
        file.ballots.push_back(std::move(ballot));
    }
    return file;
}

inline Election generate(const GenSpec& spec) { return to_election(generate_file(spec)); }

} // namespace propbudget
