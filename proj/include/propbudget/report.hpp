#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "propbudget/axioms.hpp"
#include "propbudget/error.hpp"
#include "propbudget/generate.hpp"
#include "propbudget/model.hpp"
#include "propbudget/oracle.hpp"
#include "propbudget/rules.hpp"

namespace propbudget {

// Machine-readable records are flat JSON objects (scalars and arrays of
// scalars only), one per line. Key names are listed in the README.

inline std::vector<std::string> item_names(const Instance& inst, const ItemSet& items)
{
    std::vector<std::string> out;
    items.for_each([&](std::size_t c) { out.push_back(inst.name(c)); });
    return out;
}

inline std::vector<std::string> voter_labels(const Profile& profile, const std::vector<std::size_t>& voters)
{
    std::vector<std::string> out;
    for (auto i : voters) out.push_back(profile.label(i));
    return out;
}

inline std::string method_name(CheckMethod m) { return m == CheckMethod::Polynomial ? "polynomial" : "brute-force"; }

inline nlohmann::ordered_json check_record(const Instance& inst, const Profile& profile, const Budget& budget,
                                           const AxiomReport& report)
{
    nlohmann::ordered_json j;
    j["record"] = "check";
    j["axiom"] = to_string(report.axiom);
    j["budget"] = item_names(inst, budget.selected());
    j["budget_cost"] = budget.total_cost();
    j["satisfied"] = report.satisfied;
    j["method"] = method_name(report.method);
    if (report.witness) {
        const auto& w = *report.witness;
        j["witness_voters"] = voter_labels(profile, w.voters);
        j["witness_level"] = w.level;
        j["witness_common"] = item_names(inst, w.commonItems);
        j["witness_bundle"] = item_names(inst, w.witnessBundle);
        j["witness_represented"] = w.representedWeight;
        j["witness_required"] = w.requiredWeight;
    }
    return j;
}

inline nlohmann::ordered_json solve_record(const Instance& inst, std::string_view rule, const Budget& budget,
                                           const RuleTrace* trace, TieBreakPolicy tie)
{
    nlohmann::ordered_json j;
    j["record"] = "solve";
    j["rule"] = rule;
    j["tie"] = to_string(tie);
    j["budget"] = item_names(inst, budget.selected());
    j["cost"] = budget.total_cost();
    j["cost_raw"] = budget.total_cost() * inst.scale();
    j["limit"] = inst.limit();
    j["feasible"] = is_feasible(inst, budget);
    j["exhaustive"] = is_exhaustive(inst, budget);
    if (trace) {
        std::vector<std::string> chosen;
        std::vector<double> loads;
        for (const auto& step : trace->steps) {
            chosen.push_back(inst.name(step.chosen));
            for (std::size_t k = 0; k < step.candidates.size(); ++k)
                if (step.candidates[k] == step.chosen) loads.push_back(step.loads[k]);
        }
        j["step_items"] = chosen;
        j["step_loads"] = loads;
        std::vector<std::string> filled;
        for (auto c : trace->filled) filled.push_back(inst.name(c));
        j["filled_unapproved"] = filled;
        if (trace->finalAssignment) j["max_load"] = trace->finalAssignment->maxLoad;
    }
    return j;
}

inline nlohmann::ordered_json step_record(const Instance& inst, std::size_t index, const RuleStep& step)
{
    nlohmann::ordered_json j;
    j["record"] = "step";
    j["step"] = index + 1;
    j["chosen"] = inst.name(step.chosen);
    std::vector<std::string> candidates, ties;
    for (auto c : step.candidates) candidates.push_back(inst.name(c));
    for (auto c : step.ties) ties.push_back(inst.name(c));
    j["candidates"] = candidates;
    j["loads"] = step.loads;
    j["ties"] = ties;
    return j;
}

inline nlohmann::ordered_json existence_record(const Instance& inst, const ExistenceReport& report)
{
    nlohmann::ordered_json j;
    j["record"] = "certify";
    j["axiom"] = to_string(report.axiom);
    j["exhaustive_only"] = report.exhaustiveOnly;
    j["exists"] = report.exists;
    j["total_feasible"] = report.totalFeasible;
    j["satisfying_count"] = report.satisfyingBudgets.size();
    std::vector<std::string> budgets;
    for (const auto& b : report.satisfyingBudgets) {
        std::string s;
        for (const auto& name : item_names(inst, b.selected())) s += (s.empty() ? "" : ",") + name;
        budgets.push_back(s);
    }
    j["satisfying_budgets"] = budgets;
    return j;
}

inline nlohmann::ordered_json budget_record(const Instance& inst, const Budget& budget)
{
    nlohmann::ordered_json j;
    j["record"] = "budget";
    j["budget"] = item_names(inst, budget.selected());
    j["cost"] = budget.total_cost();
    j["exhaustive"] = is_exhaustive(inst, budget);
    return j;
}

inline nlohmann::ordered_json implication_record(const Instance& inst, const ImplicationViolation& v)
{
    nlohmann::ordered_json j;
    j["record"] = "implication-violation";
    j["budget"] = item_names(inst, v.budget.selected());
    j["premise"] = to_string(v.premise);
    j["conclusion"] = to_string(v.conclusion);
    return j;
}

/// Reads a generator spec from JSON. Unknown keys are rejected.
///
/// {"m": 6, "n": 9, "seed": 1,
///  "cost": {"model": "uniform", "lo": 1, "hi": 3, "step": 0.5},
///  "ballots": {"model": "groups", "groups": 3, "overlap": 0.1, "bundle": 1},
///  "limit": {"fraction": 0.5}}
inline GenSpec parse_gen_spec(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidSpec, e.what());
    }
    auto fail = [](const std::string& msg) -> void { throw Error(ErrorKind::InvalidSpec, msg); };
    auto check_keys = [&](const nlohmann::json& obj, std::initializer_list<const char*> allowed) {
        if (!obj.is_object()) fail("expected an object");
        for (const auto& [key, _] : obj.items()) {
            bool ok = false;
            for (auto a : allowed) ok = ok || key == a;
            if (!ok) fail("unknown key '" + key + "'");
        }
    };

    GenSpec spec;
    try {
        check_keys(j, {"m", "n", "seed", "cost", "ballots", "limit"});
        spec.m = j.value("m", spec.m);
        spec.n = j.value("n", spec.n);
        spec.seed = j.value("seed", spec.seed);
        if (j.contains("cost")) {
            const auto& c = j["cost"];
            check_keys(c, {"model", "lo", "hi", "step", "alpha"});
            auto model = c.value("model", std::string("unit"));
            if (model == "unit") spec.costModel = CostModel::Unit;
            else if (model == "uniform") spec.costModel = CostModel::Uniform;
            else if (model == "heavy-tail") spec.costModel = CostModel::HeavyTail;
            else fail("unknown cost model '" + model + "'");
            spec.costLo = c.value("lo", spec.costLo);
            spec.costHi = c.value("hi", spec.costHi);
            spec.costStep = c.value("step", spec.costStep);
            spec.tailAlpha = c.value("alpha", spec.tailAlpha);
        }
        if (j.contains("ballots")) {
            const auto& b = j["ballots"];
            check_keys(b, {"model", "p", "groups", "overlap", "bundle"});
            auto model = b.value("model", std::string("impartial"));
            if (model == "impartial") spec.ballotModel = BallotModel::Impartial;
            else if (model == "groups") spec.ballotModel = BallotModel::Groups;
            else fail("unknown ballot model '" + model + "'");
            spec.approvalProb = b.value("p", spec.approvalProb);
            spec.groups = b.value("groups", spec.groups);
            spec.overlap = b.value("overlap", spec.overlap);
            spec.bundleSize = b.value("bundle", spec.bundleSize);
        }
        if (j.contains("limit")) {
            check_keys(j["limit"], {"fraction"});
            spec.limitFraction = j["limit"].value("fraction", spec.limitFraction);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidSpec, e.what());
    }
    return spec;
}

} // namespace propbudget
