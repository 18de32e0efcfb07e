// pbprop: command-line front end for the propbudget library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "propbudget/propbudget.hpp"
#include "propbudget/report.hpp"

namespace pb = propbudget;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeCap = 3;

std::string num(double v)
{
    auto s = pb::detail::format_number(v);
    if (s.find_first_of(".en") == std::string::npos) s += ".0";
    return s;
}

std::string set_text(const pb::Instance& inst, const pb::ItemSet& items)
{
    std::string out = "{";
    for (const auto& name : pb::item_names(inst, items)) out += (out.size() > 1 ? ", " : "") + name;
    return out + "}";
}

std::string voters_text(const pb::Profile& profile, const std::vector<std::size_t>& voters)
{
    std::string out = "{";
    for (const auto& label : pb::voter_labels(profile, voters)) out += (out.size() > 1 ? ", " : "") + label;
    return out + "}";
}

pb::Budget parse_budget(const pb::Instance& inst, const std::string& text)
{
    std::vector<std::size_t> items;
    for (const auto& field : pb::detail::split_fields(text)) {
        if (field.empty()) continue;
        auto c = inst.find(field);
        if (!c) throw pb::Error(pb::ErrorKind::UnknownItem, "unknown item '" + field + "' in --budget");
        items.push_back(*c);
    }
    return pb::Budget(inst, items);
}

pb::AxiomId parse_axiom_arg(const std::string& text)
{
    auto id = pb::parse_axiom(text);
    if (!id) throw pb::Error(pb::ErrorKind::ParseError, "unknown axiom '" + text + "'");
    return *id;
}

void print_witness(const pb::Instance& inst, const pb::Profile& profile, const pb::AxiomWitness& w)
{
    std::cout << "witness voters: " << voters_text(profile, w.voters) << "\n"
              << "  level: " << num(w.level) << "\n"
              << "  common items: " << set_text(inst, w.commonItems) << "\n"
              << "  bundle: " << set_text(inst, w.witnessBundle) << "\n"
              << "  represented: " << num(w.representedWeight) << "\n"
              << "  required: " << num(w.requiredWeight) << "\n";
}

struct Options {
    bool json = false;
    std::string file;

    std::string rule = "gpseq";
    std::string tie = "lex";
    bool fillUnapproved = false;
    bool trace = false;

    std::string axiom;
    std::string budget;
    bool exhaustive = false;
    bool allBudgets = false;

    std::string spec;
    std::string output;
};

int run_solve(const Options& o)
{
    auto election = pb::load_instance(o.file);
    const auto& inst = election.instance;
    const auto& profile = election.profile;
    auto tie = pb::parse_tie_break(o.tie);
    if (!tie) throw pb::Error(pb::ErrorKind::ParseError, "unknown tie-breaking policy '" + o.tie + "'");

    std::optional<pb::RuleTrace> trace;
    std::optional<pb::Budget> budget;
    if (o.rule == "gpseq") {
        auto [b, t] = pb::gpseq(inst, profile, {*tie, o.fillUnapproved});
        budget = b;
        trace = std::move(t);
    } else if (o.rule == "greedy-bjr") {
        budget = pb::greedy_bjr_l(inst, profile);
    } else if (o.rule == "bpjr-construct") {
        budget = pb::bpjr_construct(inst, profile);
    } else {
        throw pb::Error(pb::ErrorKind::ParseError, "unknown rule '" + o.rule + "'");
    }

    if (o.json) {
        std::cout << pb::solve_record(inst, o.rule, *budget, trace ? &*trace : nullptr, *tie).dump() << "\n";
        if (trace && o.trace)
            for (std::size_t k = 0; k < trace->steps.size(); ++k)
                std::cout << pb::step_record(inst, k, trace->steps[k]).dump() << "\n";
        return kExitOk;
    }

    std::cout << "rule: " << o.rule;
    if (o.rule == "gpseq") std::cout << " (ties: " << pb::to_string(*tie) << ")";
    std::cout << "\nbudget: " << set_text(inst, budget->selected()) << "\n"
              << "cost: " << num(budget->total_cost()) << " of limit " << num(inst.limit()) << "\n"
              << "exhaustive: " << (pb::is_exhaustive(inst, *budget) ? "yes" : "no") << "\n";
    if (trace) {
        for (std::size_t k = 0; k < trace->steps.size(); ++k) {
            const auto& step = trace->steps[k];
            double load = 0.0;
            for (std::size_t j = 0; j < step.candidates.size(); ++j)
                if (step.candidates[j] == step.chosen) load = step.loads[j];
            std::cout << "step " << k + 1 << ": " << inst.name(step.chosen) << "  max load " << num(load) << "\n";
            if (o.trace) {
                for (std::size_t j = 0; j < step.candidates.size(); ++j)
                    std::cout << "    " << inst.name(step.candidates[j]) << "  " << num(step.loads[j]) << "\n";
                if (step.ties.size() > 1) std::cout << "    ties: " << step.ties.size() << "\n";
            }
        }
        if (!trace->filled.empty()) {
            std::cout << "filled unapproved:";
            for (auto c : trace->filled) std::cout << " " << inst.name(c);
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_check(const Options& o)
{
    auto election = pb::load_instance(o.file);
    const auto& inst = election.instance;
    const auto& profile = election.profile;
    auto axiom = parse_axiom_arg(o.axiom);
    auto budget = parse_budget(inst, o.budget);
    auto report = pb::check(inst, profile, budget, axiom);

    if (o.json) {
        std::cout << pb::check_record(inst, profile, budget, report).dump() << "\n";
    } else {
        std::cout << pb::to_string(axiom) << " on " << set_text(inst, budget.selected()) << ": "
                  << (report.satisfied ? "satisfied" : "violated") << " (" << pb::method_name(report.method) << ")\n";
        if (report.witness) print_witness(inst, profile, *report.witness);
    }
    return report.satisfied ? kExitOk : kExitViolation;
}

int run_enumerate(const Options& o)
{
    auto election = pb::load_instance(o.file);
    const auto& inst = election.instance;
    auto budgets = pb::enumerate_feasible(inst, o.exhaustive);
    for (const auto& b : budgets) {
        if (o.json)
            std::cout << pb::budget_record(inst, b).dump() << "\n";
        else
            std::cout << set_text(inst, b.selected()) << "  cost " << num(b.total_cost()) << "\n";
    }
    if (!o.json) std::cout << budgets.size() << (o.exhaustive ? " exhaustive" : " feasible") << " budgets\n";
    return kExitOk;
}

int run_certify(const Options& o)
{
    auto election = pb::load_instance(o.file);
    const auto& inst = election.instance;
    auto axiom = parse_axiom_arg(o.axiom);
    auto report = pb::certify_existence(inst, election.profile, axiom, o.exhaustive);

    if (o.json) {
        std::cout << pb::existence_record(inst, report).dump() << "\n";
        return kExitOk;
    }
    std::cout << pb::to_string(axiom) << " over " << report.totalFeasible
              << (o.exhaustive ? " exhaustive" : " feasible") << " budgets: exists=" << (report.exists ? "true" : "false")
              << "\n";
    for (const auto& b : report.satisfyingBudgets) std::cout << "  " << set_text(inst, b.selected()) << "\n";
    return kExitOk;
}

int run_verify(const Options& o)
{
    auto election = pb::load_instance(o.file);
    const auto& inst = election.instance;
    auto budgets = pb::enumerate_feasible(inst, !o.allBudgets);
    auto violations = pb::verify_implications(inst, election.profile, budgets);

    if (o.json) {
        for (const auto& v : violations) std::cout << pb::implication_record(inst, v).dump() << "\n";
    } else {
        std::cout << budgets.size() << " budgets, " << pb::implication_edges().size() << " implications, "
                  << violations.size() << " violations\n";
        for (const auto& v : violations)
            std::cout << "  " << set_text(inst, v.budget.selected()) << ": " << pb::to_string(v.premise)
                      << " holds but " << pb::to_string(v.conclusion) << " fails\n";
    }
    return violations.empty() ? kExitOk : kExitViolation;
}

int run_gen(const Options& o)
{
    auto spec = pb::parse_gen_spec(pb::read_text_file(o.spec));
    auto text = pb::serialize(pb::generate_file(spec));
    pb::parse_instance(text);
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw pb::Error(pb::ErrorKind::InvalidSpec, "cannot write '" + o.output + "'");
    out << text;
    if (!o.json) std::cerr << "wrote " << o.output << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Proportional participatory budgeting: rules, axiom checks and exact oracles"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit one flat JSON record per line instead of text");

    auto* solve = app.add_subcommand("solve", "Run a budgeting rule");
    solve->add_option("--rule", o.rule, "gpseq | greedy-bjr | bpjr-construct")->capture_default_str();
    solve->add_option("--tie", o.tie, "lex | cheapest | most-approved (gpseq only)")->capture_default_str();
    solve->add_flag("--fill-unapproved", o.fillUnapproved, "Top up with unapproved items, cheapest first");
    solve->add_flag("--trace", o.trace, "Show every candidate and its load at each step");
    solve->add_option("FILE", o.file)->required();

    auto* check = app.add_subcommand("check", "Check one axiom on a budget");
    check->add_option("--axiom", o.axiom, "e.g. strong-bjr-l, bpjr-w, local-bpjr-l")->required();
    check->add_option("--budget", o.budget, "Comma-separated item ids; empty for the empty budget")->required();
    check->add_option("FILE", o.file)->required();

    auto* enumerate = app.add_subcommand("enumerate", "List feasible budgets");
    enumerate->add_flag("--exhaustive", o.exhaustive, "Only exhaustive budgets");
    enumerate->add_option("FILE", o.file)->required();

    auto* certify = app.add_subcommand("certify", "Decide whether a satisfying budget exists");
    certify->add_option("--axiom", o.axiom)->required();
    certify->add_flag("--exhaustive", o.exhaustive, "Only consider exhaustive budgets");
    certify->add_option("FILE", o.file)->required();

    auto* verify = app.add_subcommand("verify-implications", "Check every axiom implication on enumerated budgets");
    verify->add_flag("--all-budgets", o.allBudgets, "Include non-exhaustive feasible budgets");
    verify->add_option("FILE", o.file)->required();

    auto* gen = app.add_subcommand("gen", "Generate a random instance from a JSON spec");
    gen->add_option("--spec", o.spec)->required();
    gen->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve) return run_solve(o);
        if (*check) return run_check(o);
        if (*enumerate) return run_enumerate(o);
        if (*certify) return run_certify(o);
        if (*verify) return run_verify(o);
        if (*gen) return run_gen(o);
    } catch (const pb::Error& e) {
        std::cerr << "error (" << pb::to_string(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == pb::ErrorKind::TooLargeForExact ? kExitSizeCap : kExitUsage;
    }
    return kExitUsage;
}
