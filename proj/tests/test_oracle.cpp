#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "propbudget/oracle.hpp"
#include "propbudget/rules.hpp"
#include "reference.hpp"
#include "suite.hpp"

using namespace propbudget;
using fixtures::names;

namespace {
using Names = std::vector<std::string>;
}

TEST(Enumerate, ExampleOneExhaustive)
{
    auto e = fixtures::load_fixture("ex1.pb");
    auto budgets = enumerate_feasible(e.instance, true);
    ASSERT_EQ(budgets.size(), 2u);
    EXPECT_EQ(names(e.instance, budgets[0].selected()), (Names{"c1", "c3"}));
    EXPECT_EQ(names(e.instance, budgets[1].selected()), (Names{"c2", "c3"}));
    EXPECT_EQ(enumerate_feasible(e.instance, false).size(), 6u);
}

TEST(Enumerate, EdgeCases)
{
    auto zero = normalize({{"a", 1}, {"b", 2}}, 0);
    auto only = enumerate_feasible(zero, false);
    ASSERT_EQ(only.size(), 1u);
    EXPECT_TRUE(only[0].selected().empty());

    auto unit = normalize({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}, 4);
    auto full = enumerate_feasible(unit, true);
    ASSERT_EQ(full.size(), 1u);
    EXPECT_EQ(full[0].selected().size(), 4u);
    EXPECT_EQ(enumerate_feasible(unit, false).size(), 16u);

    std::vector<RawItem> many;
    for (int c = 0; c < 21; ++c) many.push_back({"c" + std::to_string(c), 1});
    EXPECT_THROW(enumerate_feasible(normalize(many, 3), false), Error);
}

TEST(Enumerate, LexicographicOrder)
{
    auto e = suite::mixed(3);
    auto budgets = enumerate_feasible(e.instance, false);
    for (std::size_t k = 1; k < budgets.size(); ++k)
        EXPECT_TRUE(lex_less(budgets[k - 1].selected(), budgets[k].selected()));
}

TEST(Enumerate, CountsMatchIndependentRecursion)
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto e = suite::mixed(seed, 10, 9);
        EXPECT_EQ(enumerate_feasible(e.instance, false).size(), reference::count_feasible(e.instance, false));
        EXPECT_EQ(enumerate_feasible(e.instance, true).size(), reference::count_feasible(e.instance, true));
    }
}

TEST(Certify, ExampleOne)
{
    auto e = fixtures::load_fixture("ex1.pb");
    auto strong = certify_existence(e.instance, e.profile, {AxiomFamily::StrongBJR, AxiomVariant::L}, false);
    EXPECT_FALSE(strong.exists);
    EXPECT_EQ(strong.totalFeasible, 6u);
    EXPECT_FALSE(certify_existence(e.instance, e.profile, {AxiomFamily::StrongBPJR, AxiomVariant::L}, false).exists);

    auto bpjr = certify_existence(e.instance, e.profile, {AxiomFamily::BPJR, AxiomVariant::L}, true);
    EXPECT_TRUE(bpjr.exists);
    EXPECT_EQ(bpjr.satisfyingBudgets.size(), 2u);
}

TEST(Certify, NonExistenceIsBackedByWitnesses)
{
    auto e = fixtures::load_fixture("ex1.pb");
    for (const auto& b : enumerate_feasible(e.instance, false)) {
        auto r = check(e.instance, e.profile, b, {AxiomFamily::StrongBPJR, AxiomVariant::L});
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_FALSE(reference::satisfies(e.instance, e.profile, b, r.axiom));
        // The witness group is wholly unrepresented in every case here.
        for (auto i : r.witness->voters) EXPECT_FALSE(e.profile.ballot(i).intersects(b.selected()));
    }
}

TEST(Certify, EmptyBudgetSatisfiesWVariants)
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto e = suite::mixed(seed);
        auto r = certify_existence(e.instance, e.profile, {AxiomFamily::BJR, AxiomVariant::W}, false);
        ASSERT_TRUE(r.exists);
        EXPECT_TRUE(r.satisfyingBudgets.front().selected().empty());
    }
}

TEST(Certify, GpseqOutputIsAmongLocalBpjrSatisfiers)
{
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        auto e = suite::mixed(seed);
        auto out = gpseq(e.instance, e.profile).first;
        auto r = certify_existence(e.instance, e.profile, {AxiomFamily::LocalBPJR, AxiomVariant::L}, false);
        bool found = false;
        for (const auto& b : r.satisfyingBudgets) found = found || b == out;
        EXPECT_TRUE(found) << seed;
    }
}

TEST(Implications, ExampleTwo)
{
    auto e = fixtures::load_fixture("ex2.pb");
    Budget b(e.instance, {1, 2});
    EXPECT_TRUE(verify_implications(e.instance, e.profile, {b}).empty());
    auto verdicts = evaluate_all(e.instance, e.profile, b);
    EXPECT_TRUE(verdicts[detail::axiom_index({AxiomFamily::LocalBPJR, AxiomVariant::L})]);
    EXPECT_FALSE(verdicts[detail::axiom_index({AxiomFamily::BPJR, AxiomVariant::W})]);
}

TEST(Implications, HoldOnRandomInstances)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto e = suite::mixed(seed);
        auto budgets = enumerate_feasible(e.instance, false);
        EXPECT_TRUE(verify_implications(e.instance, e.profile, budgets).empty()) << seed;
    }
}

TEST(Implications, UnitCostVariantsCoincideOnFullSpend)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto e = suite::unit_cost(seed);
        for (const auto& b : enumerate_feasible(e.instance, true)) {
            if (!approx_eq(b.total_cost(), e.instance.limit())) continue;
            auto v = evaluate_all(e.instance, e.profile, b);
            for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(v[k], v[k + 5]);
        }
    }
}
