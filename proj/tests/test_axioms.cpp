#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "propbudget/axioms.hpp"
#include "propbudget/oracle.hpp"
#include "reference.hpp"
#include "suite.hpp"

using namespace propbudget;

namespace {

constexpr AxiomId kStrongBjrL{AxiomFamily::StrongBJR, AxiomVariant::L};
constexpr AxiomId kBjrL{AxiomFamily::BJR, AxiomVariant::L};
constexpr AxiomId kBjrW{AxiomFamily::BJR, AxiomVariant::W};
constexpr AxiomId kStrongBpjrL{AxiomFamily::StrongBPJR, AxiomVariant::L};
constexpr AxiomId kBpjrL{AxiomFamily::BPJR, AxiomVariant::L};
constexpr AxiomId kBpjrW{AxiomFamily::BPJR, AxiomVariant::W};
constexpr AxiomId kLocalL{AxiomFamily::LocalBPJR, AxiomVariant::L};

std::vector<Budget> sample_budgets(const Instance& inst, std::size_t every)
{
    auto all = enumerate_feasible(inst, false);
    std::vector<Budget> out;
    for (std::size_t k = 0; k < all.size(); k += every) out.push_back(all[k]);
    return out;
}

} // namespace

TEST(StrongBjr, ExampleOneWitness)
{
    auto e = fixtures::load_fixture("ex1.pb");
    Budget b(e.instance, {0, 2});
    auto r = check_bjr_poly(e.instance, e.profile, b, kStrongBjrL);
    ASSERT_FALSE(r.satisfied);
    EXPECT_EQ(r.witness->voters, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(r.method, CheckMethod::Polynomial);
    EXPECT_TRUE(check_bjr_poly(e.instance, e.profile, b, kBjrL).satisfied);
}

TEST(StrongBpjr, ExampleOneHasNoSatisfyingBudget)
{
    auto e = fixtures::load_fixture("ex1.pb");
    for (const auto& b : enumerate_feasible(e.instance, false)) {
        EXPECT_FALSE(check_strong_bpjr(e.instance, e.profile, b, AxiomVariant::L).satisfied);
        EXPECT_FALSE(check(e.instance, e.profile, b, kStrongBjrL).satisfied);
    }
}

TEST(StrongBpjr, FullyRepresentedSingleVoter)
{
    auto inst = normalize({{"a", 1}}, 1);
    Profile p(inst, {{0}});
    EXPECT_TRUE(check_strong_bpjr(inst, p, Budget(inst, {0}), AxiomVariant::L).satisfied);
    EXPECT_FALSE(check_strong_bpjr(inst, p, Budget(inst, {}), AxiomVariant::L).satisfied);
}

TEST(StrongBpjr, ExactCoverSatisfies)
{
    auto e = fixtures::load_fixture("x3c.pb");
    auto s1 = *e.instance.find("s1"), s2 = *e.instance.find("s2");
    EXPECT_TRUE(check_strong_bpjr(e.instance, e.profile, Budget(e.instance, {s1, s2}), AxiomVariant::L).satisfied);
    for (const auto& b : enumerate_feasible(e.instance, false))
        EXPECT_EQ(check_strong_bpjr(e.instance, e.profile, b, AxiomVariant::L).satisfied,
                  reference::satisfies(e.instance, e.profile, b, kStrongBpjrL));
}

TEST(Bpjr, ExampleTwoViolatesTheWVariant)
{
    auto e = fixtures::load_fixture("ex2.pb");
    Budget b(e.instance, {1, 2});
    auto r = check_bpjr(e.instance, e.profile, b, AxiomVariant::W);
    ASSERT_FALSE(r.satisfied);
    EXPECT_EQ(r.witness->voters, (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_NEAR(r.witness->requiredWeight, 2.0, 1e-12);
    EXPECT_NEAR(r.witness->representedWeight, 1.5, 1e-12);
    EXPECT_TRUE(r.witness->witnessBundle == ItemSet(4, {0}));
    EXPECT_TRUE(check_local_bpjr(e.instance, e.profile, b, AxiomVariant::L).satisfied);
}

TEST(Bpjr, TieInstanceBothOutcomesSatisfy)
{
    auto e = fixtures::load_fixture("tie.pb");
    EXPECT_TRUE(check_bpjr(e.instance, e.profile, Budget(e.instance, {0}), AxiomVariant::L).satisfied);
    EXPECT_TRUE(check_bpjr(e.instance, e.profile, Budget(e.instance, {1}), AxiomVariant::L).satisfied);
}

TEST(Bpjr, ThresholdZeroCannotBeUndercut)
{
    auto inst = normalize({{"a", 1}, {"x", 2}}, 1);
    Profile p(inst, {{1}});
    EXPECT_TRUE(check_bpjr(inst, p, Budget(inst, {}), AxiomVariant::L).satisfied);
}

TEST(LocalBpjr, EmptyBudgetWithSharedUnitItem)
{
    auto inst = normalize({{"x", 1}}, 1);
    Profile p(inst, {{0}, {0}, {0}});
    auto r = check_local_bpjr(inst, p, Budget(inst, {}), AxiomVariant::L);
    ASSERT_FALSE(r.satisfied);
    EXPECT_TRUE(r.witness->witnessBundle == ItemSet(1, {0}));
}

TEST(LocalBpjr, VoterApprovingNothing)
{
    auto inst = normalize({{"x", 1}, {"y", 2}}, 3);
    Profile p(inst, {{}});
    for (const auto& b : enumerate_feasible(inst, false))
        for (auto id : all_axioms()) EXPECT_TRUE(check(inst, p, b, id).satisfied) << to_string(id);
}

TEST(WVariants, EmptyBudgetIsVacuous)
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto e = suite::mixed(seed);
        for (auto id : all_axioms())
            if (id.variant == AxiomVariant::W) {
                EXPECT_TRUE(check(e.instance, e.profile, Budget(e.instance, {}), id).satisfied);
            }
    }
}

TEST(Checkers, RejectInfeasibleBudgets)
{
    auto e = fixtures::load_fixture("ex1.pb");
    Budget b(e.instance, {0, 1});
    for (auto id : all_axioms()) EXPECT_THROW(check(e.instance, e.profile, b, id), Error);
}

TEST(Checkers, AgreeWithLiteralDefinitions)
{
    std::size_t compared = 0;
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        auto e = suite::mixed(seed, 6, 5);
        for (const auto& b : sample_budgets(e.instance, 3)) {
            for (auto id : all_axioms()) {
                bool fast = check(e.instance, e.profile, b, id).satisfied;
                bool literal = reference::satisfies(e.instance, e.profile, b, id);
                EXPECT_EQ(fast, literal) << "seed " << seed << " " << to_string(id);
                ++compared;
            }
        }
    }
    EXPECT_GT(compared, 1000u);
}

TEST(Checkers, WitnessesAreGenuine)
{
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        auto e = suite::mixed(seed, 8, 6);
        const auto& inst = e.instance;
        const double n = static_cast<double>(e.profile.size());
        for (const auto& b : sample_budgets(inst, 2)) {
            for (auto id : all_axioms()) {
                auto r = check(inst, e.profile, b, id);
                if (r.satisfied) {
                    EXPECT_FALSE(r.witness.has_value());
                    continue;
                }
                ASSERT_TRUE(r.witness.has_value());
                const auto& w = *r.witness;
                ItemSet common = ItemSet::full(inst.size()), covered = inst.empty_set();
                for (auto i : w.voters) {
                    common &= e.profile.ballot(i);
                    covered |= e.profile.ballot(i);
                }
                const double D = id.variant == AxiomVariant::L ? inst.limit() : b.total_cost();
                EXPECT_TRUE(common == w.commonItems);
                EXPECT_NEAR(inst.weight(covered & b.selected()), w.representedWeight, 1e-9);
                EXPECT_TRUE(less(w.representedWeight, w.requiredWeight));
                EXPECT_TRUE(geq(w.level, 1.0));
                EXPECT_TRUE(geq(static_cast<double>(w.voters.size()), w.level * n / D));
                EXPECT_TRUE(w.witnessBundle.is_subset_of(common));
                if (id.family == AxiomFamily::LocalBPJR) {
                    ItemSet represented = covered & b.selected();
                    EXPECT_TRUE(represented.is_subset_of(w.witnessBundle) && !(represented == w.witnessBundle));
                    EXPECT_NEAR(inst.weight(w.witnessBundle), w.requiredWeight, 1e-9);
                } else if (id.family == AxiomFamily::BPJR) {
                    EXPECT_NEAR(inst.weight(w.witnessBundle), w.requiredWeight, 1e-9);
                    EXPECT_TRUE(leq(w.requiredWeight, static_cast<double>(w.voters.size()) * D / n));
                } else {
                    EXPECT_TRUE(leq(w.level, inst.weight(common)));
                }
            }
        }
    }
}

TEST(Checkers, BjrPolynomialMatchesSweep)
{
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        auto e = suite::mixed(seed);
        for (const auto& b : sample_budgets(e.instance, 5))
            for (auto id : {kBjrL, kBjrW, kStrongBjrL, AxiomId{AxiomFamily::StrongBJR, AxiomVariant::W}})
                EXPECT_EQ(check_bjr_poly(e.instance, e.profile, b, id).satisfied,
                          reference::satisfies(e.instance, e.profile, b, id))
                    << "seed " << seed << " " << to_string(id);
    }
}

TEST(Checkers, UnitCostReductionToJrAndPjr)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto e = suite::unit_cost(seed);
        const double k = e.instance.limit();
        for (const auto& b : enumerate_feasible(e.instance, true)) {
            EXPECT_EQ(check(e.instance, e.profile, b, kStrongBjrL).satisfied,
                      reference::satisfies_jr(e.profile, b.selected(), k));
            EXPECT_EQ(check(e.instance, e.profile, b, kStrongBpjrL).satisfied,
                      reference::satisfies_pjr(e.profile, b.selected(), k, false));
        }
    }
}

TEST(Checkers, RefuseTooManyVoters)
{
    auto inst = normalize({{"a", 1}}, 1);
    Profile p(inst, std::vector<std::vector<std::size_t>>(kMaxBruteForceVoters + 1, {0}));
    EXPECT_THROW(check_bpjr(inst, p, Budget(inst, {0}), AxiomVariant::L), Error);
    EXPECT_NO_THROW(check_bjr_poly(inst, p, Budget(inst, {0}), kBjrL));
}

TEST(Lattice, ImpliedBy)
{
    EXPECT_TRUE(implied_by(kBjrW, kStrongBpjrL));
    EXPECT_FALSE(implied_by(kStrongBpjrL, kBjrW));
    for (auto id : all_axioms()) EXPECT_TRUE(implied_by(id, id));
    EXPECT_FALSE(implied_by(kBpjrW, kLocalL));
    EXPECT_TRUE(implied_by(kLocalL, kBpjrL));
    EXPECT_TRUE(implied_by(kBpjrW, kBpjrL));
}

TEST(Lattice, ClosureIsTransitiveAndAcyclic)
{
    auto ids = all_axioms();
    for (auto a : ids)
        for (auto b : ids)
            for (auto c : ids)
                if (implied_by(b, a) && implied_by(c, b)) {
                    EXPECT_TRUE(implied_by(c, a));
                }
    for (auto a : ids)
        for (auto b : ids)
            if (!(a == b)) {
                EXPECT_FALSE(implied_by(a, b) && implied_by(b, a));
            }
    EXPECT_EQ(detail::direct_implications().size(), 15u);
    EXPECT_EQ(implication_edges().size(), 29u);
}
