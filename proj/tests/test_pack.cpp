#include <doctest.h>

#include <vector>

#include "pwt/errors.hpp"
#include "pwt/pack.hpp"
#include "pwt/validate.hpp"
#include "support/fixtures.hpp"

using namespace pwt;
using pwt::testing::toy4_context;

namespace {

std::vector<int> accepted_order(const PackOutcome& outcome) {
    std::vector<int> order;
    for (const TraceEntry& entry : outcome.trace)
        if (entry.accepted) order.push_back(entry.item_id);
    return order;
}

PackOptions traced() {
    PackOptions options;
    options.record_trace = true;
    return options;
}

}  // namespace

TEST_CASE("pack_static traces on toy4") {
    const TourContext ctx = toy4_context();
    SUBCASE("r1 packs e3 then e2") {
        const PackOutcome outcome = pack_static(ctx, {RewardKind::kR1, 1.0}, traced());
        CHECK(outcome.plan.selected_ids() == std::vector<int>{2, 3});
        CHECK(outcome.report.objective ==
              doctest::Approx(44.0714285714285714).epsilon(1e-12));
        CHECK(accepted_order(outcome) == std::vector<int>{3, 2});
        CHECK(outcome.report.algorithm == "pack");
        CHECK(outcome.report.mode == "deterministic");
    }
    SUBCASE("r2 packs e1 then e3") {
        const PackOutcome outcome = pack_static(ctx, {RewardKind::kR2, 1.0}, traced());
        CHECK(outcome.plan.selected_ids() == std::vector<int>{1, 3});
        CHECK(outcome.report.objective == doctest::Approx(64.0).epsilon(1e-12));
        CHECK(accepted_order(outcome) == std::vector<int>{1, 3});
    }
    SUBCASE("r3 packs e3 then e1") {
        const PackOutcome outcome = pack_static(ctx, {RewardKind::kR3, 1.0}, traced());
        CHECK(outcome.plan.selected_ids() == std::vector<int>{1, 3});
        CHECK(outcome.report.objective == doctest::Approx(64.0).epsilon(1e-12));
        CHECK(accepted_order(outcome) == std::vector<int>{3, 1});
    }
}

TEST_CASE("pack_static returns the empty plan when every item hurts") {
    Instance inst = pwt::testing::toy4_instance();
    for (Item& item : inst.items) {
        item.profit = 0.01;
        item.weight = 14.0;  // any pick drags the speed to 0.16 for its suffix
    }
    const TourContext ctx = build_context(std::move(inst), {1, 2, 3, 4});
    for (RewardKind kind : {RewardKind::kR1, RewardKind::kR2, RewardKind::kR3}) {
        const PackOutcome outcome = pack_static(ctx, {kind, 1.0});
        CHECK(outcome.plan.count() == 0);
        CHECK(outcome.report.objective == doctest::Approx(-4.0).epsilon(1e-12));
    }
}

TEST_CASE("objective ties are kept, not reverted") {
    // One item whose profit exactly cancels its travel-cost increase:
    // nu = 0.5, w = 1 halves the return-leg speed, so the cost rises by
    // exactly 1 = p and the candidate ties the empty plan.
    Instance inst = pwt::testing::toy4_instance();
    inst.capacity = 1;
    inst.v_min = 0.5;
    inst.items = {{1, 1.0, 1.0, 4}};
    const TourContext ctx = build_context(std::move(inst), {1, 2, 3, 4});
    const PackOutcome outcome = pack_static(ctx, {RewardKind::kR1, 1.0});
    CHECK(outcome.plan.count() == 1);
    CHECK(outcome.report.objective == doctest::Approx(-4.0));
}

TEST_CASE("pack_iterative traces on toy4") {
    const TourContext ctx = toy4_context();
    SUBCASE("r5 packs e3 then e2") {
        // After e3 is accepted the rescore gives r5(e2) = 3.5714 > r5(e1) =
        // 2.4286, so e2 goes in and e1 ends up over capacity.
        const PackOutcome outcome = pack_iterative(ctx, {RewardKind::kR5, 1.0}, traced());
        CHECK(outcome.plan.selected_ids() == std::vector<int>{2, 3});
        CHECK(outcome.report.objective ==
              doctest::Approx(44.0714285714285714).epsilon(1e-12));
        CHECK(accepted_order(outcome) == std::vector<int>{3, 2});
        CHECK(outcome.report.algorithm == "pack_ih");
    }
    SUBCASE("r4 packs e1 then e3") {
        const PackOutcome outcome = pack_iterative(ctx, {RewardKind::kR4, 1.0}, traced());
        CHECK(outcome.plan.selected_ids() == std::vector<int>{1, 3});
        CHECK(outcome.report.objective == doctest::Approx(64.0).epsilon(1e-12));
        CHECK(accepted_order(outcome) == std::vector<int>{1, 3});
    }
    SUBCASE("zero items returns the empty plan immediately") {
        Instance empty = pwt::testing::toy4_instance();
        empty.items.clear();
        const TourContext empty_ctx = build_context(std::move(empty), {1, 2, 3, 4});
        const PackOutcome outcome = pack_iterative(empty_ctx, {RewardKind::kR5, 1.0});
        CHECK(outcome.plan.count() == 0);
        CHECK(outcome.report.objective == doctest::Approx(-4.0));
    }
}

TEST_CASE("pack_surrogate on toy4 under both bounds") {
    const TourContext ctx = toy4_context();
    SUBCASE("r7, delta 2, alpha 0.9 (chebyshev) packs e3 then e2") {
        const StochasticSpec spec = StochasticSpec::uniform(ctx.instance, 2.0, 0.9);
        const PackOutcome outcome = pack_surrogate(ctx, {RewardKind::kR7, 1.0}, spec, traced());
        CHECK(outcome.plan.selected_ids() == std::vector<int>{2, 3});
        CHECK(outcome.report.objective ==
              doctest::Approx(44.0714285714285714).epsilon(1e-12));
        REQUIRE(outcome.report.surrogate_weight.has_value());
        CHECK(*outcome.report.surrogate_weight <= 15.0);
        CHECK(*outcome.report.surrogate_weight ==
              doctest::Approx(14.8989794855663562).epsilon(1e-9));
        CHECK(outcome.report.algorithm == "pack_sf");
        CHECK(outcome.report.mode == "chance");
    }
    SUBCASE("tightening alpha to 0.999 (hoeffding) shrinks the plan") {
        const StochasticSpec loose = StochasticSpec::uniform(ctx.instance, 2.0, 0.9);
        const StochasticSpec tight = StochasticSpec::uniform(ctx.instance, 2.0, 0.999);
        const PackOutcome at_09 = pack_surrogate(ctx, {RewardKind::kR7, 1.0}, loose);
        const PackOutcome at_0999 = pack_surrogate(ctx, {RewardKind::kR7, 1.0}, tight);
        CHECK(at_0999.plan.count() <= at_09.plan.count());
        CHECK(at_0999.plan.selected_ids() == std::vector<int>{3});
        CHECK(at_0999.report.objective ==
              doctest::Approx(25.5714285714285714).epsilon(1e-12));
    }
    SUBCASE("delta 0 collapses to the deterministic counterparts") {
        const StochasticSpec spec = StochasticSpec::uniform(ctx.instance, 0.0, 0.9);
        const PackOutcome sr1 = pack_surrogate(ctx, {RewardKind::kR1, 1.0}, spec);
        const PackOutcome dr1 = pack_static(ctx, {RewardKind::kR1, 1.0});
        CHECK(sr1.plan.selected_ids() == dr1.plan.selected_ids());
        CHECK(sr1.report.objective == doctest::Approx(dr1.report.objective).epsilon(1e-12));

        const PackOutcome sr6 = pack_surrogate(ctx, {RewardKind::kR6, 1.0}, spec);
        const PackOutcome dr4 = pack_iterative(ctx, {RewardKind::kR4, 1.0});
        CHECK(sr6.plan.selected_ids() == dr4.plan.selected_ids());
        CHECK(sr6.report.objective == doctest::Approx(dr4.report.objective).epsilon(1e-12));

        const PackOutcome sr7 = pack_surrogate(ctx, {RewardKind::kR7, 1.0}, spec);
        const PackOutcome dr5 = pack_iterative(ctx, {RewardKind::kR5, 1.0});
        CHECK(sr7.plan.selected_ids() == dr5.plan.selected_ids());
        CHECK(sr7.report.objective == doctest::Approx(dr5.report.objective).epsilon(1e-12));
    }
}

TEST_CASE("pack_sequence follows the acceptance-indexed schedule") {
    const TourContext ctx = toy4_context();
    SUBCASE("constant r5 equals pack_iterative r5") {
        const HeuristicSequence hh(3, RewardSpec{RewardKind::kR5, 1.0});
        const PackOutcome seq = pack_sequence(ctx, hh, SolveMode::deterministic());
        const PackOutcome ih = pack_iterative(ctx, {RewardKind::kR5, 1.0});
        CHECK(seq.plan.selected_ids() == ih.plan.selected_ids());
        CHECK(seq.report.objective == doctest::Approx(ih.report.objective).epsilon(1e-12));
    }
    SUBCASE("constant r1 matches pack_static r1 here") {
        const HeuristicSequence hh(3, RewardSpec{RewardKind::kR1, 1.0});
        const PackOutcome seq = pack_sequence(ctx, hh, SolveMode::deterministic());
        CHECK(seq.plan.selected_ids() == std::vector<int>{2, 3});
        CHECK(seq.report.objective == doctest::Approx(44.0714285714285714).epsilon(1e-12));
    }
    SUBCASE("a schedule switch changes the outcome") {
        // r2 first (packs e1), then r1 rescoring: exercises the pointer.
        const HeuristicSequence hh{{RewardKind::kR2, 1.0},
                                   {RewardKind::kR1, 1.0},
                                   {RewardKind::kR1, 1.0}};
        const PackOutcome seq = pack_sequence(ctx, hh, SolveMode::deterministic(), traced());
        CHECK(accepted_order(seq).front() == 1);
        CHECK(seq.report.objective >= -4.0);
    }
    SUBCASE("length mismatch is a configuration error") {
        const HeuristicSequence hh(2, RewardSpec{RewardKind::kR1, 1.0});
        CHECK_THROWS_AS(pack_sequence(ctx, hh, SolveMode::deterministic()), ConfigError);
    }
    SUBCASE("stochastic rewards in the schedule require chance mode") {
        const HeuristicSequence hh(3, RewardSpec{RewardKind::kR7, 1.0});
        CHECK_THROWS_AS(pack_sequence(ctx, hh, SolveMode::deterministic()), ConfigError);
    }
}

TEST_CASE("illegal pairings are rejected") {
    const TourContext ctx = toy4_context();
    const StochasticSpec spec = StochasticSpec::uniform(ctx.instance, 2.0, 0.9);
    CHECK_THROWS_AS(pack_static(ctx, {RewardKind::kR4, 1.0}), ConfigError);
    CHECK_THROWS_AS(pack_iterative(ctx, {RewardKind::kR6, 1.0}), ConfigError);
    CHECK_THROWS_AS(pack_surrogate(ctx, {RewardKind::kR2, 1.0}, spec), ConfigError);
}

TEST_CASE("ascending ablation considers worst-scored items first") {
    const TourContext ctx = toy4_context();
    PackOptions options = traced();
    options.ascending = true;
    // r1 ascending order is [e1, e2, e3]: e1 and e2 both improve, e3 no
    // longer fits.
    const PackOutcome outcome = pack_static(ctx, {RewardKind::kR1, 1.0}, options);
    CHECK(accepted_order(outcome) == std::vector<int>{1, 2});
    CHECK(outcome.report.objective == doctest::Approx(46.5).epsilon(1e-12));
}

TEST_CASE("pack invariants on random instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const TourContext ctx = pwt::testing::random_context(seed);
        const double empty_z = -ctx.instance.renting_rate * ctx.total_distance /
                               ctx.instance.v_max;
        const StochasticSpec spec =
            StochasticSpec::uniform(ctx.instance, 5.0, seed % 2 ? 0.9 : 0.999);

        std::vector<PackOutcome> outcomes;
        outcomes.push_back(pack_static(ctx, {RewardKind::kR1, 1.0}, traced()));
        outcomes.push_back(pack_static(ctx, {RewardKind::kR2, 1.0}, traced()));
        outcomes.push_back(pack_static(ctx, {RewardKind::kR3, 1.0}, traced()));
        outcomes.push_back(pack_iterative(ctx, {RewardKind::kR4, 1.0}, traced()));
        outcomes.push_back(pack_iterative(ctx, {RewardKind::kR5, 1.0}, traced()));
        outcomes.push_back(pack_surrogate(ctx, {RewardKind::kR7, 1.0}, spec, traced()));

        for (size_t i = 0; i < outcomes.size(); ++i) {
            const PackOutcome& outcome = outcomes[i];
            CHECK(outcome.report.objective >= empty_z - 1e-9);
            const bool chance = outcome.report.mode == "chance";
            if (chance) {
                CHECK(*outcome.report.surrogate_weight <= ctx.instance.capacity + 1e-9);
            } else {
                CHECK(outcome.plan.total_weight() <= ctx.instance.capacity + 1e-9);
            }
            // Accepted objectives never decrease along the trace.
            double last = empty_z;
            for (const TraceEntry& entry : outcome.trace) {
                if (!entry.accepted) continue;
                CHECK(entry.objective >= last - 1e-12);
                last = entry.objective;
            }
        }

        // Determinism: identical inputs give identical plans and traces.
        const PackOutcome again = pack_iterative(ctx, {RewardKind::kR5, 1.0}, traced());
        CHECK(again.plan.selected_ids() == outcomes[4].plan.selected_ids());
        CHECK(again.trace.size() == outcomes[4].trace.size());
        CHECK(again.report.evaluations == outcomes[4].report.evaluations);
    }
}

TEST_CASE("constant schedules reproduce their single-heuristic runs") {
    // The rescans a constant schedule performs can never flip a rejection:
    // an item's marginal gain only shrinks as the plan grows.
    for (std::uint64_t seed = 100; seed < 115; ++seed) {
        const TourContext ctx = pwt::testing::random_context(seed);
        const size_t m = static_cast<size_t>(ctx.num_items());
        for (RewardKind kind : {RewardKind::kR1, RewardKind::kR2, RewardKind::kR3}) {
            const PackOutcome single = pack_static(ctx, {kind, 1.0});
            const PackOutcome constant =
                pack_sequence(ctx, HeuristicSequence(m, {kind, 1.0}),
                              SolveMode::deterministic());
            CHECK(constant.plan.selected_ids() == single.plan.selected_ids());
            CHECK(constant.report.objective ==
                  doctest::Approx(single.report.objective).epsilon(1e-12));
        }
        for (RewardKind kind : {RewardKind::kR4, RewardKind::kR5}) {
            const PackOutcome single = pack_iterative(ctx, {kind, 1.0});
            const PackOutcome constant =
                pack_sequence(ctx, HeuristicSequence(m, {kind, 1.0}),
                              SolveMode::deterministic());
            CHECK(constant.plan.selected_ids() == single.plan.selected_ids());
        }
    }
}

TEST_CASE("greedy never beats the oracle on small instances") {
    for (std::uint64_t seed = 30; seed < 45; ++seed) {
        const TourContext ctx = pwt::testing::random_context(seed);
        const double optimal =
            brute_force_optimal(ctx, SolveMode::deterministic()).report.objective;
        for (RewardKind kind : {RewardKind::kR1, RewardKind::kR3}) {
            CHECK(pack_static(ctx, {kind, 1.0}).report.objective <= optimal + 1e-9);
        }
        CHECK(pack_iterative(ctx, {RewardKind::kR5, 1.0}).report.objective <= optimal + 1e-9);
    }
}
