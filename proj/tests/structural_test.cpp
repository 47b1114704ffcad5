#include <doctest.h>

#include "ccs/structural.hpp"
#include "support/oracle.hpp"
#include "support/testutil.hpp"

using namespace ccs;
using namespace ccs::test;

TEST_CASE("identity projections are observers") {
    Rng rng(301);
    for (int i = 0; i < 15; ++i) {
        auto table = random_table(rng, 3);
        Generator g = random_generator(rng, table, table->universe());
        CHECK(is_observer(ProjectionSpec(g.alphabet(), g.alphabet()), g).holds);
    }
}

TEST_CASE("a projected continuation with no realization breaks the observer property") {
    // Lm = {a, cb}, target {a, b}: after c, the projected continuation a is unreachable
    auto table = named_table({{"a", true, true}, {"b", true, true}, {"c", true, false}});
    EventId a = table->require("a"), b = table->require("b"), c = table->require("c");
    EventSet alphabet({a, b, c});
    EventSet target({a, b});
    Generator lang = recognizer_from_words(table, alphabet, {{a}, {c, b}});

    ConditionVerdict v = is_observer(ProjectionSpec(alphabet, target), lang);
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->word == Word{c});
    REQUIRE(v.witness->aux_word.has_value());
    CHECK(*v.witness->aux_word == Word{a});
    CHECK(oracle::replay_observer_violation(lang, target, v.witness->word,
                                            *v.witness->aux_word));
}

TEST_CASE("observer witnesses replay on randomized instances") {
    Rng rng(307);
    int violations = 0;
    for (int i = 0; i < 80; ++i) {
        auto table = random_table(rng, 3);
        EventSet alphabet = table->universe();
        EventSet target = random_subset(rng, alphabet, false);
        Generator lang = random_generator(rng, table, alphabet);
        if (!lang.has_initial()) continue;
        ConditionVerdict v = is_observer(ProjectionSpec(alphabet, target), lang);
        if (v.holds) continue;
        ++violations;
        REQUIRE(v.witness.has_value());
        CHECK(oracle::replay_observer_violation(lang, target, v.witness->word,
                                                *v.witness->aux_word));
    }
    CHECK(violations > 5);
}

TEST_CASE("observer verdicts agree with the bounded definitional search") {
    Rng rng(309);
    int refuted = 0;
    for (int i = 0; i < 60; ++i) {
        auto table = random_table(rng, 3);
        EventSet alphabet = table->universe();
        EventSet target = random_subset(rng, alphabet, false);
        RandomGenOptions opts;
        opts.max_states = 4;
        Generator lang = random_generator(rng, table, alphabet, opts);
        if (!lang.has_initial()) continue;
        bool holds = is_observer(ProjectionSpec(alphabet, target), lang).holds;
        // a bounded violation refutes the property outright
        if (oracle::observer_violation_within(lang, target, 4, 6)) {
            CHECK(!holds);
            ++refuted;
        }
    }
    CHECK(refuted > 5);
}

TEST_CASE("occ holds vacuously when everything is uncontrollable") {
    Rng rng(311);
    auto table = random_table(rng, 3, 0.0);  // nothing controllable
    Generator g = prefix_closure(random_generator(rng, table, table->universe()));
    EventSet target = random_subset(rng, table->universe(), false);
    CHECK(is_occ(ProjectionSpec(g.alphabet(), target), g, table->uncontrollable_events()).holds);
}

TEST_CASE("occ accepts uncontrollable interiors and rejects controllable ones") {
    auto table = named_table({{"a", true, true}, {"b", false, true}, {"u", false, true},
                              {"c", true, true}});
    EventId a = table->require("a"), b = table->require("b"), u = table->require("u"),
            c = table->require("c");
    EventSet target({a, b});

    Generator fine = closure_recognizer_from_words(table, EventSet({a, b, u}), {{a, u, b}});
    CHECK(is_occ(ProjectionSpec(EventSet({a, b, u}), target), fine, EventSet({b, u})).holds);

    Generator broken = closure_recognizer_from_words(table, EventSet({a, b, c}), {{a, c, b}});
    ConditionVerdict v =
        is_occ(ProjectionSpec(EventSet({a, b, c}), target), broken, EventSet({b}));
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->word == Word{a, c, b});
    CHECK(oracle::replay_occ_violation(broken, target, EventSet({b}), v.witness->word));
}

TEST_CASE("occ rejects non-prefix-closed input") {
    auto table = named_table({{"a", true, true}, {"b", false, true}});
    EventId a = table->require("a"), b = table->require("b");
    Generator not_closed = recognizer_from_words(table, EventSet({a, b}), {{a, b}});
    CHECK_THROWS_AS(is_occ(ProjectionSpec(EventSet({a, b}), EventSet({b})), not_closed,
                           EventSet({b})),
                    std::invalid_argument);
}

TEST_CASE("lcc is weaker than occ on the two-route example") {
    auto table = named_table({{"a", true, true}, {"b", false, true}, {"u", false, true},
                              {"c", true, true}});
    EventId a = table->require("a"), b = table->require("b"), u = table->require("u"),
            c = table->require("c");
    EventSet alphabet({a, b, c, u});
    EventSet target({a, b});
    EventSet unc({b, u});
    // both an uncontrollable and a controllable interior route reach b
    Generator lang =
        closure_recognizer_from_words(table, alphabet, {{a, c, b}, {a, u, b}});
    CHECK(!is_occ(ProjectionSpec(alphabet, target), lang, unc).holds);
    CHECK(is_lcc(ProjectionSpec(alphabet, target), lang, unc).holds);
}

TEST_CASE("lcc fails when the only route is controllable") {
    auto table = named_table({{"a", true, true}, {"b", false, true}, {"c", true, true}});
    EventId a = table->require("a"), b = table->require("b"), c = table->require("c");
    EventSet alphabet({a, b, c});
    EventSet target({a, b});
    Generator lang = closure_recognizer_from_words(table, alphabet, {{a, c, b}});
    ConditionVerdict v = is_lcc(ProjectionSpec(alphabet, target), lang, EventSet({b}));
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->word == Word{a});
    CHECK(*v.witness->event == b);
    CHECK(oracle::replay_lcc_violation(lang, target, EventSet({b}), v.witness->word,
                                       *v.witness->event));
}

TEST_CASE("occ implies lcc on randomized instances") {
    Rng rng(313);
    int occ_held = 0;
    for (int i = 0; i < 200; ++i) {
        auto table = random_table(rng, 3);
        EventSet alphabet = table->universe();
        Generator lang = prefix_closure(random_generator(rng, table, alphabet));
        if (!lang.has_initial()) continue;
        EventSet target = random_subset(rng, alphabet, false);
        EventSet unc = table->uncontrollable_events();
        ProjectionSpec spec(alphabet, target);
        ConditionVerdict occ = is_occ(spec, lang, unc);
        ConditionVerdict lcc = is_lcc(spec, lang, unc);
        if (occ.holds) {
            ++occ_held;
            CHECK(lcc.holds);
        }
        if (!lcc.holds) {
            REQUIRE(lcc.witness.has_value());
            CHECK(oracle::replay_lcc_violation(lang, target, unc, lcc.witness->word,
                                               *lcc.witness->event));
        }
        if (!occ.holds) {
            REQUIRE(occ.witness.has_value());
            CHECK(oracle::replay_occ_violation(lang, target, unc, occ.witness->word));
        }
    }
    CHECK(occ_held > 20);
}

TEST_CASE("componentwise observers compose over shared-covering targets") {
    Rng rng(317);
    int premise_held = 0;
    for (int i = 0; i < 120; ++i) {
        auto table = random_table(rng, 4);
        EventSet universe = table->universe();
        EventSet s1 = random_subset(rng, universe, true);
        EventSet s2 = random_subset(rng, universe, true);
        EventSet shared = set_intersection(s1, s2);
        EventSet s0 = set_union(shared, random_subset(rng, set_union(s1, s2), false));
        Generator l1 = random_generator(rng, table, s1);
        Generator l2 = random_generator(rng, table, s2);
        if (!l1.has_initial() || !l2.has_initial()) continue;

        bool obs1 = is_observer(ProjectionSpec(s1, set_intersection(s1, s0)), l1).holds;
        bool obs2 = is_observer(ProjectionSpec(s2, set_intersection(s2, s0)), l2).holds;
        if (!obs1 || !obs2) continue;
        ++premise_held;
        Generator joint = sync_product(l1, l2);
        EventSet joint_target = set_intersection(set_union(s1, s2), s0);
        CHECK(is_observer(ProjectionSpec(joint.alphabet(), joint_target), joint).holds);
    }
    CHECK(premise_held > 20);
}
