#include <doctest.h>

#include "ccs/coordination.hpp"
#include "ccs/synthesis.hpp"
#include "support/oracle.hpp"
#include "support/testutil.hpp"

using namespace ccs;
using namespace ccs::test;

namespace {

EventSet unc_of(const EventTable& table, const EventSet& alphabet) {
    return set_intersection(alphabet, table.uncontrollable_events());
}

}  // namespace

TEST_CASE("a plant's own marked language is controllable") {
    Rng rng(201);
    for (int i = 0; i < 20; ++i) {
        auto table = random_table(rng, 3);
        Generator plant = random_generator(rng, table, table->universe());
        ControlContext ctx(plant, unc_of(*table, plant.alphabet()));
        CHECK(is_controllable(plant, ctx).holds);
    }
}

TEST_CASE("the empty-word language is not controllable against closure{ab, b}") {
    ExampleFixture ex = make_example2();
    Generator gk = build_coordinator(ex.g1, ex.g2, ex.sigma_k);
    Generator just_eps = recognizer_from_words(ex.table, ex.sigma_k, {{}});
    Decision d = is_controllable(just_eps, ControlContext(gk, unc_of(*ex.table, ex.sigma_k)));
    CHECK(!d.holds);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->word == Word{});
    CHECK(*d.witness->event == ex.id("b"));
}

TEST_CASE("the empty-word language is controllable against the example-1 coordinator") {
    ExampleFixture ex = make_example1();
    Generator gk = build_coordinator(ex.g1, ex.g2, ex.sigma_k);
    Generator just_eps = recognizer_from_words(ex.table, ex.sigma_k, {{}});
    CHECK(is_controllable(just_eps, ControlContext(gk, unc_of(*ex.table, ex.sigma_k))).holds);
}

TEST_CASE("example-1 level syntheses reproduce the expected languages") {
    ExampleFixture ex = make_example1();
    Generator gk = build_coordinator(ex.g1, ex.g2, ex.sigma_k);
    EventSet s1k = set_union(ex.g1.alphabet(), ex.sigma_k);
    EventSet s2k = set_union(ex.g2.alphabet(), ex.sigma_k);

    Generator sup_k = sup_c(project_onto(ex.spec, ex.sigma_k),
                            ControlContext(gk, unc_of(*ex.table, ex.sigma_k)));
    Generator expect_k = closure_recognizer_from_words(
        ex.table, ex.sigma_k, {ex.word({"a1", "a2"}), ex.word({"a2", "a1"})});
    CHECK(lang_equal(sup_k, expect_k, LanguageKind::marked));

    Generator plant1 = sync_product(ex.g1, prefix_closure(sup_k));
    Generator sup_1k =
        sup_c(project_onto(ex.spec, s1k), ControlContext(plant1, unc_of(*ex.table, s1k)));
    CHECK(lang_equal(sup_1k,
                     closure_recognizer_from_words(ex.table, s1k, {ex.word({"a2", "a1", "u1"})}),
                     LanguageKind::marked));

    Generator plant2 = sync_product(ex.g2, prefix_closure(sup_k));
    Generator sup_2k =
        sup_c(project_onto(ex.spec, s2k), ControlContext(plant2, unc_of(*ex.table, s2k)));
    CHECK(lang_equal(sup_2k,
                     closure_recognizer_from_words(ex.table, s2k, {ex.word({"a1", "a2", "u2"})}),
                     LanguageKind::marked));
}

TEST_CASE("example-2 level syntheses reproduce the expected languages") {
    ExampleFixture ex = make_example2();
    Generator gk = build_coordinator(ex.g1, ex.g2, ex.sigma_k);
    EventSet s1k = set_union(ex.g1.alphabet(), ex.sigma_k);
    EventSet s2k = set_union(ex.g2.alphabet(), ex.sigma_k);

    Generator sup_k = sup_c(project_onto(ex.spec, ex.sigma_k),
                            ControlContext(gk, unc_of(*ex.table, ex.sigma_k)));
    CHECK(lang_equal(sup_k,
                     closure_recognizer_from_words(ex.table, ex.sigma_k, {ex.word({"b"})}),
                     LanguageKind::marked));

    Generator plant1 = sync_product(ex.g1, prefix_closure(sup_k));
    Generator sup_1k =
        sup_c(project_onto(ex.spec, s1k), ControlContext(plant1, unc_of(*ex.table, s1k)));
    CHECK(lang_equal(sup_1k,
                     closure_recognizer_from_words(ex.table, s1k, {ex.word({"c1", "b"})}),
                     LanguageKind::marked));

    Generator plant2 = sync_product(ex.g2, prefix_closure(sup_k));
    Generator sup_2k =
        sup_c(project_onto(ex.spec, s2k), ControlContext(plant2, unc_of(*ex.table, s2k)));
    CHECK(lang_equal(sup_2k, recognizer_from_words(ex.table, s2k, {{}}),
                     LanguageKind::marked));
}

TEST_CASE("sup_c returns a controllable input unchanged") {
    Rng rng(207);
    for (int i = 0; i < 25; ++i) {
        auto table = random_table(rng, 3);
        Generator plant = random_generator(rng, table, table->universe());
        Generator k0 = random_generator(rng, table, table->universe());
        ControlContext ctx(plant, unc_of(*table, plant.alphabet()));
        Generator once = sup_c(k0, ctx);
        if (is_controllable(once, ctx).holds) {
            Generator twice = sup_c(once, ctx);
            CHECK(lang_equal(once, twice, LanguageKind::marked));
        }
    }
}

TEST_CASE("sup_c stays below the specification and the plant") {
    Rng rng(211);
    for (int i = 0; i < 25; ++i) {
        auto table = random_table(rng, 3);
        Generator plant = random_generator(rng, table, table->universe());
        Generator k = random_generator(rng, table, table->universe());
        ControlContext ctx(plant, unc_of(*table, plant.alphabet()));
        Generator result = sup_c(k, ctx);
        CHECK(lang_includes(k, result));
        CHECK(lang_includes(plant, result));
    }
}

TEST_CASE("observability holds under full observation") {
    Rng rng(213);
    auto table = random_table(rng, 3);
    Generator plant = random_generator(rng, table, table->universe());
    Generator k = random_generator(rng, table, table->universe());
    ControlContext ctx(plant, unc_of(*table, plant.alphabet()));
    CHECK(is_observable(k, ctx, table->controllable_events()).holds);
}

TEST_CASE("a hidden branching choice breaks observability") {
    // K = {a, cb}, L = closure{a, cb, ca}, only a controllable, c unobservable
    auto table = named_table({{"a", true, true}, {"b", false, true}, {"c", false, false}});
    EventId a = table->require("a"), b = table->require("b"), c = table->require("c");
    EventSet alphabet({a, b, c});
    Generator k = recognizer_from_words(table, alphabet, {{a}, {c, b}});
    Generator plant =
        closure_recognizer_from_words(table, alphabet, {{a}, {c, b}, {c, a}});
    ControlContext ctx(plant, EventSet({b, c}), table->observable_events());
    Decision d = is_observable(k, ctx, EventSet({a}));
    CHECK(!d.holds);
    REQUIRE(d.witness.has_value());
    CHECK(*d.witness->event == a);
    // the witness pair is observation-equivalent and splits on sigma
    CHECK(d.witness->word == Word{c});
    CHECK(*d.witness->aux_word == Word{});
}

TEST_CASE("normality under identity observation always holds") {
    Rng rng(217);
    auto table = random_table(rng, 3);
    Generator plant = random_generator(rng, table, table->universe());
    Generator k0 = random_generator(rng, table, table->universe());
    Generator k = sup_c(k0, ControlContext(plant, EventSet{}));  // any sublanguage of Lm
    ControlContext ctx(plant, unc_of(*table, plant.alphabet()));
    CHECK(is_normal(k, ctx).holds);
}

TEST_CASE("normality examples with one observable event") {
    auto table = named_table({{"a", true, false}, {"b", true, true}});
    EventId a = table->require("a"), b = table->require("b");
    EventSet alphabet({a, b});
    Generator plant = closure_recognizer_from_words(table, alphabet, {{a}, {b}});

    Generator good = closure_recognizer_from_words(table, alphabet, {{a}});
    CHECK(is_normal(good, ControlContext(plant, EventSet{}, table->observable_events())).holds);

    Generator bad = recognizer_from_words(table, alphabet, {{}});
    Decision d = is_normal(bad, ControlContext(plant, EventSet{}, table->observable_events()));
    CHECK(!d.holds);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->word == Word{a});
}

TEST_CASE("sup_cn equals sup_c under full observation") {
    Rng rng(219);
    for (int i = 0; i < 15; ++i) {
        auto table = random_table(rng, 3);
        Generator plant = random_generator(rng, table, table->universe());
        Generator k = random_generator(rng, table, table->universe());
        ControlContext ctx(plant, unc_of(*table, plant.alphabet()));
        CHECK(lang_equal(sup_cn(k, ctx), sup_c(k, ctx), LanguageKind::marked));
    }
}

TEST_CASE("sup_cn with nothing uncontrollable and full observation returns K within the plant") {
    Rng rng(223);
    for (int i = 0; i < 15; ++i) {
        auto table = random_table(rng, 3);
        Generator plant = random_generator(rng, table, table->universe());
        Generator k0 = random_generator(rng, table, table->universe());
        Generator k = trim(sync_product(k0, plant));  // K inside Lm(plant)
        ControlContext ctx(plant, EventSet{});
        CHECK(lang_equal(sup_cn(k, ctx), k, LanguageKind::marked));
    }
}

TEST_CASE("sup_c, sup_n and sup_cn match the subset-enumeration oracle") {
    Rng rng(227);
    int done = 0;
    while (done < 50) {
        auto table = random_table(rng, 1 + rng.below(4));
        EventSet alphabet = table->universe();
        RandomGenOptions opts;
        opts.max_states = 6;
        Generator plant = random_generator(rng, table, alphabet, opts);
        if (!plant.has_initial()) continue;
        std::vector<Word> pool = enumerate_words(plant, 4, LanguageKind::marked);
        std::vector<Word> words;
        for (std::size_t i = 0, n = 1 + rng.below(4); i < n && !pool.empty(); ++i)
            words.push_back(rng.pick(pool));
        words = sorted_unique(std::move(words));
        Generator k = recognizer_from_words(table, alphabet, words);
        EventSet unc = table->uncontrollable_events();
        EventSet obs = table->observable_events();
        ControlContext ctx(plant, unc, obs);

        Generator expected_c = recognizer_from_words(
            table, alphabet, oracle::sup_c_words(words, plant, unc));
        CHECK(lang_equal(sup_c(k, ctx), expected_c, LanguageKind::marked));

        Generator expected_n =
            recognizer_from_words(table, alphabet, oracle::sup_n_words(words, plant, obs));
        CHECK(lang_equal(sup_n(k, ctx), expected_n, LanguageKind::marked));

        Generator expected_cn = recognizer_from_words(
            table, alphabet, oracle::sup_cn_words(words, plant, unc, obs));
        CHECK(lang_equal(sup_cn(k, ctx), expected_cn, LanguageKind::marked));
        ++done;
    }
}

TEST_CASE("decision procedures agree with the definitional oracles on finite languages") {
    Rng rng(228);
    int checked = 0;
    while (checked < 60) {
        auto table = random_table(rng, 1 + rng.below(4));
        EventSet alphabet = table->universe();
        Generator plant = random_generator(rng, table, alphabet);
        if (!plant.has_initial()) continue;
        std::vector<Word> pool = enumerate_words(plant, 4, LanguageKind::marked);
        std::vector<Word> words;
        for (std::size_t i = 0, n = rng.below(4); i < n && !pool.empty(); ++i)
            words.push_back(rng.pick(pool));
        if (rng.chance(0.4)) {
            Word stray;
            for (std::size_t j = 0, len = rng.below(4); j < len; ++j)
                stray.push_back(alphabet.ids()[rng.below(alphabet.size())]);
            words.push_back(std::move(stray));
        }
        words = sorted_unique(std::move(words));
        ++checked;

        Generator k = recognizer_from_words(table, alphabet, words);
        EventSet unc = table->uncontrollable_events();
        EventSet obs = table->observable_events();
        EventSet ctrl = table->controllable_events();
        ControlContext ctx(plant, unc, obs);
        oracle::Walker w = oracle::generated_walker(plant);

        CHECK(is_controllable(k, ctx).holds == oracle::controllable(words, w, unc));
        CHECK(is_observable(k, ctx, ctrl).holds == oracle::observable(words, w, ctrl, obs));
        CHECK(is_normal(k, ctx).holds == oracle::normal(words, w, obs));
    }
}

TEST_CASE("is_lm_closed") {
    ExampleFixture ex = make_example1();
    Generator joint = sync_product(ex.g1, ex.g2);
    CHECK(is_lm_closed(joint, joint));  // K = Lm(plant)

    auto table = named_table({{"a", true, true}, {"b", true, true}});
    EventId a = table->require("a"), b = table->require("b");
    EventSet alphabet({a, b});
    Generator plant = closure_recognizer_from_words(table, alphabet, {{a, b}});
    Generator k = recognizer_from_words(table, alphabet, {{a, b}});
    // closure(K) n Lm(plant) contains eps and a, but K does not
    CHECK(!is_lm_closed(k, plant));
    // prefix-closed K inside a prefix-closed plant is always closed
    Generator closed_k = closure_recognizer_from_words(table, alphabet, {{a}});
    Generator closed_plant = closure_recognizer_from_words(table, alphabet, {{a, b}});
    CHECK(is_lm_closed(closed_k, closed_plant));
}

TEST_CASE("nonconflicting") {
    auto table = named_table({{"a", true, true}, {"b", true, true}});
    EventId a = table->require("a"), b = table->require("b");
    EventSet alphabet({a, b});

    Generator c1 = closure_recognizer_from_words(table, alphabet, {{a, b}});
    Generator c2 = closure_recognizer_from_words(table, alphabet, {{a}, {b, a}});
    CHECK(nonconflicting(c1, c2).holds);  // prefix-closed languages never conflict

    Generator w1 = recognizer_from_words(table, alphabet, {{a, b}});
    Generator w2 = recognizer_from_words(table, alphabet, {{b, a}});
    Decision d = nonconflicting(w1, w2);
    CHECK(!d.holds);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->word == Word{});

    ExampleFixture ex = make_example1();
    EventSet s1k = set_union(ex.g1.alphabet(), ex.sigma_k);
    EventSet s2k = set_union(ex.g2.alphabet(), ex.sigma_k);
    Generator sup1 =
        closure_recognizer_from_words(ex.table, s1k, {ex.word({"a2", "a1", "u1"})});
    Generator sup2 =
        closure_recognizer_from_words(ex.table, s2k, {ex.word({"a1", "a2", "u2"})});
    CHECK(nonconflicting(sup1, sup2).holds);
}

TEST_CASE("controllability transitivity (randomized, premises by construction)") {
    Rng rng(229);
    for (int i = 0; i < 40; ++i) {
        auto table = random_table(rng, 3);
        EventSet alphabet = table->universe();
        EventSet unc = table->uncontrollable_events();
        Generator m = random_generator(rng, table, alphabet);
        Generator l = sup_c(random_generator(rng, table, alphabet), ControlContext(m, unc));
        if (!l.has_initial()) continue;
        Generator l_closed = prefix_closure(l);
        Generator k =
            sup_c(random_generator(rng, table, alphabet), ControlContext(l_closed, unc));
        CHECK(is_controllable(k, ControlContext(m, unc)).holds);
    }
}

TEST_CASE("synchronous products of nonconflicting controllable languages stay controllable") {
    Rng rng(233);
    int premise_held = 0;
    for (int i = 0; i < 60; ++i) {
        auto table = random_table(rng, 4);
        EventSet universe = table->universe();
        EventSet s1 = random_subset(rng, universe, true);
        EventSet s2 = random_subset(rng, universe, true);
        Generator l1 = prefix_closure(random_generator(rng, table, s1));
        Generator l2 = prefix_closure(random_generator(rng, table, s2));
        if (!l1.has_initial() || !l2.has_initial()) continue;
        Generator k1 = sup_c(random_generator(rng, table, s1),
                             ControlContext(l1, set_intersection(s1, table->uncontrollable_events())));
        Generator k2 = sup_c(random_generator(rng, table, s2),
                             ControlContext(l2, set_intersection(s2, table->uncontrollable_events())));
        if (!nonconflicting(k1, k2).holds) continue;
        ++premise_held;
        Generator k12 = sync_product(k1, k2);
        Generator l12 = sync_product(l1, l2);
        EventSet unc = set_intersection(set_union(s1, s2), table->uncontrollable_events());
        CHECK(is_controllable(k12, ControlContext(l12, unc)).holds);
    }
    CHECK(premise_held > 10);
}

TEST_CASE("normality is transitive (randomized, premises by construction)") {
    Rng rng(239);
    for (int i = 0; i < 30; ++i) {
        auto table = random_table(rng, 3);
        EventSet alphabet = table->universe();
        EventSet obs = table->observable_events();
        Generator m = random_generator(rng, table, alphabet);
        Generator l =
            sup_n(random_generator(rng, table, alphabet), ControlContext(m, EventSet{}, obs));
        if (!l.has_initial()) continue;
        Generator l_closed = prefix_closure(l);
        Generator k = sup_n(random_generator(rng, table, alphabet),
                            ControlContext(l_closed, EventSet{}, obs));
        CHECK(is_normal(k, ControlContext(m, EventSet{}, obs)).holds);
    }
}

TEST_CASE("normality survives nonconflicting synchronous products") {
    Rng rng(241);
    int premise_held = 0;
    for (int i = 0; i < 60; ++i) {
        auto table = random_table(rng, 4);
        EventSet universe = table->universe();
        EventSet obs = table->observable_events();
        EventSet s1 = random_subset(rng, universe, true);
        EventSet s2 = random_subset(rng, universe, true);
        Generator l1 = prefix_closure(random_generator(rng, table, s1));
        Generator l2 = prefix_closure(random_generator(rng, table, s2));
        if (!l1.has_initial() || !l2.has_initial()) continue;
        Generator k1 = sup_n(random_generator(rng, table, s1),
                             ControlContext(l1, EventSet{}, obs));
        Generator k2 = sup_n(random_generator(rng, table, s2),
                             ControlContext(l2, EventSet{}, obs));
        if (!nonconflicting(k1, k2).holds) continue;
        ++premise_held;
        Generator k12 = sync_product(k1, k2);
        Generator l12 = sync_product(l1, l2);
        CHECK(is_normal(k12, ControlContext(l12, EventSet{}, obs)).holds);
    }
    CHECK(premise_held > 10);
}

TEST_CASE("normality implies observability for any controllable-event choice") {
    Rng rng(251);
    int premise_held = 0;
    for (int i = 0; i < 60; ++i) {
        auto table = random_table(rng, 3);
        EventSet alphabet = table->universe();
        Generator plant = random_generator(rng, table, alphabet);
        Generator k = random_generator(rng, table, alphabet);
        ControlContext ctx(plant, unc_of(*table, alphabet), table->observable_events());
        if (!is_normal(k, ctx).holds) continue;
        ++premise_held;
        CHECK(is_observable(k, ctx, random_subset(rng, alphabet, false)).holds);
    }
    CHECK(premise_held > 5);
}
