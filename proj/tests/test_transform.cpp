#include "doctest.h"
#include "oracles.hpp"
#include "tg/randgen.hpp"
#include "tg/transform.hpp"

using namespace tg;
using oracles::make_tg;

TEST_CASE("trim removes vertices off every (s,t)-walk") {
    TransitionGraph isolated =
        make_tg(2, 4, 0, 2, {{0, 1, {0}}, {1, 2, {1}}});  // vertex 3 floats
    TransitionGraph trimmed = trim(isolated);
    CHECK(trimmed.vertex_count == 3);
    CHECK(enumerate_accepted(trimmed) == enumerate_accepted(isolated));

    TransitionGraph dead_end = make_tg(2, 3, 0, 2, {{0, 1, {0}}});  // t unreachable
    TransitionGraph t2 = trim(dead_end);
    CHECK(t2.size() == 0);
    CHECK(t2.vertex_count == 2);  // s and t stay
    CHECK(enumerate_accepted(t2).accepted.empty());

    TransitionGraph tight = make_tg(2, 2, 0, 1, {{0, 1, {0}}, {0, 1, {1}}});
    CHECK(trim(tight) == tight);
}

TEST_CASE("trim keeps ids compact and in order") {
    TransitionGraph g = make_tg(1, 5, 1, 4, {{1, 3, {0}}, {3, 4, {}}, {0, 2, {}}});
    TransitionGraph t = trim(g);
    CHECK(t.vertex_count == 3);
    CHECK(t.initial == 0);
    CHECK(t.terminal == 2);
    CHECK(t.edges == std::vector<TgEdge>{{0, 1, {0}}, {1, 2, {}}});
}

TEST_CASE("singleton normalization") {
    TransitionGraph wide = make_tg(3, 2, 0, 1, {{0, 1, {0, 2}}});
    TransitionGraph norm = normalize_singletons(wide);
    CHECK(norm.vertex_count == 3);
    CHECK(norm.edges == std::vector<TgEdge>{{0, 2, {0}}, {2, 1, {2}}});
    CHECK(enumerate_accepted(norm).accepted == std::set<LabelSet>{{0, 2}});

    TransitionGraph singles = make_tg(2, 3, 0, 2, {{0, 1, {0}}, {1, 2, {}}});
    CHECK(normalize_singletons(singles) == singles);

    TransitionGraph empty_label = make_tg(2, 2, 0, 1, {{0, 1, {}}});
    CHECK(normalize_singletons(empty_label) == empty_label);
}

TEST_CASE("normalization grows size by the label surplus") {
    Rng rng(0x5eed0101);
    for (int i = 0; i < 50; ++i) {
        TransitionGraph g = random_transition_graph(rng, {5, 6, 10, 4, true});
        std::size_t surplus = 0;
        for (const TgEdge& e : g.edges)
            surplus += e.label.count() > 1 ? e.label.count() - 1 : 0;
        TransitionGraph norm = normalize_singletons(g);
        CHECK(norm.size() == g.size() + surplus);
        for (const TgEdge& e : norm.edges) CHECK(e.label.count() <= 1);
    }
}

TEST_CASE("to_dag leaves acyclic graphs alone") {
    TransitionGraph dag = make_tg(2, 3, 0, 2, {{0, 1, {0}}, {1, 2, {1}}, {0, 2, {}}});
    CHECK(to_dag(dag) == dag);
}

TEST_CASE("to_dag unrolls loops") {
    // Self-loop at s labeled {0}, edge s->t labeled {1}.
    TransitionGraph loop = make_tg(2, 2, 0, 1, {{0, 0, {0}}, {0, 1, {1}}});
    AcceptedFamily fam = enumerate_accepted(to_dag(loop));
    CHECK(fam.accepted == std::set<LabelSet>{{1}, {0, 1}});
    CHECK(fam.accepted == oracles::walk_labels(loop));

    // Two-cycle with an exit: s->u {0}, u->s {1}, u->t {}.
    TransitionGraph two = make_tg(2, 3, 0, 2, {{0, 1, {0}}, {1, 0, {1}}, {1, 2, {}}});
    AcceptedFamily fam2 = enumerate_accepted(to_dag(two));
    CHECK(fam2.accepted == std::set<LabelSet>{{0}, {0, 1}});
    CHECK(fam2.accepted == oracles::walk_labels(two));
}

TEST_CASE("transforms preserve walk semantics on random graphs") {
    Rng rng(0x5eed0102);
    for (int i = 0; i < 200; ++i) {
        TransitionGraph g = random_transition_graph(rng, {4, 6, 10, 3, true});
        std::set<LabelSet> expected = oracles::walk_labels(g);
        CHECK(oracles::walk_labels(trim(g)) == expected);
        CHECK(oracles::walk_labels(normalize_singletons(g)) == expected);
        TransitionGraph dag = to_dag(g);
        CHECK(is_acyclic(dag));
        CHECK(enumerate_accepted(dag).accepted == expected);
    }
}

TEST_CASE("trim then normalize then to_dag is idempotent on its own output") {
    Rng rng(0x5eed0103);
    auto pipeline = [](const TransitionGraph& g) {
        return trim(normalize_singletons(to_dag(g)));
    };
    for (int i = 0; i < 50; ++i) {
        TransitionGraph g = random_transition_graph(rng, {4, 5, 8, 3, true});
        TransitionGraph once = pipeline(g);
        CHECK(pipeline(once) == once);
    }
}
