#include "doctest.h"
#include "oracles.hpp"
#include "tg/closure.hpp"
#include "tg/generators.hpp"
#include "tg/randgen.hpp"
#include "tg/transform.hpp"

using namespace tg;
using oracles::make_tg;

TEST_CASE("closure forces variables shared by all paths") {
    TransitionGraph chain = make_tg(2, 3, 0, 2, {{0, 1, {0}}, {1, 2, {1}}});
    TransitionGraph closed = closure(chain);
    CHECK(closed.edges[0].label == LabelSet{0, 1});
    CHECK(closed.edges[1].label == LabelSet{0, 1});
    CHECK_FALSE(is_closed(chain));
    CHECK(is_closed(closed));

    TransitionGraph parallel = make_tg(2, 2, 0, 1, {{0, 1, {0}}, {0, 1, {1}}});
    CHECK(closure(parallel) == parallel);

    TransitionGraph single = make_tg(1, 2, 0, 1, {{0, 1, {0}}});
    CHECK(is_closed(single));
}

TEST_CASE("closure rejects untrimmed or cyclic graphs") {
    TransitionGraph untrimmed = make_tg(2, 3, 0, 1, {{0, 1, {0}}, {0, 2, {1}}});
    CHECK_THROWS_AS(closure(untrimmed), Error);
    TransitionGraph cyclic = make_tg(2, 2, 0, 1, {{0, 1, {0}}, {1, 0, {}}, {0, 1, {1}}});
    CHECK_THROWS_AS(closure(cyclic), Error);
}

TEST_CASE("closure laws on random trimmed DAGs") {
    Rng rng(0x5eed0201);
    for (int i = 0; i < 200; ++i) {
        TransitionGraph g = random_trimmed_dag(rng, {5, 6, 10, 3, false});
        TransitionGraph closed = closure(g);

        // Pointwise growth and function preservation.
        for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
            CHECK(g.edges[ei].label.subset_of(closed.edges[ei].label));
        CHECK(enumerate_accepted(closed) == enumerate_accepted(g));

        // Path labels survive closure edge by edge.
        for (const auto& path : oracles::all_st_paths(g, 1000))
            CHECK(label_set_of_path(g, {path}) == label_set_of_path(closed, {path}));

        // Idempotence, label-exact.
        CHECK(closure(closed) == closed);
        CHECK(is_closed(closed));
    }
}

TEST_CASE("closure agrees with the path-explicit definition") {
    Rng rng(0x5eed0203);
    for (int i = 0; i < 100; ++i) {
        TransitionGraph g = random_trimmed_dag(rng, {4, 6, 9, 2, false});
        CHECK(closure(g) == oracles::closure_by_paths(g));
    }
}

TEST_CASE("p3-free structure check passes on the closed trivial graph") {
    TransitionGraph g = make_trivial_graph(p3f_family(3));
    REQUIRE(is_closed(g));
    StructureReport report = check_p3free_structure(g);
    CHECK(report.passed());
    CHECK(report.label_vertex_count == 3);
}

TEST_CASE("p3-free structure check names a tampered edge") {
    // Accepted family is the single triangle (P3-free), but the first edge
    // label decodes to the two-edge path 1-0-2.
    TransitionGraph g = make_tg(3, 3, 0, 2, {{0, 1, {0, 1}}, {1, 2, {2}}});
    StructureReport report = check_p3free_structure(g);
    REQUIRE_FALSE(report.passed());
    bool names_edge0 = false;
    for (const auto& v : report.violations)
        if (v.edge == std::size_t{0}) names_edge0 = true;
    CHECK(names_edge0);
}

TEST_CASE("p3-free structure check rejects non-p3-free accepted sets") {
    // A bare two-edge path as the accepted set violates the precondition.
    TransitionGraph g = make_tg(3, 2, 0, 1, {{0, 1, {0, 1}}});
    CHECK_THROWS_AS(check_p3free_structure(g), Error);
}

TEST_CASE("p3-free structure check is vacuous without accepted sets") {
    TransitionGraph g = make_tg(3, 2, 0, 1, {});
    CHECK(check_p3free_structure(g).passed());
}

TEST_CASE("clique structure check passes on the closed trivial graph") {
    TransitionGraph g = make_trivial_graph(clique_family(3));
    REQUIRE(is_closed(g));
    CHECK(check_clique_structure(g).passed());
}

TEST_CASE("clique structure check flags a label with two cliques") {
    // Union along the only path is K4, but the first edge alone decodes to
    // the two disjoint edges 0-1 and 2-3.
    std::size_t n = 4;
    LabelSet disjoint{pair_index(n, 0, 1), pair_index(n, 2, 3)};
    LabelSet rest;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!disjoint.contains(pair_index(n, i, j))) rest.insert(pair_index(n, i, j));
    TransitionGraph g = make_tg(pair_count(n), 3, 0, 2, {{0, 1, disjoint}, {1, 2, rest}});
    StructureReport report = check_clique_structure(g);
    REQUIRE_FALSE(report.passed());
    CHECK(report.violations[0].edge == std::size_t{0});
}

TEST_CASE("clique structure check is vacuous without accepted sets") {
    TransitionGraph g = make_tg(6, 2, 0, 1, {});
    CHECK(check_clique_structure(g).passed());
}

TEST_CASE("closing a chain makes it pass the structure checks") {
    // A two-edge chain realizing the triangle: after closure both labels
    // become the full triangle and every shape fact holds.
    TransitionGraph chain = make_tg(3, 3, 0, 2, {{0, 1, {0}}, {1, 2, {1, 2}}});
    TransitionGraph closed = closure(chain);
    REQUIRE(is_closed(closed));
    CHECK(check_clique_structure(closed).passed());
    CHECK(check_p3free_structure(closed).passed());
}

TEST_CASE("trivial graphs of dominated subfamilies pass the checks") {
    Rng rng(0x5eed0202);
    AcceptedFamily p3f4 = p3f_family(4);
    AcceptedFamily clique4 = clique_family(4);
    std::vector<LabelSet> p3f(p3f4.accepted.begin(), p3f4.accepted.end());
    std::vector<LabelSet> cliques(clique4.accepted.begin(), clique4.accepted.end());
    for (int i = 0; i < 20; ++i) {
        AcceptedFamily sub{pair_count(4), {}};
        for (const LabelSet& member : p3f)
            if (rng.chance(40)) sub.accepted.insert(member);
        CHECK(check_p3free_structure(make_trivial_graph(sub)).passed());

        AcceptedFamily csub{pair_count(4), {}};
        for (const LabelSet& member : cliques)
            if (rng.chance(40)) csub.accepted.insert(member);
        CHECK(check_clique_structure(make_trivial_graph(csub)).passed());
    }
}

TEST_CASE("structure checks demand a pair-indexed universe") {
    TransitionGraph g = make_tg(4, 2, 0, 1, {{0, 1, {0}}});  // 4 is not C(n,2)
    CHECK_THROWS_AS(check_p3free_structure(g), Error);
}
