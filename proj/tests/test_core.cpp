#include "doctest.h"
#include "oracles.hpp"
#include "tg/closure.hpp"
#include "tg/core.hpp"
#include "tg/generators.hpp"
#include "tg/randgen.hpp"
#include "tg/transform.hpp"

using namespace tg;
using oracles::make_tg;

TEST_CASE("label set basics") {
    LabelSet a{0, 2};
    CHECK(a.contains(0));
    CHECK(!a.contains(1));
    CHECK(a.count() == 2);
    CHECK((a | LabelSet{1}).count() == 3);
    CHECK(LabelSet{0}.subset_of(a));
    CHECK(!LabelSet{1}.subset_of(a));
    LabelSet big = LabelSet::single(130);
    CHECK(big.max_index() == 130);
    big.erase(130);
    CHECK(big == LabelSet{});

    // Bitstring order, index 0 leftmost: 000 < 001 < 010 < 100.
    CHECK(LabelSet{} < LabelSet{2});
    CHECK(LabelSet{2} < LabelSet{1});
    CHECK(LabelSet{1} < LabelSet{0});
    CHECK(!(LabelSet{0} < LabelSet{0}));
}

TEST_CASE("assignment round trips") {
    Assignment x = Assignment::from_string("0101");
    CHECK(x.universe_size == 4);
    CHECK(x.units == LabelSet{1, 3});
    CHECK(x.to_string() == "0101");
    CHECK(Assignment::all_ones(3).units == LabelSet{0, 1, 2});
    CHECK_THROWS_AS(Assignment::from_string("01x"), Error);
    CHECK_THROWS_AS(Assignment::from_units(2, LabelSet{5}), Error);
}

TEST_CASE("validate reports violations as data") {
    TransitionGraph chain = make_tg(2, 3, 0, 2, {{0, 1, {0}}, {1, 2, {1}}});
    CHECK(validate(chain).empty());

    TransitionGraph bad_vertex = make_tg(2, 2, 0, 1, {{0, 2, {0}}});
    auto v1 = validate(bad_vertex);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].find("target 2") != std::string::npos);

    TransitionGraph bad_label = make_tg(2, 2, 0, 1, {{0, 1, {2}}});
    auto v2 = validate(bad_label);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].find("label index 2") != std::string::npos);
}

TEST_CASE("label set of a path") {
    TransitionGraph g = make_tg(4, 4, 0, 3, {{0, 1, {1}}, {1, 2, {}}, {2, 3, {1, 3}}});
    CHECK(label_set_of_path(g, {{0, 1, 2}}) == LabelSet{1, 3});
    CHECK(label_set_of_path(g, {{}}) == LabelSet{});

    TransitionGraph h = make_tg(3, 4, 0, 3, {{0, 1, {0}}, {1, 2, {1}}, {2, 3, {2}}});
    CHECK(label_set_of_path(h, {{0, 1, 2}}) == LabelSet{0, 1, 2});
    CHECK_THROWS_AS(label_set_of_path(h, {{0, 2}}), Error);
    CHECK_THROWS_AS(label_set_of_path(h, {{7}}), Error);
}

TEST_CASE("evaluate on explicit graphs") {
    CHECK_FALSE(evaluate(xor_graph(3), Assignment::from_string("101")));
    CHECK(evaluate(xor_graph(3), Assignment::from_string("100")));

    TransitionGraph no_path = make_tg(2, 3, 0, 2, {{0, 1, {0}}});
    CHECK_FALSE(evaluate(no_path, Assignment::from_string("10")));

    // Reduction of (x1 or x2) and (not x1): satisfiable via x1=0, x2=1.
    CnfFormula c{2, {{1, 2}, {-1}}};
    REQUIRE(oracles::sat_brute_force(c));
    SatReduction r = sat_reduction(c);
    CHECK(evaluate(r.graph, r.target));

    TransitionGraph cyclic = make_tg(1, 2, 0, 1, {{0, 1, {}}, {1, 0, {}}});
    CHECK_THROWS_AS(evaluate(cyclic, Assignment::from_string("0")), Error);
    CHECK_THROWS_AS(evaluate(xor_graph(3), Assignment::from_string("1")), Error);
}

TEST_CASE("enumerate accepted families") {
    TransitionGraph parallel = make_tg(2, 2, 0, 1, {{0, 1, {0}}, {0, 1, {1}}});
    CHECK(enumerate_accepted(parallel).accepted == std::set<LabelSet>{{0}, {1}});

    AcceptedFamily x2 = enumerate_accepted(xor_graph(2));
    CHECK(x2.accepted == std::set<LabelSet>{{0}, {1}});
    CHECK(x2.accepted == oracles::parity_family(2));

    AcceptedFamily c3 = enumerate_accepted(clique_indicator_graph(3));
    std::set<LabelSet> expected{{}, {0}, {1}, {2}, {0, 1, 2}};
    CHECK(c3.accepted == expected);
    CHECK(c3.accepted == oracles::clique_family_by_degrees(3));

    TransitionGraph cyclic = make_tg(1, 2, 0, 1, {{0, 1, {0}}, {1, 0, {}}});
    CHECK_THROWS_AS(enumerate_accepted(cyclic), Error);
    CHECK_THROWS_AS(enumerate_accepted(xor_graph(6), Budget{5}), BudgetExceeded);
}

TEST_CASE("empty path accepts the all-zero assignment when s equals t") {
    TransitionGraph point = make_tg(2, 1, 0, 0, {});
    CHECK(enumerate_accepted(point).accepted == std::set<LabelSet>{{}});
    CHECK(evaluate(point, Assignment::from_string("00")));
    CHECK_FALSE(evaluate(point, Assignment::from_string("10")));
}

TEST_CASE("equivalence checks") {
    TransitionGraph g = make_tg(3, 3, 0, 2, {{0, 1, {0}}, {1, 2, {1}}, {0, 2, {2}}});
    CHECK(equivalent(g, g));
    CHECK(equivalent(g, closure(g)));
    CHECK_THROWS_AS(equivalent(xor_graph(2), clique_indicator_graph(2)), Error);
}

TEST_CASE("function domination") {
    AcceptedFamily c3 = clique_family(3);
    AcceptedFamily empty{3, {}};
    AcceptedFamily triangle{3, {LabelSet{0, 1, 2}}};
    CHECK(function_dominates(c3, empty));
    CHECK(function_dominates(c3, c3));
    CHECK(function_dominates(c3, triangle));
    CHECK_FALSE(function_dominates(triangle, c3));
    CHECK_THROWS_AS(function_dominates(c3, AcceptedFamily{2, {}}), Error);
}

TEST_CASE("path extension monotonicity on random graphs") {
    Rng rng(0x5eed0001);
    for (int i = 0; i < 50; ++i) {
        TransitionGraph g = random_trimmed_dag(rng, {4, 6, 8, 2, false});
        for (const auto& path : oracles::all_st_paths(g, 2000)) {
            LabelSet partial;
            LabelSet full = label_set_of_path(g, {path});
            for (std::size_t ei : path) {
                partial |= g.edges[ei].label;
                CHECK(partial.subset_of(full));
            }
        }
    }
}

TEST_CASE("evaluate agrees with membership in the enumerated family") {
    Rng rng(0x5eed0002);
    for (int i = 0; i < 100; ++i) {
        TransitionGraph g = random_trimmed_dag(rng, {4, 6, 8, 2, false});
        AcceptedFamily fam = enumerate_accepted(g);
        for (std::uint64_t mask = 0; mask < 16; ++mask) {
            Assignment x = Assignment::from_units(4, LabelSet::from_mask(mask));
            CHECK(evaluate(g, x) == (fam.accepted.count(x.units) > 0));
        }
    }
}

TEST_CASE("enumeration ignores edge list order") {
    Rng rng(0x5eed0003);
    for (int i = 0; i < 50; ++i) {
        TransitionGraph g = random_trimmed_dag(rng, {4, 6, 8, 2, false});
        TransitionGraph reversed = g;
        std::reverse(reversed.edges.begin(), reversed.edges.end());
        CHECK(enumerate_accepted(g) == enumerate_accepted(reversed));
    }
}

TEST_CASE("trivial graph attains the family with one edge per member") {
    Rng rng(0x5eed0004);
    for (int i = 0; i < 50; ++i) {
        AcceptedFamily f = random_family(rng, 5, 6);
        TransitionGraph g = make_trivial_graph(f);
        CHECK(g.size() == f.accepted.size());
        CHECK(enumerate_accepted(g) == f);
    }
}
