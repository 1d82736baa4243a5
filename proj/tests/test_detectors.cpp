#include <doctest.h>

#include "oppo/detectors.hpp"
#include "oppo/generators.hpp"
#include "oppo/verify.hpp"
#include "support.hpp"

using namespace oppo;

TEST_CASE("catalog sizes") {
    struct Row {
        const char* name;
        std::size_t n;
        std::size_t m;
    };
    for (Row r : {Row{"P4", 4, 3}, Row{"P5", 5, 4}, Row{"C4", 4, 4}, Row{"C5", 5, 5},
                  Row{"gem", 5, 7}, Row{"house", 5, 6}, Row{"domino", 6, 7}, Row{"A", 6, 6},
                  Row{"G1", 9, 9}, Row{"G2", 9, 10}, Row{"N", 6, 6}, Row{"coC6", 6, 9},
                  Row{"T1", 8, 7}, Row{"T2", 10, 9}, Row{"H1", 6, 5}, Row{"H2", 9, 11},
                  Row{"H2-", 9, 10}}) {
        CAPTURE(r.name);
        auto p = pattern_by_name(r.name);
        REQUIRE(p);
        CHECK(p->order() == r.n);
        CHECK(p->graph.size() == r.m);
        CHECK(p->roles.size() == r.n);
    }
    CHECK_FALSE(pattern_by_name("nope"));
    CHECK_THROWS(pattern_by_name("P4")->role("v9"));
}

TEST_CASE("each pattern embeds in itself and the match verifies") {
    for (const char* name : {"P5", "gem", "house", "domino", "A", "G1", "G2", "N", "coC6", "T1",
                             "T2", "H1", "H2", "H2-", "H3"}) {
        CAPTURE(name);
        Pattern p = *pattern_by_name(name);
        auto m = find_induced(p.graph, p);
        REQUIRE(m);
        CHECK(verify::pattern_match(p.graph, p, *m));
    }
}

TEST_CASE("induced search is not fooled by supergraphs") {
    // K5 contains every 5-vertex graph as a subgraph but only K_k induced.
    CHECK_FALSE(find_induced(complete_graph(5), patterns::gem()));
    CHECK(find_induced(cycle_graph(6), patterns::p5()));
    CHECK_FALSE(find_induced(cycle_graph(5), patterns::p5()));
    CHECK(find_induced(cycle_graph(5), patterns::p4()));
}

TEST_CASE("non-opposition obstructions as forbidden patterns") {
    for (const char* name : {"T1", "T2", "A", "G1", "G2"}) {
        CAPTURE(name);
        CHECK(verify::obstruction(*pattern_by_name(name), ConstraintKind::opposition));
    }
    CHECK(verify::obstruction(patterns::n(), ConstraintKind::coalition));
    CHECK_FALSE(verify::obstruction(patterns::n(), ConstraintKind::opposition));
    CHECK_FALSE(verify::obstruction(patterns::p5(), ConstraintKind::opposition));
}

TEST_CASE("T_k detection picks the smallest k") {
    auto t1 = find_tk_violation(make_tk(1).graph);
    REQUIRE(t1);
    CHECK(t1->k == 1);
    auto t2 = find_tk_violation(make_tk(2).graph);
    REQUIRE(t2);
    CHECK(t2->k == 2);
    CHECK_FALSE(find_tk_violation(path_graph(12)));
    // Below eight vertices no T_k fits at all.
    for (const Graph& g : testing::connected_upto7()) {
        CHECK_FALSE(find_tk_violation(g));
    }
}

TEST_CASE("maximum H_k") {
    auto h2 = find_max_hk(make_hk(2, HkVariant::full).graph);
    REQUIRE(h2);
    CHECK(h2->k == 2);
    CHECK(h2->variant == HkVariant::full);
    Pattern p = make_hk(2, HkVariant::full);
    CHECK(h2->apex == p.role("v2"));

    auto h2m = find_max_hk(make_hk(2, HkVariant::minus).graph);
    REQUIRE(h2m);
    CHECK(h2m->k == 2);
    CHECK(h2m->variant == HkVariant::minus);

    auto h3 = find_max_hk(make_hk(3, HkVariant::full).graph);
    REQUIRE(h3);
    CHECK(h3->k == 3);

    CHECK_FALSE(find_max_hk(path_graph(6)));
}

TEST_CASE("chordality and holes") {
    auto c4 = is_chordal(cycle_graph(4));
    CHECK_FALSE(c4.chordal);
    CHECK(verify::induced_cycle(cycle_graph(4), c4.cycle, 4));

    auto c7 = is_chordal(cycle_graph(7));
    CHECK_FALSE(c7.chordal);
    CHECK(verify::induced_cycle(cycle_graph(7), c7.cycle, 4));

    auto gem = is_chordal(patterns::gem().graph);
    CHECK(gem.chordal);
    CHECK(verify::perfect_elimination_order(patterns::gem().graph, gem.elimination_order));

    auto hole = has_hole(cycle_graph(6));
    REQUIRE(hole);
    CHECK(hole->size() == 6);
    CHECK(verify::induced_cycle(cycle_graph(6), *hole, 5));
    CHECK_FALSE(has_hole(cycle_graph(4)));
    CHECK_FALSE(has_hole(patterns::house().graph));
    CHECK_FALSE(has_hole(patterns::domino().graph));
}

TEST_CASE("chordality agrees with hole-and-C4 detection on the fixture") {
    for (const Graph& g : testing::connected_upto7()) {
        auto r = is_chordal(g);
        const bool brute = !has_hole(g) && !find_induced(g, patterns::c4());
        CHECK(r.chordal == brute);
        if (r.chordal) {
            CHECK(verify::perfect_elimination_order(g, r.elimination_order));
        } else {
            CHECK(verify::induced_cycle(g, r.cycle, 4));
        }
    }
}

TEST_CASE("class predicates") {
    CHECK_FALSE(is_ptolemaic(patterns::gem().graph).member);
    CHECK_FALSE(is_ptolemaic(cycle_graph(4)).member);
    CHECK(is_ptolemaic(make_hk(2, HkVariant::full).graph).member);
    CHECK_FALSE(is_gem_house_free(patterns::house().graph).member);
    CHECK(is_gem_house_free(cycle_graph(5)).member);
    auto ghh = is_gem_house_hole_free(cycle_graph(5));
    CHECK_FALSE(ghh.member);
    REQUIRE(ghh.witness);
    CHECK(ghh.witness->pattern == "C5");
}

TEST_CASE("distance-hereditary recognition by pruning") {
    for (const char* name : {"gem", "house", "domino", "C5", "coC6"}) {
        CAPTURE(name);
        Graph g = testing::pattern_graph(name);
        auto r = is_distance_hereditary(g);
        CHECK_FALSE(r.member);
        REQUIRE(r.witness);
        auto p = pattern_by_name(r.witness->pattern);
        REQUIRE(p);
        CHECK(verify::pattern_match(g, *p, *r.witness));
    }
    for (const char* name : {"N", "A", "G1", "G2", "T1", "H2", "H2-"}) {
        CAPTURE(name);
        Graph g = testing::pattern_graph(name);
        auto r = is_distance_hereditary(g);
        CHECK(r.member);
        CHECK(verify::pruning_sequence(g, r.pruning));
    }
}

TEST_CASE("distance-hereditary pruning agrees with forbidden patterns on the fixture") {
    for (const Graph& g : testing::connected_upto7()) {
        auto r = is_distance_hereditary(g);
        bool brute = !has_hole(g);
        for (const Pattern& p : {patterns::gem(), patterns::house(), patterns::domino()}) {
            brute = brute && !find_induced(g, p);
        }
        CHECK(r.member == brute);
        if (r.member) {
            CHECK(verify::pruning_sequence(g, r.pruning));
        }
    }
}

TEST_CASE("generated graphs land in their classes") {
    gen::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Graph dh = gen::random_distance_hereditary(12, rng);
        CHECK(dh.order() == 12);
        CHECK(is_connected(dh));
        CHECK(is_distance_hereditary(dh).member);
        Graph pt = gen::random_ptolemaic(12, rng);
        CHECK(is_connected(pt));
        CHECK(is_ptolemaic(pt).member);
        CHECK(is_distance_hereditary(pt).member);
    }
}

TEST_CASE("tree enumeration counts") {
    // Unlabeled trees, OEIS A000055.
    const std::size_t expect[] = {1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (std::size_t n = 1; n <= 12; ++n) {
        auto trees = gen::all_trees(n);
        CHECK(trees.size() == expect[n]);
        for (const Graph& t : trees) {
            CHECK(t.size() + 1 == t.order());
            CHECK(is_connected(t));
        }
    }
}

TEST_CASE("twins and pendants") {
    // Star K1,3: three pendants, and the leaves are pairwise false twins.
    auto found = twins_and_pendants(star_graph(3));
    std::size_t pendants = 0;
    std::size_t false_twins = 0;
    for (const auto& t : found) {
        pendants += t.kind == PruneKind::pendant;
        false_twins += t.kind == PruneKind::false_twin;
    }
    CHECK(pendants == 3);
    CHECK(false_twins == 3);
    CHECK(to_string(PruneKind::true_twin) == "true-twin");
}
