#include <doctest.h>

#include "oppo/generators.hpp"
#include "oppo/oracle.hpp"
#include "oppo/recognize.hpp"
#include "oppo/report.hpp"
#include "oppo/verify.hpp"
#include "support.hpp"

using namespace oppo;

namespace {

Decision decide(const Graph& g, GraphClass c) {
    return recognize(g, c).decision;
}

constexpr auto kMember = Decision::member;
constexpr auto kNon = Decision::non_member;

Graph deleted(const Graph& g, Vertex v) {
    return delete_vertex(g, v).graph;
}

std::vector<Arc> end_edge_arcs(const Graph& g, const Orientation& o) {
    std::vector<Arc> out;
    for (const Edge& e : end_edges(g)) {
        out.push_back(o.points(e.u, e.v) ? Arc{e.u, e.v} : Arc{e.v, e.u});
    }
    return out;
}

}  // namespace

TEST_CASE("generalized opposition examples") {
    Graph coc6 = testing::load("co-c6.el");
    auto v = recognize_generalized_opposition(coc6);
    CHECK(v.decision == kMember);
    CHECK(verify::verdict(coc6, v));
    CHECK(v.stats.aux_vertices == 12);
    CHECK(v.stats.aux_components == 1);

    auto c5 = recognize_generalized_opposition(cycle_graph(5));
    CHECK(c5.decision == kNon);
    CHECK(std::holds_alternative<OddWalk>(c5.certificate));
    CHECK(verify::verdict(cycle_graph(5), c5));

    CHECK(decide(path_graph(4), GraphClass::generalized_opposition) == kMember);
}

TEST_CASE("opposition examples") {
    Graph coc6 = testing::load("co-c6.el");
    auto v = recognize_opposition(coc6);
    CHECK(v.decision == kNon);
    REQUIRE(std::holds_alternative<FlipRefutation>(v.certificate));
    CHECK(verify::verdict(coc6, v));

    Graph k4p = testing::add_vertex(complete_graph(4), {0});
    CHECK(decide(k4p, GraphClass::opposition) == kMember);
    CHECK(decide(make_tk(1).graph, GraphClass::opposition) == kNon);
}

TEST_CASE("gem- and house-free fast path") {
    auto p7 = recognize_opposition_gem_house_free(path_graph(7));
    CHECK(p7.decision == kMember);
    CHECK(p7.method == "gem-house-free");
    CHECK(verify::verdict(path_graph(7), p7));

    auto c5 = recognize_opposition_gem_house_free(cycle_graph(5));
    CHECK(c5.decision == kNon);

    Graph t1 = make_tk(1).graph;
    auto t = recognize_opposition_gem_house_free(t1);
    CHECK(t.decision == kNon);
    CHECK(std::holds_alternative<OddWalk>(t.certificate));
    CHECK(verify::verdict(t1, t));

    // A gem defers to the general path and still decides correctly.
    auto gem = recognize_opposition_gem_house_free(patterns::gem().graph);
    CHECK((gem.decision == kMember) == oracle::opposition(patterns::gem().graph).member);
}

TEST_CASE("distance-hereditary opposition") {
    for (const char* name : {"A", "G1", "G2", "T1", "T2"}) {
        CAPTURE(name);
        Graph g = testing::pattern_graph(name);
        auto v = recognize_opposition_distance_hereditary(g, {kDefaultFlipCap, true});
        CHECK(v.decision == kNon);
        CHECK(verify::verdict(g, v));
        REQUIRE(v.witness);
        CHECK(verify::pattern_match(g, *pattern_by_name(v.witness->pattern), *v.witness));
    }
    Graph g1 = patterns::g1().graph;
    for (Vertex x = 0; x < g1.order(); ++x) {
        CHECK(decide(deleted(g1, x), GraphClass::opposition) == kMember);
    }
    Graph h2 = make_hk(2, HkVariant::full).graph;
    auto v = recognize_opposition_distance_hereditary(h2);
    CHECK(v.decision == kMember);
    CHECK(v.method == "distance-hereditary/ptolemaic-construction");
}

TEST_CASE("twin reduction handles distance-hereditary graphs with C4s") {
    // C4 with a pendant at every vertex: distance-hereditary, twin-free,
    // not chordal.
    Graph g = parse_edge_list("a b\nb c\nc d\nd a\na 1\nb 2\nc 3\nd 4\n");
    REQUIRE(is_distance_hereditary(g).member);
    auto v = recognize_opposition(g);
    CHECK((v.decision == kMember) == oracle::opposition(g).member);
    CHECK(verify::verdict(g, v));

    // K_{2,3} plus a pendant: the false twins reduce to a tree.
    Graph k23 = parse_edge_list("a x\na y\na z\nb x\nb y\nb z\nz t\n");
    auto w = recognize_opposition(k23);
    CHECK(w.method == "distance-hereditary/twin-reduction");
    CHECK((w.decision == kMember) == oracle::opposition(k23).member);
    CHECK(verify::verdict(k23, w));
}

TEST_CASE("coalition examples") {
    Graph n = testing::load("n.el");
    auto v = recognize_coalition(n, {kDefaultFlipCap, true});
    CHECK(v.decision == kNon);
    REQUIRE(std::holds_alternative<PatternMatch>(v.certificate));
    CHECK(std::get<PatternMatch>(v.certificate).pattern == "N");
    CHECK(verify::verdict(n, v));

    CHECK(decide(cycle_graph(6), GraphClass::coalition) == kMember);
    CHECK(decide(make_hk(1, HkVariant::full).graph, GraphClass::coalition) == kMember);
    for (Vertex x = 0; x < n.order(); ++x) {
        CHECK(decide(deleted(n, x), GraphClass::coalition) == kMember);
    }
    auto tree = recognize_coalition_distance_hereditary(testing::load("tree.el"));
    CHECK(tree.decision == kMember);
    CHECK(tree.method == "distance-hereditary/transitive");
    CHECK(verify::transitive_orientation(testing::load("tree.el"),
                                         std::get<Orientation>(tree.certificate)));
}

TEST_CASE("coalition on non-distance-hereditary graphs") {
    auto c5 = recognize_coalition(cycle_graph(5));
    CHECK(c5.decision == kNon);
    CHECK(verify::verdict(cycle_graph(5), c5));
    auto c6 = recognize_coalition(cycle_graph(6));
    CHECK(c6.decision == kMember);
    CHECK(verify::verdict(cycle_graph(6), c6));
}

TEST_CASE("transitive orientation engine") {
    auto c4 = transitive_orient(cycle_graph(4));
    REQUIRE(c4);
    CHECK(verify::transitive_orientation(cycle_graph(4), *c4));
    CHECK_FALSE(transitive_orient(cycle_graph(5)));
    Graph n = testing::load("n.el");
    Graph n6 = deleted(n, 5);
    auto o = transitive_orient(n6);
    REQUIRE(o);
    CHECK(verify::transitive_orientation(n6, *o));
    CHECK_FALSE(transitive_orient(n));
    CHECK(transitive_orient(complete_graph(5)));
}

TEST_CASE("transitive orientation agrees with an exhaustive scan") {
    for (const Graph& g : testing::connected_upto7(6)) {
        bool brute = false;
        for (std::uint32_t mask = 0; mask < (1U << g.size()) && !brute; ++mask) {
            Orientation o(g);
            for (EdgeId e = 0; e < g.size(); ++e) {
                o.set_forward(e, (mask >> e) & 1U);
            }
            brute = static_cast<bool>(verify::transitive_orientation(g, o));
        }
        CHECK(transitive_orient(g).has_value() == brute);
    }
}

TEST_CASE("ptolemaic constructor roots") {
    Pattern h1 = make_hk(1, HkVariant::full);
    auto r = ptolemaic_opposition_construct(h1.graph);
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0].rule == RootRule::hk_apex);
    CHECK(r.roots[0].root == h1.role("v1"));
    CHECK(r.roots[0].k == 1);
    // v1 is a source.
    for (Vertex w : h1.graph.neighbors(h1.role("v1"))) {
        CHECK(r.orientation.points(h1.role("v1"), w));
    }
    auto sols = oracle::opposition(h1.graph, true).all_solutions;
    auto mine = end_edge_arcs(h1.graph, r.orientation);
    CHECK(std::find(sols.begin(), sols.end(), mine) != sols.end());

    auto p5 = ptolemaic_opposition_construct(path_graph(5));
    REQUIRE(p5.roots.size() == 1);
    CHECK(p5.roots[0].rule == RootRule::p5_midpoint);
    CHECK(p5.roots[0].root == 2);

    Pattern h2 = make_hk(2, HkVariant::full);
    auto r2 = ptolemaic_opposition_construct(h2.graph);
    CHECK(r2.roots[0].rule == RootRule::hk_apex);
    CHECK(r2.roots[0].root == h2.role("v2"));
    auto sols2 = oracle::opposition(h2.graph, true).all_solutions;
    CHECK(std::find(sols2.begin(), sols2.end(), end_edge_arcs(h2.graph, r2.orientation)) !=
          sols2.end());

    // P4 alone has no P5.
    auto p4 = ptolemaic_opposition_construct(path_graph(4));
    CHECK(p4.roots[0].rule == RootRule::p5_free_search);
    CHECK(verify::opposition_orientation(path_graph(4), p4.orientation));
}

TEST_CASE("ptolemaic constructor on disconnected input") {
    Graph g = parse_edge_list("a b\nb c\nc d\nd e\nx y\ny z\nz t\nq\n");
    auto r = ptolemaic_opposition_construct(g);
    CHECK(r.roots.size() == 2);
    CHECK(verify::opposition_orientation(g, r.orientation));
}

TEST_CASE("ptolemaic constructor reports broken preconditions") {
    CHECK_THROWS_AS(ptolemaic_opposition_construct(make_tk(1).graph), ConstructionError);
    CHECK_THROWS_AS(ptolemaic_opposition_construct(patterns::g1().graph), ConstructionError);
}

TEST_CASE("ptolemaic constructor on random opposition inputs") {
    gen::Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        Graph g = gen::random_ptolemaic_opposition(18, rng);
        REQUIRE(is_ptolemaic(g).member);
        auto o = ptolemaic_opposition_orient(g);
        CHECK(verify::opposition_orientation(g, o));
    }
}

TEST_CASE("recognizers agree with the oracle on small connected graphs") {
    for (const Graph& g : testing::connected_upto7(6)) {
        CHECK((decide(g, GraphClass::opposition) == kMember) == oracle::opposition(g).member);
        CHECK((decide(g, GraphClass::coalition) == kMember) == oracle::coalition(g).member);
        CHECK((decide(g, GraphClass::generalized_opposition) == kMember) ==
              oracle::generalized_opposition(g).member);
    }
}

TEST_CASE("certificates re-verify and reversal preserves members") {
    for (const Graph& g : testing::connected_upto7()) {
        for (GraphClass c : {GraphClass::opposition, GraphClass::coalition,
                             GraphClass::generalized_opposition}) {
            Verdict v = recognize(g, c, {kDefaultFlipCap, true});
            CHECK(v.decision != Decision::undecided);
            CHECK(verify::verdict(g, v));
            if (v.witness) {
                auto p = pattern_by_name(v.witness->pattern);
                REQUIRE(p);
                CHECK(verify::pattern_match(g, *p, *v.witness));
            }
            if (const auto* o = std::get_if<Orientation>(&v.certificate)) {
                Verdict r = v;
                r.certificate = o->reversed();
                CHECK(verify::verdict(g, r));
            }
        }
    }
}

TEST_CASE("a small flip cap yields undecided without a certificate") {
    std::size_t seen = 0;
    for (const Graph& g : testing::connected_upto7()) {
        Verdict full = recognize(g, GraphClass::opposition);
        if (full.stats.flips_tried <= 1 || full.method.rfind("flip-search", 0) != 0) {
            continue;
        }
        ++seen;
        Verdict capped = recognize(g, GraphClass::opposition, {1, false});
        CHECK(capped.decision == Decision::undecided);
        CHECK(capped.method == "flip-search-capped");
        CHECK(std::holds_alternative<std::monostate>(capped.certificate));
        CHECK(verify::verdict(g, capped));
    }
    CHECK(seen > 0);
}

TEST_CASE("tampered certificates are rejected") {
    Graph c5 = cycle_graph(5);
    auto v = recognize_generalized_opposition(c5);
    auto& walk = std::get<OddWalk>(v.certificate);
    auto even = v;
    std::get<OddWalk>(even.certificate).walk.pop_back();
    CHECK_FALSE(verify::verdict(c5, even));
    auto swapped = v;
    std::get<OddWalk>(swapped.certificate).walk[1] = walk.walk[1].swapped();
    CHECK_FALSE(verify::verdict(c5, swapped));

    Graph coc6 = testing::load("co-c6.el");
    auto r = recognize_opposition(coc6);
    auto no_branch = r;
    std::get<FlipRefutation>(no_branch.certificate).branches.clear();
    CHECK_FALSE(verify::verdict(coc6, no_branch));
    auto bad_cycle = r;
    auto& cyc = std::get<FlipRefutation>(bad_cycle.certificate).branches[0].cycle.cycle;
    std::reverse(cyc.begin(), cyc.end());
    CHECK_FALSE(verify::verdict(coc6, bad_cycle));

    Graph p5 = path_graph(5);
    auto m = recognize_opposition(p5);
    auto flipped = m;
    auto& o = std::get<Orientation>(flipped.certificate);
    o.set_forward(0, !o.is_forward(0));
    CHECK_FALSE(verify::verdict(p5, flipped));

    Graph n = testing::load("n.el");
    auto nv = recognize_coalition(n);
    auto moved = nv;
    std::swap(std::get<PatternMatch>(moved.certificate).embedding[0],
              std::get<PatternMatch>(moved.certificate).embedding[3]);
    CHECK_FALSE(verify::verdict(n, moved));

    // A member verdict claiming an orientation for the wrong class.
    auto wrong = m;
    wrong.graph_class = GraphClass::coalition;
    CHECK_FALSE(verify::verdict(p5, wrong));
}

TEST_CASE("verdict JSON layout") {
    Graph c5 = cycle_graph(5);
    auto j = verdict_to_json(c5, recognize(c5, GraphClass::opposition));
    CHECK(j["schema"] == kVerdictSchema);
    CHECK(j["class"] == "opposition");
    CHECK(j["decision"] == "non-member");
    CHECK(j["certificate"]["kind"] == "odd-walk");
    CHECK(j["certificate"]["data"]["length"].get<int>() % 2 == 1);
    CHECK(j["stats"]["p4_count"] == 5);
    CHECK(j["stats"]["aux_vertices"] == 10);

    auto n = testing::load("n.el");
    auto jn = verdict_to_json(n, recognize(n, GraphClass::coalition, {kDefaultFlipCap, true}));
    CHECK(jn["certificate"]["kind"] == "pattern");
    CHECK(jn["certificate"]["data"]["pattern"] == "N");
    CHECK(jn["witness"]["embedding"]["6"] == "6");
    CHECK(verdict_to_json(n, recognize(n, GraphClass::coalition)).dump() ==
          verdict_to_json(n, recognize(n, GraphClass::coalition)).dump());
}

TEST_CASE("class names round trip") {
    for (GraphClass c : {GraphClass::opposition, GraphClass::generalized_opposition,
                         GraphClass::coalition}) {
        CHECK(parse_graph_class(to_string(c)) == c);
    }
    CHECK_FALSE(parse_graph_class("perfect"));
}
