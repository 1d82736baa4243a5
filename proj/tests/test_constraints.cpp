#include <doctest.h>

#include "oppo/constraints.hpp"
#include "oppo/verify.hpp"
#include "support.hpp"

using namespace oppo;

namespace {

Graph as_graph(const ConstraintGraph& cg) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (VarId v = 0; v < cg.var_count(); ++v) {
        for (VarId w : cg.neighbors(v)) {
            if (v < w) {
                edges.emplace_back(v, w);
            }
        }
    }
    return Graph(cg.var_count(), edges);
}

bool has_cycle(const PartialOrientation& p) {
    return std::holds_alternative<DirectedCycle>(is_acyclic(p));
}

}  // namespace

TEST_CASE("O(P4) is a 4-cycle") {
    Graph g = testing::load("p4.el");
    auto cg = build_constraint_graph(g, ConstraintKind::opposition);
    CHECK(cg.var_count() == 4);
    CHECK(cg.edge_count() == 4);
    CHECK(cg.p4_count() == 1);
    CHECK(testing::isomorphic(as_graph(cg), cycle_graph(4)));
    // a->b excludes c->d.
    auto ab = cg.find(0, 1).value();
    auto cd = cg.find(2, 3).value();
    CHECK(cg.adjacent(ab, cd));
    CHECK_FALSE(cg.adjacent(ab, cg.find(3, 2).value()));
    CHECK(cg.adjacent(ab, cg.negation(ab)));
    CHECK_FALSE(cg.find(0, 2).has_value());
}

TEST_CASE("C(P4) pairs aligned directions") {
    Graph g = testing::load("p4.el");
    auto cg = build_constraint_graph(g, ConstraintKind::coalition);
    auto ab = cg.find(0, 1).value();
    auto dc = cg.find(3, 2).value();
    CHECK(cg.adjacent(ab, dc));
    CHECK(testing::isomorphic(as_graph(cg), cycle_graph(4)));
}

TEST_CASE("O of the complement of C6 is bipartite on 12 vertices") {
    Graph g = testing::load("co-c6.el");
    auto cg = build_constraint_graph(g, ConstraintKind::opposition);
    CHECK(cg.var_count() == 12);
    auto split = bipartition_or_odd_walk(cg);
    REQUIRE(std::holds_alternative<Bipartition>(split));
    const auto& b = std::get<Bipartition>(split);
    CHECK(b.component_count == 1);
    // Both choices of the single component force a directed triangle.
    CHECK(has_cycle(forced_orientation(cg, b, {0})));
    CHECK(has_cycle(forced_orientation(cg, b, {1})));
    auto res = search_acyclic_flips(cg, b);
    CHECK(res.status == FlipSearchResult::Status::exhausted);
    CHECK(res.branches.size() == 1);
    CHECK(res.branches[0].cycle.cycle.size() == 3);
}

TEST_CASE("C(N) is the complement of C6 on 6 vertices") {
    Graph n = testing::load("n.el");
    auto cg = build_constraint_graph(n, ConstraintKind::coalition);
    CHECK(cg.var_count() == 6);
    CHECK(cg.edge_count() == 9);
    CHECK(testing::isomorphic(as_graph(cg), complement(cycle_graph(6))));
    CHECK(std::holds_alternative<OddWalk>(bipartition_or_odd_walk(cg)));
}

TEST_CASE("O(C5) has an odd walk") {
    Graph c5 = cycle_graph(5);
    auto cg = build_constraint_graph(c5, ConstraintKind::opposition);
    CHECK(cg.var_count() == 10);
    auto split = bipartition_or_odd_walk(cg);
    REQUIRE(std::holds_alternative<OddWalk>(split));
    const auto& w = std::get<OddWalk>(split);
    CHECK(w.length() % 2 == 1);
    CHECK(verify::odd_walk(c5, ConstraintKind::opposition, w));
}

TEST_CASE("constraint graph adjacency matches the definition on the fixture") {
    for (const Graph& g : testing::connected_upto7(6)) {
        for (auto kind : {ConstraintKind::opposition, ConstraintKind::coalition}) {
            auto cg = build_constraint_graph(g, kind);
            CHECK(cg.var_count() == 2 * end_edges(g).size());
            CHECK(cg.p4_count() == induced_p4s(g).size());
            for (VarId v = 0; v < cg.var_count(); ++v) {
                for (VarId w = v + 1; w < cg.var_count(); ++w) {
                    const ArcVar s = cg.var(v);
                    const ArcVar t = cg.var(w);
                    bool expect = s.x == t.y && s.y == t.x;
                    if (kind == ConstraintKind::opposition) {
                        expect = expect || is_induced_p4(g, s.x, s.y, t.x, t.y) ||
                                 is_induced_p4(g, t.x, t.y, s.x, s.y);
                    } else {
                        expect = expect || is_induced_p4(g, s.x, s.y, t.y, t.x) ||
                                 is_induced_p4(g, t.y, t.x, s.x, s.y);
                    }
                    CHECK(cg.adjacent(v, w) == expect);
                }
            }
            // Edges: one negation per end-edge plus at most two per P4.
            CHECK(cg.edge_count() <= cg.var_count() / 2 + 2 * cg.p4_count());
        }
    }
}

TEST_CASE("bipartitions are proper and odd walks re-verify") {
    for (const Graph& g : testing::connected_upto7()) {
        for (auto kind : {ConstraintKind::opposition, ConstraintKind::coalition}) {
            auto cg = build_constraint_graph(g, kind);
            auto split = bipartition_or_odd_walk(cg);
            if (const auto* b = std::get_if<Bipartition>(&split)) {
                for (VarId v = 0; v < cg.var_count(); ++v) {
                    for (VarId w : cg.neighbors(v)) {
                        CHECK(b->side[v] != b->side[w]);
                        CHECK(b->component[v] == b->component[w]);
                    }
                }
            } else {
                CHECK(verify::odd_walk(g, kind, std::get<OddWalk>(split)));
            }
        }
    }
}

TEST_CASE("forced orientation chooses one direction per end-edge") {
    Graph g = path_graph(5);
    auto cg = build_constraint_graph(g, ConstraintKind::opposition);
    auto b = std::get<Bipartition>(bipartition_or_odd_walk(cg));
    std::vector<std::uint8_t> flips(b.component_count, 0);
    auto p = forced_orientation(cg, b, flips);
    CHECK(p.directed_count() == end_edges(g).size());
    auto o = extend_acyclic(p);
    for (const Arc& a : p.arcs()) {
        CHECK(o.points(a.tail, a.head));
    }
    CHECK(verify::opposition_orientation(g, o));
}

TEST_CASE("acyclicity check, completion and linear orders") {
    Graph c3 = cycle_graph(3);
    PartialOrientation p(c3);
    p.set(0, 1);
    p.set(1, 2);
    CHECK_FALSE(has_cycle(p));
    auto o = extend_acyclic(p);
    CHECK(o.points(0, 2));
    CHECK(linear_order(o) == std::vector<Vertex>{0, 1, 2});
    p.set(2, 0);
    auto res = is_acyclic(p);
    REQUIRE(std::holds_alternative<DirectedCycle>(res));
    CHECK(verify::directed_cycle(p, std::get<DirectedCycle>(res)));
    CHECK_THROWS_AS(extend_acyclic(p), GraphError);

    std::vector<Vertex> order{2, 0, 1};
    auto by = orient_by_order(c3, order);
    CHECK(by.points(2, 0));
    CHECK(by.points(0, 1));
    CHECK(linear_order(by) == order);
}

TEST_CASE("flip search over several components") {
    // Two disjoint P4s plus a shared path: O has one component per P4
    // pair of end-edges that do not interact.
    Graph g = parse_edge_list("a b\nb c\nc d\nx y\ny z\nz t\n");
    auto cg = build_constraint_graph(g, ConstraintKind::opposition);
    auto b = std::get<Bipartition>(bipartition_or_odd_walk(cg));
    CHECK(b.component_count == 2);
    auto res = search_acyclic_flips(cg, b);
    CHECK(res.status == FlipSearchResult::Status::found);
    CHECK(res.flips.size() == 2);
    CHECK(res.flips[0] == 0);
    CHECK(res.tried == 2);
}

TEST_CASE("flip search respects the cap") {
    Graph g = parse_edge_list("a b\nb c\nc d\nx y\ny z\nz t\n");
    auto cg = build_constraint_graph(g, ConstraintKind::opposition);
    auto b = std::get<Bipartition>(bipartition_or_odd_walk(cg));
    auto res = search_acyclic_flips(cg, b, 1);
    CHECK(res.status == FlipSearchResult::Status::capped);
    CHECK(res.tried == 1);
}

TEST_CASE("constraint graph DOT labels vars by vertex labels") {
    Graph g = testing::load("p4.el");
    auto cg = build_constraint_graph(g, ConstraintKind::opposition);
    auto dot = constraint_graph_dot(cg);
    CHECK(dot.find("\"ab\"") != std::string::npos);
    CHECK(dot.find("\"ab\" -- \"cd\"") != std::string::npos);
}
