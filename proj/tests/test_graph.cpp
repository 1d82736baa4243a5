#include <doctest.h>

#include "oppo/graph.hpp"
#include "support.hpp"

using namespace oppo;

TEST_CASE("edge list parsing keeps labels and ignores comments") {
    Graph g = parse_edge_list("# header\na b\nb c # trailing\n\nd\n  c a  \n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.label(0) == "a");
    CHECK(g.label(3) == "d");
    CHECK(g.degree(3) == 0);
    CHECK(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(0, 3));
}

TEST_CASE("edge list duplicates collapse") {
    Graph g = parse_edge_list("1 2\n2 1\n1 2\n");
    CHECK(g.size() == 1);
}

TEST_CASE("edge list errors carry the line number") {
    try {
        parse_edge_list("1 2\n2 3 4\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        parse_edge_list("1 2\n\n# c\n5 5\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("graph construction rejects self-loops and bad endpoints") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
}

TEST_CASE("graph6 of small cycles matches networkx") {
    // Strings produced by networkx.to_graph6_bytes.
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(path_graph(4)) == "Ch");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(parse_graph6("Dhc") == cycle_graph(5));
    CHECK(parse_graph6(">>graph6<<Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 round trip over the connected fixture") {
    auto graphs = testing::connected_upto7();
    REQUIRE(graphs.size() == 996);
    for (const Graph& g : graphs) {
        CHECK(parse_graph6(to_graph6(g)) == g);
        CHECK(is_connected(g));
    }
}

TEST_CASE("graph6 large order header") {
    Graph g = path_graph(70);
    std::string s = to_graph6(g);
    CHECK(s[0] == '~');
    CHECK(parse_graph6(s) == g);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D"), ParseError);
    CHECK_THROWS_AS(parse_graph6("D h c"), ParseError);
}

TEST_CASE("edges are sorted and ids are consistent") {
    Graph g(4, {{3, 1}, {0, 2}, {2, 1}, {0, 1}});
    std::vector<Edge> expect{{0, 1}, {0, 2}, {1, 2}, {1, 3}};
    CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expect);
    for (EdgeId e = 0; e < g.size(); ++e) {
        CHECK(g.edge_id(g.edge(e).u, g.edge(e).v) == e);
        CHECK(g.edge_id(g.edge(e).v, g.edge(e).u) == e);
    }
    CHECK(g.edge_id(0, 3) == kNoEdge);
}

TEST_CASE("orientation set, reverse and points") {
    Graph g = path_graph(3);
    Orientation o(g);
    CHECK(o.points(0, 1));
    o.set(2, 1);
    CHECK(o.points(2, 1));
    CHECK_FALSE(o.points(1, 2));
    Orientation r = o.reversed();
    CHECK(r.points(1, 0));
    CHECK(r.points(1, 2));
    CHECK_THROWS_AS(o.set(0, 2), GraphError);
}

TEST_CASE("partial orientation reports conflicts") {
    Graph g = path_graph(3);
    PartialOrientation p(g);
    CHECK(p.directed_count() == 0);
    CHECK(p.set(1, 0));
    CHECK(p.set(1, 0));
    CHECK_FALSE(p.set(0, 1));
    CHECK(p.points(1, 0));
    CHECK(p.directed_count() == 1);
    CHECK_FALSE(p.arc(g.edge_id(1, 2)).has_value());
}

TEST_CASE("induced subgraph, complement and components") {
    Graph g = parse_edge_list("a b\nb c\nd e\n");
    auto comps = connected_components(g);
    CHECK(comps.count == 2);
    CHECK(comps.of[0] == comps.of[2]);
    CHECK(comps.of[0] != comps.of[3]);
    CHECK_FALSE(is_connected(g));

    std::vector<Vertex> keep{2, 1, 3};
    auto sub = induced_subgraph(g, keep);
    CHECK(sub.graph.order() == 3);
    CHECK(sub.graph.size() == 1);
    CHECK(sub.graph.label(0) == "c");
    CHECK(sub.to_original == keep);

    Graph c6 = cycle_graph(6);
    Graph co = complement(c6);
    CHECK(co.size() == 15 - 6);
    CHECK(complement(co) == c6);
    CHECK(delete_vertex(c6, 0).graph == path_graph(5));
}

TEST_CASE("dot output is deterministic and marks highlights") {
    Graph g = path_graph(3);
    Orientation o(g);
    std::vector<Vertex> hl{1};
    DotOptions opts;
    opts.orientation = &o;
    opts.highlight = hl;
    std::string dot = emit_dot(g, opts);
    CHECK(dot == emit_dot(g, opts));
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("\"0\" -> \"1\"") != std::string::npos);
    CHECK(dot.find("\"1\" [style=filled, fillcolor=red]") != std::string::npos);
    CHECK(emit_dot(g).rfind("graph", 0) == 0);
}

TEST_CASE("edge list round trip preserves the graph") {
    for (const Graph& g : testing::connected_upto7(5)) {
        CHECK(parse_edge_list(to_edge_list(g)).size() == g.size());
    }
}
