#include "oppo/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oppo::verify {

namespace {

struct Path {
    Vertex a, b, c, d;
};

bool p4_shape(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
    std::set<Vertex> distinct{a, b, c, d};
    if (distinct.size() != 4) {
        return false;
    }
    return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
           !g.adjacent(b, d) && !g.adjacent(a, d);
}

// Walks a-b-c-d along neighbor lists; one copy per vertex set (a < d).
std::vector<Path> walk_p4s(const Graph& g) {
    std::vector<Path> out;
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b : g.neighbors(a)) {
            for (Vertex c : g.neighbors(b)) {
                if (c == a || g.adjacent(a, c)) {
                    continue;
                }
                for (Vertex d : g.neighbors(c)) {
                    if (d > a && d != b && !g.adjacent(b, d) && !g.adjacent(a, d)) {
                        out.push_back({a, b, c, d});
                    }
                }
            }
        }
    }
    return out;
}

std::string show(const Graph& g, const Path& p) {
    return g.label(p.a) + "-" + g.label(p.b) + "-" + g.label(p.c) + "-" + g.label(p.d);
}

bool same_base(const Graph& g, const Orientation& o) {
    return &o.base() == &g || o.base() == g;
}

// Source-peeling acyclicity test over the arcs of a complete orientation.
bool peel_acyclic(std::size_t n, const std::vector<Arc>& arcs) {
    std::vector<std::vector<Vertex>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (const Arc& a : arcs) {
        out[a.tail].push_back(a.head);
        ++indeg[a.head];
    }
    std::vector<Vertex> sources;
    for (Vertex v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
            sources.push_back(v);
        }
    }
    std::size_t removed = 0;
    while (!sources.empty()) {
        Vertex v = sources.back();
        sources.pop_back();
        ++removed;
        for (Vertex w : out[v]) {
            if (--indeg[w] == 0) {
                sources.push_back(w);
            }
        }
    }
    return removed == n;
}

enum class Want { opposed, aligned };

Check p4_types(const Graph& g, const Orientation& o, Want want) {
    for (const Path& p : walk_p4s(g)) {
        const bool ab = o.points(p.a, p.b);
        const bool dc = o.points(p.d, p.c);
        const bool opposed = ab == dc;
        if ((want == Want::opposed) != opposed) {
            return Check::fail("induced P4 " + show(g, p) + " has end-edges " +
                               (opposed ? "in opposition" : "aligned"));
        }
    }
    return Check::pass();
}

bool aux_adjacent(const Graph& g, ConstraintKind kind, const ArcVar& s, const ArcVar& t) {
    if (s.x == t.y && s.y == t.x) {
        return true;
    }
    if (kind == ConstraintKind::opposition) {
        return p4_shape(g, s.x, s.y, t.x, t.y) || p4_shape(g, t.x, t.y, s.x, s.y);
    }
    return p4_shape(g, s.x, s.y, t.y, t.x) || p4_shape(g, t.y, t.x, s.x, s.y);
}

std::set<Edge> brute_end_edges(const Graph& g) {
    std::set<Edge> ends;
    for (const Path& p : walk_p4s(g)) {
        ends.insert({std::min(p.a, p.b), std::max(p.a, p.b)});
        ends.insert({std::min(p.c, p.d), std::max(p.c, p.d)});
    }
    return ends;
}

}  // namespace

Check orientation_acyclic(const Orientation& o) {
    if (!peel_acyclic(o.base().order(), o.arcs())) {
        return Check::fail("orientation has a directed cycle");
    }
    return Check::pass();
}

Check opposition_orientation(const Graph& g, const Orientation& o) {
    if (!same_base(g, o)) {
        return Check::fail("orientation belongs to a different graph");
    }
    if (auto c = orientation_acyclic(o); !c) {
        return c;
    }
    return p4_types(g, o, Want::opposed);
}

Check coalition_orientation(const Graph& g, const Orientation& o) {
    if (!same_base(g, o)) {
        return Check::fail("orientation belongs to a different graph");
    }
    if (auto c = orientation_acyclic(o); !c) {
        return c;
    }
    return p4_types(g, o, Want::aligned);
}

Check generalized_opposition_orientation(const Graph& g, const Orientation& o) {
    if (!same_base(g, o)) {
        return Check::fail("orientation belongs to a different graph");
    }
    return p4_types(g, o, Want::opposed);
}

Check transitive_orientation(const Graph& g, const Orientation& o) {
    if (!same_base(g, o)) {
        return Check::fail("orientation belongs to a different graph");
    }
    if (auto c = orientation_acyclic(o); !c) {
        return c;
    }
    for (Vertex b = 0; b < g.order(); ++b) {
        for (Vertex a : g.neighbors(b)) {
            if (!o.points(a, b)) {
                continue;
            }
            for (Vertex c : g.neighbors(b)) {
                if (o.points(b, c) && !o.points(a, c)) {
                    return Check::fail("arcs " + g.label(a) + "->" + g.label(b) + "->" +
                                       g.label(c) + " without " + g.label(a) + "->" + g.label(c));
                }
            }
        }
    }
    return Check::pass();
}

Check odd_walk(const Graph& g, ConstraintKind kind, const OddWalk& walk) {
    const auto& w = walk.walk;
    if (w.size() < 2) {
        return Check::fail("walk too short");
    }
    if (w.front() != w.back()) {
        return Check::fail("walk is not closed");
    }
    if ((w.size() - 1) % 2 == 0) {
        return Check::fail("walk has even length");
    }
    for (const ArcVar& v : w) {
        if (!g.adjacent(v.x, v.y)) {
            return Check::fail("walk variable is not an edge");
        }
    }
    const auto ends = brute_end_edges(g);
    for (const ArcVar& v : w) {
        if (!ends.contains({std::min(v.x, v.y), std::max(v.x, v.y)})) {
            return Check::fail("walk variable is not an end-edge");
        }
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (!aux_adjacent(g, kind, w[i], w[i + 1])) {
            return Check::fail("hop " + std::to_string(i) + " is not a constraint edge");
        }
    }
    return Check::pass();
}

Check flip_refutation(const Graph& g, const FlipRefutation& r) {
    const std::size_t nv = r.vars.size();
    if (r.side.size() != nv || r.component.size() != nv) {
        return Check::fail("bipartition arrays have the wrong size");
    }
    // Variables are exactly both directions of every end-edge.
    std::set<ArcVar> expect;
    for (const Edge& e : brute_end_edges(g)) {
        expect.insert({e.u, e.v});
        expect.insert({e.v, e.u});
    }
    std::set<ArcVar> have(r.vars.begin(), r.vars.end());
    if (have != expect || have.size() != nv) {
        return Check::fail("variables do not match the end-edges");
    }
    for (std::size_t i = 0; i < nv; ++i) {
        if (r.component[i] >= r.component_count) {
            return Check::fail("component index out of range");
        }
    }
    // Proper coloring, no edges between components, components connected.
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            if (!aux_adjacent(g, r.kind, r.vars[i], r.vars[j])) {
                continue;
            }
            if (r.side[i] == r.side[j]) {
                return Check::fail("adjacent variables share a side");
            }
            if (r.component[i] != r.component[j]) {
                return Check::fail("constraint edge joins two components");
            }
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    }
    std::vector<bool> seen(nv, false);
    std::vector<bool> comp_seen(r.component_count, false);
    for (std::size_t s = 0; s < nv; ++s) {
        if (seen[s]) {
            continue;
        }
        if (comp_seen[r.component[s]]) {
            return Check::fail("component " + std::to_string(r.component[s]) + " is disconnected");
        }
        comp_seen[r.component[s]] = true;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    if (std::find(comp_seen.begin(), comp_seen.end(), false) != comp_seen.end()) {
        return Check::fail("empty component");
    }
    if (r.component_count == 0) {
        return Check::fail("no components: the empty flip vector is not refuted");
    }

    // Every branch's cycle is forced by its prefix.
    std::vector<std::size_t> index_of_var;
    auto var_index = [&](Vertex x, Vertex y) -> std::optional<std::size_t> {
        auto it = std::find(r.vars.begin(), r.vars.end(), ArcVar{x, y});
        if (it == r.vars.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - r.vars.begin());
    };
    std::set<std::vector<std::uint8_t>> prefixes;
    for (const auto& br : r.branches) {
        if (br.prefix.empty() || br.prefix.size() > r.component_count || br.prefix[0] != 0) {
            return Check::fail("malformed branch prefix");
        }
        const auto& cyc = br.cycle.cycle;
        if (cyc.size() < 3 || std::set<Vertex>(cyc.begin(), cyc.end()).size() != cyc.size()) {
            return Check::fail("branch cycle is not a simple cycle");
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Vertex x = cyc[i];
            Vertex y = cyc[(i + 1) % cyc.size()];
            auto vi = var_index(x, y);
            if (!vi) {
                return Check::fail("branch cycle uses a non-end-edge arc");
            }
            const auto comp = r.component[*vi];
            if (comp >= br.prefix.size() || (r.side[*vi] ^ br.prefix[comp]) != 0) {
                return Check::fail("branch cycle arc is not forced by its prefix");
            }
        }
        prefixes.insert(br.prefix);
    }
    // Prefixes cover every vector with component 0 = 0.
    std::function<bool(std::vector<std::uint8_t>&)> covered = [&](std::vector<std::uint8_t>& pre) {
        if (prefixes.contains(pre)) {
            return true;
        }
        if (pre.size() == r.component_count) {
            return false;
        }
        for (std::uint8_t f : {0, 1}) {
            pre.push_back(f);
            bool ok = covered(pre);
            pre.pop_back();
            if (!ok) {
                return false;
            }
        }
        return true;
    };
    std::vector<std::uint8_t> root{0};
    if (!covered(root)) {
        return Check::fail("branches do not cover every flip vector");
    }
    return Check::pass();
}

Check pattern_match(const Graph& g, const Pattern& p, const PatternMatch& m) {
    if (m.embedding.size() != p.order()) {
        return Check::fail("embedding size differs from pattern size");
    }
    std::set<Vertex> image(m.embedding.begin(), m.embedding.end());
    if (image.size() != m.embedding.size()) {
        return Check::fail("embedding is not injective");
    }
    for (Vertex v : m.embedding) {
        if (v >= g.order()) {
            return Check::fail("embedding leaves the host graph");
        }
    }
    for (Vertex i = 0; i < p.order(); ++i) {
        for (Vertex j = i + 1; j < p.order(); ++j) {
            if (p.graph.adjacent(i, j) != g.adjacent(m.embedding[i], m.embedding[j])) {
                return Check::fail("embedding is not induced at pattern pair " +
                                   p.roles[i] + "," + p.roles[j]);
            }
        }
    }
    return Check::pass();
}

Check obstruction(const Pattern& p, ConstraintKind kind) {
    const Graph& g = p.graph;
    std::vector<ArcVar> vars;
    for (const Edge& e : brute_end_edges(g)) {
        vars.push_back({e.u, e.v});
        vars.push_back({e.v, e.u});
    }
    // Two-color by DFS; a conflict means not bipartite.
    std::vector<int> color(vars.size(), -1);
    for (std::size_t s = 0; s < vars.size(); ++s) {
        if (color[s] >= 0) {
            continue;
        }
        color[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < vars.size(); ++w) {
                if (w == v || !aux_adjacent(g, kind, vars[v], vars[w])) {
                    continue;
                }
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return Check::pass();
                }
            }
        }
    }
    return Check::fail("pattern " + p.name + " has a bipartite " + to_string(kind) +
                       " constraint graph");
}

Check induced_cycle(const Graph& g, const std::vector<Vertex>& cycle, std::size_t min_length) {
    const std::size_t k = cycle.size();
    if (k < min_length || k < 3) {
        return Check::fail("cycle too short");
    }
    if (std::set<Vertex>(cycle.begin(), cycle.end()).size() != k) {
        return Check::fail("cycle repeats a vertex");
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) {
                return Check::fail("cycle is not induced");
            }
        }
    }
    return Check::pass();
}

Check directed_cycle(const PartialOrientation& o, const DirectedCycle& c) {
    const auto& cyc = c.cycle;
    if (cyc.size() < 3) {
        return Check::fail("cycle too short");
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (!o.points(cyc[i], cyc[(i + 1) % cyc.size()])) {
            return Check::fail("cycle arc is not directed that way");
        }
    }
    return Check::pass();
}

Check pruning_sequence(const Graph& g, const std::vector<PruneStep>& steps) {
    const std::size_t n = g.order();
    std::vector<bool> alive(n, true);
    auto live_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(v)) {
            if (alive[w]) {
                out.push_back(w);
            }
        }
        return out;
    };
    for (const PruneStep& s : steps) {
        if (s.removed >= n || s.partner >= n || !alive[s.removed] || !alive[s.partner] ||
            s.removed == s.partner) {
            return Check::fail("pruning step refers to a removed vertex");
        }
        auto nr = live_neighbors(s.removed);
        auto np = live_neighbors(s.partner);
        switch (s.kind) {
            case PruneKind::pendant:
                if (nr.size() != 1 || nr[0] != s.partner) {
                    return Check::fail("pruned vertex is not a pendant of its partner");
                }
                break;
            case PruneKind::false_twin:
                if (g.adjacent(s.removed, s.partner) || nr != np) {
                    return Check::fail("pruned vertex is not a false twin");
                }
                break;
            case PruneKind::true_twin: {
                if (!g.adjacent(s.removed, s.partner)) {
                    return Check::fail("pruned vertex is not a true twin");
                }
                std::erase(nr, s.partner);
                std::erase(np, s.removed);
                if (nr != np) {
                    return Check::fail("pruned vertex is not a true twin");
                }
                break;
            }
        }
        alive[s.removed] = false;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (alive[v] && !live_neighbors(v).empty()) {
            return Check::fail("pruning leaves an edge behind");
        }
    }
    return Check::pass();
}

Check perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
    if (order.size() != g.order()) {
        return Check::fail("order does not cover the graph");
    }
    std::vector<std::size_t> pos(g.order(), g.order());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= g.order() || pos[order[i]] != g.order()) {
            return Check::fail("order is not a permutation");
        }
        pos[order[i]] = i;
    }
    for (Vertex v : order) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] > pos[v]) {
                later.push_back(w);
            }
        }
        for (std::size_t i = 0; i < later.size(); ++i) {
            for (std::size_t j = i + 1; j < later.size(); ++j) {
                if (!g.adjacent(later[i], later[j])) {
                    return Check::fail("later neighbors of " + g.label(v) + " are not a clique");
                }
            }
        }
    }
    return Check::pass();
}

Check verdict(const Graph& g, const Verdict& v) {
    const ConstraintKind kind = constraint_kind(v.graph_class);
    if (v.decision == Decision::undecided) {
        return std::holds_alternative<std::monostate>(v.certificate)
                   ? Check::pass()
                   : Check::fail("undecided verdict carries a certificate");
    }
    if (v.decision == Decision::member) {
        const auto* o = std::get_if<Orientation>(&v.certificate);
        if (o == nullptr) {
            return Check::fail("member verdict without an orientation");
        }
        switch (v.graph_class) {
            case GraphClass::opposition:
                return opposition_orientation(g, *o);
            case GraphClass::coalition:
                return coalition_orientation(g, *o);
            case GraphClass::generalized_opposition:
                return generalized_opposition_orientation(g, *o);
        }
    }
    if (const auto* w = std::get_if<OddWalk>(&v.certificate)) {
        return odd_walk(g, kind, *w);
    }
    if (const auto* r = std::get_if<FlipRefutation>(&v.certificate)) {
        if (v.graph_class == GraphClass::generalized_opposition) {
            return Check::fail("flip refutation cannot reject generalized opposition");
        }
        if (r->kind != kind) {
            return Check::fail("flip refutation is for the wrong constraint kind");
        }
        return flip_refutation(g, *r);
    }
    if (const auto* m = std::get_if<PatternMatch>(&v.certificate)) {
        auto p = pattern_by_name(m->pattern);
        if (!p) {
            return Check::fail("unknown pattern " + m->pattern);
        }
        if (auto c = pattern_match(g, *p, *m); !c) {
            return c;
        }
        return obstruction(*p, kind);
    }
    return Check::fail("non-member verdict without a certificate");
}

}  // namespace oppo::verify
