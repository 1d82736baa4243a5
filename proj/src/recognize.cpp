#include "oppo/recognize.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "oppo/verify.hpp"

namespace oppo {

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::opposition:
            return "opposition";
        case GraphClass::generalized_opposition:
            return "generalized-opposition";
        case GraphClass::coalition:
            return "coalition";
    }
    return "?";
}

std::string to_string(Decision d) {
    switch (d) {
        case Decision::member:
            return "member";
        case Decision::non_member:
            return "non-member";
        case Decision::undecided:
            return "undecided";
    }
    return "?";
}

std::optional<GraphClass> parse_graph_class(const std::string& s) {
    for (GraphClass c : {GraphClass::opposition, GraphClass::generalized_opposition,
                         GraphClass::coalition}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    return std::nullopt;
}

ConstraintKind constraint_kind(GraphClass c) {
    return c == GraphClass::coalition ? ConstraintKind::coalition : ConstraintKind::opposition;
}

std::string to_string(RootRule r) {
    switch (r) {
        case RootRule::p5_free_search:
            return "p5-free-search";
        case RootRule::p5_midpoint:
            return "p5-midpoint";
        case RootRule::hk_apex:
            return "hk-apex";
    }
    return "?";
}

namespace {

std::size_t count_aux_components(const ConstraintGraph& cg) {
    std::vector<bool> seen(cg.var_count(), false);
    std::size_t count = 0;
    for (VarId s = 0; s < cg.var_count(); ++s) {
        if (seen[s]) {
            continue;
        }
        ++count;
        std::vector<VarId> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            VarId v = stack.back();
            stack.pop_back();
            for (VarId w : cg.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

// Aux graph, its bipartition or odd walk, and the stats they feed.
struct Aux {
    ConstraintGraph cg;
    std::variant<Bipartition, OddWalk> split;

    const Bipartition* bipartition() const { return std::get_if<Bipartition>(&split); }
};

Aux build_aux(const Graph& g, ConstraintKind kind, Verdict& v) {
    Aux aux{build_constraint_graph(g, kind), {}};
    aux.split = bipartition_or_odd_walk(aux.cg);
    v.stats.p4_count = aux.cg.p4_count();
    v.stats.aux_vertices = aux.cg.var_count();
    if (const auto* b = aux.bipartition()) {
        v.stats.aux_components = b->component_count;
    } else {
        v.stats.aux_components = count_aux_components(aux.cg);
    }
    return aux;
}

Verdict start(GraphClass c) {
    Verdict v;
    v.graph_class = c;
    return v;
}

void accept(const Graph& g, Verdict& v, Orientation o, std::string method) {
    v.decision = Decision::member;
    v.method = std::move(method);
    v.certificate = std::move(o);
    if (auto check = verify::verdict(g, v); !check) {
        throw std::logic_error("member certificate failed verification (" + v.method +
                               "): " + check.reason);
    }
}

void reject(Verdict& v, Certificate cert, std::string method) {
    v.decision = Decision::non_member;
    v.method = std::move(method);
    v.certificate = std::move(cert);
}

// Exact search over flip vectors; fills v completely.
void decide_by_flips(const Graph& g, const Aux& aux, const RecognizeOptions& options, Verdict& v) {
    const Bipartition& b = *aux.bipartition();
    auto res = search_acyclic_flips(aux.cg, b, options.flip_cap);
    v.stats.flips_tried = res.tried;
    switch (res.status) {
        case FlipSearchResult::Status::found:
            accept(g, v, extend_acyclic(forced_orientation(aux.cg, b, res.flips)), "flip-search");
            return;
        case FlipSearchResult::Status::exhausted: {
            FlipRefutation r{aux.cg.kind(), aux.cg.vars(),          b.side,
                             b.component,   b.component_count, std::move(res.branches)};
            reject(v, std::move(r), "flip-search-exhausted");
            return;
        }
        case FlipSearchResult::Status::capped:
            v.decision = Decision::undecided;
            v.method = "flip-search-capped";
            v.certificate = std::monostate{};
            return;
    }
}

// Flips all 0 must already be acyclic (structural fast paths).
void accept_any_bipartition(const Graph& g, const Aux& aux, Verdict& v, const std::string& method) {
    const Bipartition& b = *aux.bipartition();
    std::vector<std::uint8_t> flips(b.component_count, 0);
    auto po = forced_orientation(aux.cg, b, flips);
    if (std::holds_alternative<DirectedCycle>(is_acyclic(po))) {
        throw std::logic_error(method + ": forced orientation of a bipartition has a cycle");
    }
    v.stats.flips_tried = 1;
    accept(g, v, extend_acyclic(po), method);
}

std::optional<PatternMatch> opposition_witness(const Graph& g) {
    if (auto t = find_tk_violation(g)) {
        return t->match;
    }
    for (const Pattern& p : {patterns::a(), patterns::g1(), patterns::g2()}) {
        if (auto m = find_induced(g, p)) {
            return m;
        }
    }
    return std::nullopt;
}

Orientation orient_with_gaps_low_high(const Graph& g, const PartialOrientation& po) {
    Orientation o(g);
    for (const Arc& a : po.arcs()) {
        o.set(a.tail, a.head);
    }
    return o;
}

}  // namespace

// ---------------------------------------------------------------- opposition

Verdict recognize_generalized_opposition(const Graph& g, const RecognizeOptions&) {
    Verdict v = start(GraphClass::generalized_opposition);
    Aux aux = build_aux(g, ConstraintKind::opposition, v);
    if (const auto* w = std::get_if<OddWalk>(&aux.split)) {
        reject(v, *w, "aux-odd-walk");
        return v;
    }
    const Bipartition& b = *aux.bipartition();
    auto po = forced_orientation(aux.cg, b, std::vector<std::uint8_t>(b.component_count, 0));
    v.stats.flips_tried = 1;
    if (std::holds_alternative<TopologicalOrder>(is_acyclic(po))) {
        accept(g, v, extend_acyclic(po), "aux-bipartite");
    } else {
        accept(g, v, orient_with_gaps_low_high(g, po), "aux-bipartite");
    }
    return v;
}

namespace {

Verdict opposition_impl(const Graph& g, const RecognizeOptions& options, bool try_dh);

void add_opposition_witness(const Graph& g, const RecognizeOptions& options, Verdict& v) {
    if (options.witness && v.decision == Decision::non_member && !v.witness) {
        v.witness = opposition_witness(g);
    }
}

// Places each removed twin right after its partner.
std::vector<Vertex> reinsert_twins(std::vector<Vertex> order, const std::vector<PruneStep>& removed) {
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        auto pos = std::find(order.begin(), order.end(), it->partner);
        order.insert(pos + 1, it->removed);
    }
    return order;
}

std::optional<Orientation> dh_opposition_orientation(const Graph& g, std::string& method) {
    if (is_ptolemaic(g).member) {
        method = "distance-hereditary/ptolemaic-construction";
        return ptolemaic_opposition_orient(g);
    }
    // Strip twins one at a time until none are left.
    std::vector<PruneStep> removed;
    std::vector<Vertex> alive(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        alive[v] = v;
    }
    InducedSubgraph core{g, alive};
    for (;;) {
        std::optional<TwinOrPendant> twin;
        for (const auto& t : twins_and_pendants(core.graph)) {
            if (t.kind != PruneKind::pendant) {
                twin = t;
                break;
            }
        }
        if (!twin) {
            break;
        }
        removed.push_back({twin->kind, core.to_original[twin->second],
                           core.to_original[twin->first]});
        auto next = delete_vertex(core.graph, twin->second);
        std::vector<Vertex> ids;
        for (Vertex v : next.to_original) {
            ids.push_back(core.to_original[v]);
        }
        core = InducedSubgraph{std::move(next.graph), std::move(ids)};
    }
    if (!is_ptolemaic(core.graph).member) {
        return std::nullopt;
    }
    auto sub_order = linear_order(ptolemaic_opposition_orient(core.graph));
    std::vector<Vertex> order;
    for (Vertex v : sub_order) {
        order.push_back(core.to_original[v]);
    }
    method = "distance-hereditary/twin-reduction";
    return orient_by_order(g, reinsert_twins(std::move(order), removed));
}

Verdict opposition_impl(const Graph& g, const RecognizeOptions& options, bool try_dh) {
    Verdict v = start(GraphClass::opposition);
    Aux aux = build_aux(g, ConstraintKind::opposition, v);
    const bool dh = try_dh && is_distance_hereditary(g).member;
    if (const auto* w = std::get_if<OddWalk>(&aux.split)) {
        reject(v, *w, dh ? "distance-hereditary/aux-odd-walk" : "aux-odd-walk");
        add_opposition_witness(g, options, v);
        return v;
    }
    if (dh) {
        std::string method;
        if (auto o = dh_opposition_orientation(g, method)) {
            v.stats.flips_tried = 0;
            accept(g, v, std::move(*o), method);
            return v;
        }
    }
    if (is_gem_house_free(g).member) {
        accept_any_bipartition(g, aux, v, "gem-house-free");
        return v;
    }
    decide_by_flips(g, aux, options, v);
    add_opposition_witness(g, options, v);
    return v;
}

}  // namespace

Verdict recognize_opposition(const Graph& g, const RecognizeOptions& options) {
    return opposition_impl(g, options, true);
}

Verdict recognize_opposition_gem_house_free(const Graph& g, const RecognizeOptions& options) {
    if (!is_gem_house_free(g).member) {
        return recognize_opposition(g, options);
    }
    return opposition_impl(g, options, false);
}

Verdict recognize_opposition_distance_hereditary(const Graph& g, const RecognizeOptions& options) {
    return recognize_opposition(g, options);
}

// ----------------------------------------------------------------- coalition

namespace {

Verdict coalition_generic(const Graph& g, const RecognizeOptions& options) {
    Verdict v = start(GraphClass::coalition);
    Aux aux = build_aux(g, ConstraintKind::coalition, v);
    if (const auto* w = std::get_if<OddWalk>(&aux.split)) {
        reject(v, *w, "aux-odd-walk");
    } else if (is_gem_house_hole_free(g).member) {
        accept_any_bipartition(g, aux, v, "gem-house-hole-free");
    } else {
        decide_by_flips(g, aux, options, v);
    }
    if (options.witness && v.decision == Decision::non_member) {
        v.witness = find_induced(g, patterns::n());
    }
    return v;
}

}  // namespace

Verdict recognize_coalition(const Graph& g, const RecognizeOptions& options) {
    if (is_distance_hereditary(g).member) {
        Verdict v = start(GraphClass::coalition);
        Aux aux = build_aux(g, ConstraintKind::coalition, v);
        if (auto m = find_induced(g, patterns::n())) {
            reject(v, *m, "distance-hereditary/N-pattern");
            if (options.witness) {
                v.witness = *m;
            }
            return v;
        }
        if (auto o = transitive_orient(g)) {
            accept(g, v, std::move(*o), "distance-hereditary/transitive");
            return v;
        }
        throw std::logic_error("N-free distance-hereditary graph without transitive orientation");
    }
    return coalition_generic(g, options);
}

Verdict recognize_coalition_distance_hereditary(const Graph& g, const RecognizeOptions& options) {
    return recognize_coalition(g, options);
}

Verdict recognize(const Graph& g, GraphClass c, const RecognizeOptions& options) {
    switch (c) {
        case GraphClass::opposition:
            return recognize_opposition(g, options);
        case GraphClass::generalized_opposition:
            return recognize_generalized_opposition(g, options);
        case GraphClass::coalition:
            return recognize_coalition(g, options);
    }
    throw std::invalid_argument("unknown graph class");
}

// ------------------------------------------------------ ptolemaic constructor

namespace {

std::string show(const Graph& g, const P4& p) {
    return g.label(p.a) + "-" + g.label(p.b) + "-" + g.label(p.c) + "-" + g.label(p.d);
}

// Layered orientation of a connected graph rooted at w.
Orientation layered_orientation(const Graph& g, Vertex w) {
    const auto layers = layer_decompose(g, w);
    PartialOrientation po(g);
    for (const Edge& e : g.edges()) {
        Vertex u = e.u;
        Vertex x = e.v;
        if (layers.layer[u] == layers.layer[x]) {
            continue;
        }
        if (layers.layer[u] > layers.layer[x]) {
            std::swap(u, x);
        }
        const auto i = layers.layer[u] % 4;
        if (i == 0 || i == 1) {
            po.set(u, x);
        } else {
            po.set(x, u);
        }
    }
    std::map<EdgeId, P4> forced_by;
    for (const P4& p : induced_p4s(g)) {
        auto cls = classify_layer_type(p, layers);
        if (!cls) {
            throw ConstructionError("induced P4 " + show(g, p) + " fits no layer type");
        }
        if (cls->type != LayerType::D && cls->type != LayerType::E) {
            continue;
        }
        const P4& q = cls->path;
        const bool cd = po.points(q.c, q.d);
        Vertex tail = cd ? q.b : q.a;
        Vertex head = cd ? q.a : q.b;
        const EdgeId e = g.edge_id(q.a, q.b);
        if (!po.set(tail, head)) {
            throw ConstructionError("conflicting directions on " + g.label(q.a) + g.label(q.b) +
                                    " from P4s " + show(g, forced_by.at(e)) + " and " +
                                    show(g, q));
        }
        forced_by.emplace(e, q);
    }
    const auto acyclic = is_acyclic(po);
    if (const auto* cyc = std::get_if<DirectedCycle>(&acyclic)) {
        std::string s;
        for (Vertex v : cyc->cycle) {
            s += g.label(v) + " ";
        }
        throw ConstructionError("forced layer orientation has a directed cycle: " + s);
    }
    Orientation o = extend_acyclic(po);
    if (auto check = verify::opposition_orientation(g, o); !check) {
        throw ConstructionError("layered orientation rooted at " + g.label(w) +
                                " fails: " + check.reason);
    }
    return o;
}

}  // namespace

PtolemaicOrientation ptolemaic_opposition_construct(const Graph& g) {
    PtolemaicOrientation result;
    const auto comps = connected_components(g);
    std::vector<std::vector<Vertex>> members(comps.count);
    for (Vertex v = 0; v < g.order(); ++v) {
        members[comps.of[v]].push_back(v);
    }
    std::vector<Vertex> order;
    for (const auto& verts : members) {
        auto sub = induced_subgraph(g, verts);
        const Graph& h = sub.graph;
        std::vector<Vertex> local;
        if (induced_p4s(h).empty()) {
            for (Vertex v = 0; v < h.order(); ++v) {
                local.push_back(v);
            }
        } else if (auto p5 = find_induced(h, patterns::p5())) {
            ComponentRoot root;
            if (auto hk = find_max_hk(h)) {
                root = {RootRule::hk_apex, hk->apex, hk->k, hk->variant};
            } else {
                root = {RootRule::p5_midpoint, p5->embedding[2], 0, HkVariant::full};
            }
            local = linear_order(layered_orientation(h, root.root));
            root.root = sub.to_original[root.root];
            result.roots.push_back(root);
        } else {
            auto cg = build_constraint_graph(h, ConstraintKind::opposition);
            auto split = bipartition_or_odd_walk(cg);
            const auto* b = std::get_if<Bipartition>(&split);
            if (b == nullptr) {
                throw ConstructionError("P5-free component has a non-bipartite constraint graph");
            }
            auto res = search_acyclic_flips(cg, *b);
            if (res.status != FlipSearchResult::Status::found) {
                throw ConstructionError("P5-free component admits no acyclic flip vector");
            }
            local = linear_order(extend_acyclic(forced_orientation(cg, *b, res.flips)));
            result.roots.push_back({RootRule::p5_free_search, sub.to_original[0], 0,
                                    HkVariant::full});
        }
        for (Vertex v : local) {
            order.push_back(sub.to_original[v]);
        }
    }
    result.orientation = orient_by_order(g, order);
    if (auto check = verify::opposition_orientation(g, result.orientation); !check) {
        throw ConstructionError("combined orientation fails: " + check.reason);
    }
    return result;
}

// --------------------------------------------------------- transitive orient

std::optional<Orientation> transitive_orient(const Graph& g) {
    constexpr std::uint32_t kFree = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> cls(g.size(), kFree);
    PartialOrientation po(g);
    // Present in the current graph: not taken by an earlier class.
    auto present = [&](Vertex x, Vertex y, std::uint32_t current) {
        const EdgeId e = g.edge_id(x, y);
        return e != kNoEdge && (cls[e] == kFree || cls[e] == current);
    };
    std::uint32_t current = 0;
    for (EdgeId start = 0; start < g.size(); ++start) {
        if (cls[start] != kFree) {
            continue;
        }
        std::deque<Arc> queue{{g.edge(start).u, g.edge(start).v}};
        cls[start] = current;
        po.set(g.edge(start).u, g.edge(start).v);
        auto force = [&](Vertex x, Vertex y) {
            const EdgeId e = g.edge_id(x, y);
            if (cls[e] == kFree) {
                cls[e] = current;
                po.set(x, y);
                queue.push_back({x, y});
                return true;
            }
            return cls[e] != current || po.points(x, y);
        };
        while (!queue.empty()) {
            const Arc a = queue.front();
            queue.pop_front();
            for (Vertex b2 : g.neighbors(a.tail)) {
                if (b2 != a.head && present(a.tail, b2, current) &&
                    !present(a.head, b2, current) && !force(a.tail, b2)) {
                    return std::nullopt;
                }
            }
            for (Vertex a2 : g.neighbors(a.head)) {
                if (a2 != a.tail && present(a2, a.head, current) &&
                    !present(a.tail, a2, current) && !force(a2, a.head)) {
                    return std::nullopt;
                }
            }
        }
        ++current;
    }
    Orientation o(g);
    for (const Arc& a : po.arcs()) {
        o.set(a.tail, a.head);
    }
    if (!verify::transitive_orientation(g, o)) {
        return std::nullopt;
    }
    return o;
}

}  // namespace oppo
