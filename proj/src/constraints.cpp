#include "oppo/constraints.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace oppo {

std::string to_string(ConstraintKind kind) {
    return kind == ConstraintKind::opposition ? "opposition" : "coalition";
}

bool ConstraintGraph::adjacent(VarId a, VarId b) const {
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t ConstraintGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) {
        twice += nb.size();
    }
    return twice / 2;
}

std::optional<VarId> ConstraintGraph::find(Vertex x, Vertex y) const {
    EdgeId e = base_->edge_id(x, y);
    if (e == kNoEdge || var_of_edge_[e] == static_cast<VarId>(-1)) {
        return std::nullopt;
    }
    VarId first = var_of_edge_[e];
    return vars_[first].x == x ? first : first + 1;
}

ConstraintGraph build_constraint_graph(const Graph& g, ConstraintKind kind) {
    ConstraintGraph cg;
    cg.kind_ = kind;
    cg.base_ = &g;
    const auto p4s = induced_p4s(g);
    cg.p4_count_ = p4s.size();

    cg.var_of_edge_.assign(g.size(), static_cast<VarId>(-1));
    for (const P4& p : p4s) {
        cg.var_of_edge_[g.edge_id(p.a, p.b)] = 0;
        cg.var_of_edge_[g.edge_id(p.c, p.d)] = 0;
    }
    for (EdgeId e = 0; e < g.size(); ++e) {
        if (cg.var_of_edge_[e] == 0) {
            cg.var_of_edge_[e] = static_cast<VarId>(cg.vars_.size());
            cg.vars_.push_back({g.edge(e).u, g.edge(e).v});
            cg.vars_.push_back({g.edge(e).v, g.edge(e).u});
        }
    }
    cg.adj_.assign(cg.vars_.size(), {});
    auto link = [&](VarId s, VarId t) {
        cg.adj_[s].push_back(t);
        cg.adj_[t].push_back(s);
    };
    for (VarId v = 0; v < cg.vars_.size(); v += 2) {
        link(v, v + 1);
    }
    for (const P4& p : p4s) {
        const VarId ab = *cg.find(p.a, p.b);
        const VarId cd = *cg.find(p.c, p.d);
        if (kind == ConstraintKind::opposition) {
            // (a,b)~(c,d) from abcd, (d,c)~(b,a) from dcba.
            link(ab, cd);
            link(cg.negation(cd), cg.negation(ab));
        } else {
            // (a,b)~(d,c) from abcd read as xyvu, (c,d)~(b,a) as vuxy.
            link(ab, cg.negation(cd));
            link(cd, cg.negation(ab));
        }
    }
    for (auto& nb : cg.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return cg;
}

std::variant<Bipartition, OddWalk> bipartition_or_odd_walk(const ConstraintGraph& cg) {
    const std::size_t n = cg.var_count();
    constexpr auto kNone = static_cast<std::uint32_t>(-1);
    Bipartition b;
    b.side.assign(n, 0);
    b.component.assign(n, kNone);
    std::vector<VarId> parent(n, kNone);
    std::vector<std::uint32_t> depth(n, 0);

    for (VarId s = 0; s < n; ++s) {
        if (b.component[s] != kNone) {
            continue;
        }
        auto comp = static_cast<std::uint32_t>(b.component_count++);
        b.component[s] = comp;
        std::queue<VarId> q;
        q.push(s);
        while (!q.empty()) {
            VarId u = q.front();
            q.pop();
            for (VarId w : cg.neighbors(u)) {
                if (b.component[w] == kNone) {
                    b.component[w] = comp;
                    b.side[w] = b.side[u] ^ 1U;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push(w);
                } else if (b.side[w] == b.side[u]) {
                    // Odd cycle: u .. lca .. w plus the edge w-u.
                    std::vector<VarId> up_u{u};
                    std::vector<VarId> up_w{w};
                    VarId x = u;
                    VarId y = w;
                    while (depth[x] > depth[y]) {
                        x = parent[x];
                        up_u.push_back(x);
                    }
                    while (depth[y] > depth[x]) {
                        y = parent[y];
                        up_w.push_back(y);
                    }
                    while (x != y) {
                        x = parent[x];
                        y = parent[y];
                        up_u.push_back(x);
                        up_w.push_back(y);
                    }
                    // up_u ends at lca, up_w ends at lca.
                    OddWalk walk;
                    for (VarId v : up_u) {
                        walk.walk.push_back(cg.var(v));
                    }
                    for (auto it = std::next(up_w.rbegin()); it != up_w.rend(); ++it) {
                        walk.walk.push_back(cg.var(*it));
                    }
                    walk.walk.push_back(cg.var(u));
                    return walk;
                }
            }
        }
    }
    return b;
}

PartialOrientation forced_orientation(const ConstraintGraph& cg, const Bipartition& b,
                                      const std::vector<std::uint8_t>& flips) {
    if (flips.size() != b.component_count) {
        throw GraphError("forced_orientation: flip vector size mismatch");
    }
    PartialOrientation p(cg.base());
    for (VarId v = 0; v < cg.var_count(); ++v) {
        if ((b.side[v] ^ flips[b.component[v]]) == 0) {
            const ArcVar& av = cg.var(v);
            if (!p.set(av.x, av.y)) {
                throw GraphError("forced_orientation: bipartition is not proper");
            }
        }
    }
    return p;
}

namespace {

// Successor lists of the directed part.
std::vector<std::vector<Vertex>> successors(const PartialOrientation& p) {
    std::vector<std::vector<Vertex>> out(p.base().order());
    for (const Arc& a : p.arcs()) {
        out[a.tail].push_back(a.head);
    }
    for (auto& s : out) {
        std::sort(s.begin(), s.end());
    }
    return out;
}

std::optional<DirectedCycle> find_cycle(const std::vector<std::vector<Vertex>>& succ) {
    const std::size_t n = succ.size();
    enum : std::uint8_t { kWhite, kGrey, kBlack };
    std::vector<std::uint8_t> color(n, kWhite);
    std::vector<std::pair<Vertex, std::size_t>> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != kWhite) {
            continue;
        }
        stack.push_back({s, 0});
        color[s] = kGrey;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < succ[v].size()) {
                Vertex w = succ[v][idx++];
                if (color[w] == kGrey) {
                    DirectedCycle c;
                    auto it = std::find_if(stack.begin(), stack.end(),
                                           [w](const auto& fr) { return fr.first == w; });
                    for (; it != stack.end(); ++it) {
                        c.cycle.push_back(it->first);
                    }
                    return c;
                }
                if (color[w] == kWhite) {
                    color[w] = kGrey;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = kBlack;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> kahn_min_order(const std::vector<std::vector<Vertex>>& succ) {
    const std::size_t n = succ.size();
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& s : succ) {
        for (Vertex w : s) {
            ++indeg[w];
        }
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
            ready.push(v);
        }
    }
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (Vertex w : succ[v]) {
            if (--indeg[w] == 0) {
                ready.push(w);
            }
        }
    }
    if (order.size() != n) {
        return std::nullopt;
    }
    return order;
}

}  // namespace

std::variant<TopologicalOrder, DirectedCycle> is_acyclic(const PartialOrientation& p) {
    auto succ = successors(p);
    if (auto c = find_cycle(succ)) {
        return *c;
    }
    return TopologicalOrder{*kahn_min_order(succ)};
}

Orientation orient_by_order(const Graph& g, const std::vector<Vertex>& order) {
    if (order.size() != g.order()) {
        throw GraphError("orient_by_order: order does not cover the graph");
    }
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = i;
    }
    Orientation o(g);
    for (EdgeId e = 0; e < g.size(); ++e) {
        o.set_forward(e, pos[g.edge(e).u] < pos[g.edge(e).v]);
    }
    return o;
}

Orientation extend_acyclic(const PartialOrientation& p) {
    auto order = kahn_min_order(successors(p));
    if (!order) {
        throw GraphError("extend_acyclic: partial orientation has a directed cycle");
    }
    return orient_by_order(p.base(), *order);
}

std::vector<Vertex> linear_order(const Orientation& o) {
    std::vector<std::vector<Vertex>> succ(o.base().order());
    for (const Arc& a : o.arcs()) {
        succ[a.tail].push_back(a.head);
    }
    auto order = kahn_min_order(succ);
    if (!order) {
        throw GraphError("linear_order: orientation has a directed cycle");
    }
    return *order;
}

std::string constraint_graph_dot(const ConstraintGraph& cg, const Bipartition* sides) {
    const Graph& g = cg.base();
    // Multi-character labels get a separator so that names stay unique.
    std::string sep;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.label(v).size() > 1) {
            sep = ",";
        }
    }
    auto name = [&](VarId v) {
        return "\"" + g.label(cg.var(v).x) + sep + g.label(cg.var(v).y) + "\"";
    };
    std::ostringstream out;
    out << "graph \"" << to_string(cg.kind()) << "\" {\n";
    for (VarId v = 0; v < cg.var_count(); ++v) {
        out << "  " << name(v);
        if (sides != nullptr) {
            out << " [shape=" << (sides->side[v] ? "box" : "ellipse") << ", side="
                << static_cast<int>(sides->side[v]) << ", component=" << sides->component[v]
                << "]";
        }
        out << ";\n";
    }
    for (VarId v = 0; v < cg.var_count(); ++v) {
        for (VarId w : cg.neighbors(v)) {
            if (v < w) {
                out << "  " << name(v) << " -- " << name(w) << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

FlipSearchResult search_acyclic_flips(const ConstraintGraph& cg, const Bipartition& b,
                                      std::uint64_t cap) {
    FlipSearchResult result;
    const std::size_t c = b.component_count;
    const Graph& g = cg.base();
    // side0[k]: vars of component k with side 0 (chosen under flip 0).
    std::vector<std::vector<ArcVar>> chosen0(c);
    std::vector<std::vector<ArcVar>> chosen1(c);
    for (VarId v = 0; v < cg.var_count(); ++v) {
        (b.side[v] == 0 ? chosen0 : chosen1)[b.component[v]].push_back(cg.var(v));
    }

    std::vector<std::vector<Vertex>> succ(g.order());
    std::vector<std::uint8_t> prefix;

    auto add = [&](const std::vector<ArcVar>& arcs) {
        for (const ArcVar& a : arcs) {
            succ[a.x].push_back(a.y);
        }
    };
    auto remove = [&](const std::vector<ArcVar>& arcs) {
        for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
            succ[it->x].pop_back();
        }
    };

    if (c == 0) {
        result.status = FlipSearchResult::Status::found;
        return result;
    }

    std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
        if (k == c) {
            return true;
        }
        const int choices = k == 0 ? 1 : 2;
        for (int f = 0; f < choices; ++f) {
            if (result.tried >= cap) {
                result.status = FlipSearchResult::Status::capped;
                return false;
            }
            ++result.tried;
            const auto& arcs = f == 0 ? chosen0[k] : chosen1[k];
            add(arcs);
            prefix.push_back(static_cast<std::uint8_t>(f));
            if (auto cyc = find_cycle(succ)) {
                result.branches.push_back({prefix, *cyc});
            } else if (dfs(k + 1)) {
                return true;
            }
            prefix.pop_back();
            remove(arcs);
            if (result.status == FlipSearchResult::Status::capped) {
                return false;
            }
        }
        return false;
    };

    if (dfs(0)) {
        result.status = FlipSearchResult::Status::found;
        result.flips = prefix;
        result.branches.clear();
    } else if (result.status != FlipSearchResult::Status::capped) {
        result.status = FlipSearchResult::Status::exhausted;
    } else {
        result.branches.clear();
    }
    return result;
}

}  // namespace oppo
