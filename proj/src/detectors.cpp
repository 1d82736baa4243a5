#include "oppo/detectors.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace oppo {

Vertex Pattern::role(const std::string& r) const {
    auto it = std::find(roles.begin(), roles.end(), r);
    if (it == roles.end()) {
        throw GraphError("pattern " + name + " has no role " + r);
    }
    return static_cast<Vertex>(it - roles.begin());
}

namespace patterns {

namespace {

// Builds a pattern from 1-based edges with roles "1".."n".
Pattern numbered(std::string name, std::size_t n,
                 std::initializer_list<std::pair<Vertex, Vertex>> one_based) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [a, b] : one_based) {
        edges.emplace_back(a - 1, b - 1);
    }
    std::vector<std::string> roles;
    for (std::size_t i = 1; i <= n; ++i) {
        roles.push_back(std::to_string(i));
    }
    return {std::move(name), Graph(n, edges, roles), roles};
}

}  // namespace

Pattern p4() { return numbered("P4", 4, {{1, 2}, {2, 3}, {3, 4}}); }
Pattern p5() { return numbered("P5", 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}); }
Pattern c4() { return numbered("C4", 4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }
Pattern c5() { return numbered("C5", 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}); }

Pattern gem() {
    return numbered("gem", 5, {{1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
}

Pattern house() {
    return numbered("house", 5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {2, 5}});
}

Pattern domino() {
    return numbered("domino", 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}});
}

Pattern a() {
    return numbered("A", 6, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}, {6, 3}});
}

Pattern g1() {
    return numbered("G1", 9,
                    {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {4, 7}, {7, 8}, {8, 9}});
}

Pattern g2() {
    return numbered("G2", 9,
                    {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {4, 7}, {3, 8}, {4, 8}, {8, 9}});
}

Pattern n() {
    return numbered("N", 6, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 3}, {5, 6}});
}

Pattern co_c6() {
    return numbered("coC6", 6,
                    {{1, 3}, {3, 5}, {5, 1}, {2, 4}, {4, 6}, {6, 2}, {1, 4}, {3, 6}, {5, 2}});
}

}  // namespace patterns

namespace {

struct SearchPlan {
    std::vector<Vertex> order;   // pattern vertices in placement order
    std::vector<int> anchor;     // index into order of a placed neighbor, or -1
};

SearchPlan plan_for(const Graph& p) {
    SearchPlan plan;
    const std::size_t k = p.order();
    std::vector<bool> placed(k, false);
    std::vector<int> pos(k, -1);
    while (plan.order.size() < k) {
        // Start a new BFS tree at the unplaced vertex of maximum degree.
        Vertex start = 0;
        std::size_t best = 0;
        bool have = false;
        for (Vertex v = 0; v < k; ++v) {
            if (!placed[v] && (!have || p.degree(v) > best)) {
                start = v;
                best = p.degree(v);
                have = true;
            }
        }
        std::queue<Vertex> q;
        q.push(start);
        placed[start] = true;
        pos[start] = static_cast<int>(plan.order.size());
        plan.order.push_back(start);
        plan.anchor.push_back(-1);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : p.neighbors(v)) {
                if (!placed[w]) {
                    placed[w] = true;
                    pos[w] = static_cast<int>(plan.order.size());
                    plan.order.push_back(w);
                    plan.anchor.push_back(pos[v]);
                    q.push(w);
                }
            }
        }
    }
    return plan;
}

class InducedSearch {
public:
    InducedSearch(const Graph& host, const Graph& pattern)
        : g_(host), p_(pattern), plan_(plan_for(pattern)), image_(pattern.order()),
          used_(host.order(), false) {}

    bool run() { return place(0); }

    std::vector<Vertex> embedding() const {
        std::vector<Vertex> out(p_.order());
        for (std::size_t i = 0; i < plan_.order.size(); ++i) {
            out[plan_.order[i]] = image_[i];
        }
        return out;
    }

private:
    bool fits(std::size_t i, Vertex h) const {
        if (used_[h] || g_.degree(h) < p_.degree(plan_.order[i])) {
            return false;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (g_.adjacent(image_[j], h) != p_.adjacent(plan_.order[j], plan_.order[i])) {
                return false;
            }
        }
        return true;
    }

    bool try_vertex(std::size_t i, Vertex h) {
        if (!fits(i, h)) {
            return false;
        }
        image_[i] = h;
        used_[h] = true;
        if (place(i + 1)) {
            return true;
        }
        used_[h] = false;
        return false;
    }

    bool place(std::size_t i) {
        if (i == plan_.order.size()) {
            return true;
        }
        if (plan_.anchor[i] >= 0) {
            for (Vertex h : g_.neighbors(image_[plan_.anchor[i]])) {
                if (try_vertex(i, h)) {
                    return true;
                }
            }
            return false;
        }
        for (Vertex h = 0; h < g_.order(); ++h) {
            if (try_vertex(i, h)) {
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    const Graph& p_;
    SearchPlan plan_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<PatternMatch> find_induced(const Graph& g, const Pattern& p) {
    if (p.order() > g.order()) {
        return std::nullopt;
    }
    InducedSearch search(g, p.graph);
    if (!search.run()) {
        return std::nullopt;
    }
    return PatternMatch{p.name, search.embedding()};
}

Pattern make_tk(int k) {
    if (k < 1) {
        throw GraphError("make_tk: k must be >= 1");
    }
    const auto spine = static_cast<Vertex>(2 * k + 4);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i + 1 < spine; ++i) {
        edges.emplace_back(i, i + 1);
    }
    const Vertex first = 2;             // spine position 3, label "1"
    const Vertex last = spine - 3;      // spine position 2k+2, label "2k"
    edges.emplace_back(first, spine);
    edges.emplace_back(last, spine + 1);
    std::vector<std::string> roles(spine + 2);
    roles[0] = "s1";
    roles[1] = "s2";
    for (Vertex i = 2; i + 2 < spine; ++i) {
        roles[i] = std::to_string(i - 1);
    }
    roles[spine - 2] = "e1";
    roles[spine - 1] = "e2";
    roles[spine] = "p1";
    roles[spine + 1] = "p2k";
    return {"T" + std::to_string(k), Graph(spine + 2, edges, roles), roles};
}

Pattern make_hk(int k, HkVariant variant) {
    if (k < 1) {
        throw GraphError("make_hk: k must be >= 1");
    }
    // v_i = 3i, v_i' = 3i+1, v_i'' = 3i+2
    auto v = [](int i) { return static_cast<Vertex>(3 * i); };
    auto v1 = [](int i) { return static_cast<Vertex>(3 * i + 1); };
    auto v2 = [](int i) { return static_cast<Vertex>(3 * i + 2); };
    const std::size_t n = 3 * static_cast<std::size_t>(k) + 3;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    auto join = [&](Vertex a, Vertex b) { adj[a][b] = adj[b][a] = true; };
    join(v2(0), v1(0));
    join(v1(0), v(1));
    join(v(1), v1(1));
    join(v1(1), v2(1));
    join(v(0), v(1));
    for (int i = 1; i < k; ++i) {
        const Vertex next = v(i + 1);
        std::vector<Vertex> closed{v(i)};
        for (Vertex u = 0; u < n; ++u) {
            if (adj[v(i)][u]) {
                closed.push_back(u);
            }
        }
        for (Vertex u : closed) {
            if (variant == HkVariant::minus && u == v(0)) {
                continue;
            }
            join(next, u);
        }
        join(next, v1(i + 1));
        join(v1(i + 1), v2(i + 1));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (adj[a][b]) {
                edges.emplace_back(a, b);
            }
        }
    }
    std::vector<std::string> roles(n);
    for (int i = 0; i <= k; ++i) {
        roles[v(i)] = "v" + std::to_string(i);
        roles[v1(i)] = "v" + std::to_string(i) + "'";
        roles[v2(i)] = "v" + std::to_string(i) + "''";
    }
    const bool minus = variant == HkVariant::minus && k >= 2;
    std::string name = "H" + std::to_string(k) + (minus ? "-" : "");
    return {name, Graph(n, edges, roles), roles};
}

std::optional<TkViolation> find_tk_violation(const Graph& g) {
    if (g.order() < 8) {
        return std::nullopt;
    }
    const int max_k = static_cast<int>((g.order() - 6) / 2);
    for (int k = 1; k <= max_k; ++k) {
        if (auto m = find_induced(g, make_tk(k))) {
            return TkViolation{k, *m};
        }
    }
    return std::nullopt;
}

std::optional<HkMatch> find_max_hk(const Graph& g) {
    std::optional<HkMatch> best;
    // H_{k+1} contains H_k and H_{k+1}^- contains H_k^-, so stop at the
    // first k where neither occurs.
    for (int k = 1; 3 * static_cast<std::size_t>(k) + 3 <= g.order(); ++k) {
        bool found = false;
        for (HkVariant variant : {HkVariant::full, HkVariant::minus}) {
            if (k == 1 && variant == HkVariant::minus) {
                continue;
            }
            Pattern p = make_hk(k, variant);
            if (auto m = find_induced(g, p)) {
                Vertex apex = m->embedding[p.role("v" + std::to_string(k))];
                best = HkMatch{k, variant, *m, apex};
                found = true;
                break;
            }
        }
        if (!found) {
            break;
        }
    }
    return best;
}

namespace {

// Shortest path from s to t avoiding `blocked` (s and t must be unblocked).
std::optional<std::vector<Vertex>> bfs_path(const Graph& g, Vertex s, Vertex t,
                                            const std::vector<bool>& blocked) {
    constexpr auto kNone = static_cast<Vertex>(-1);
    std::vector<Vertex> parent(g.order(), kNone);
    std::queue<Vertex> q;
    parent[s] = s;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (v == t) {
            std::vector<Vertex> path{t};
            while (path.back() != s) {
                path.push_back(parent[path.back()]);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (Vertex w : g.neighbors(v)) {
            if (!blocked[w] && parent[w] == kNone) {
                parent[w] = v;
                q.push(w);
            }
        }
    }
    return std::nullopt;
}

PatternMatch cycle_match(std::vector<Vertex> cycle) {
    return {"C" + std::to_string(cycle.size()), std::move(cycle)};
}

}  // namespace

std::optional<std::vector<Vertex>> has_hole(const Graph& g) {
    std::vector<bool> blocked(g.order(), false);
    for (const P4& p : induced_p4s(g)) {
        std::vector<Vertex> touched;
        auto block = [&](Vertex v) {
            if (!blocked[v]) {
                blocked[v] = true;
                touched.push_back(v);
            }
        };
        block(p.b);
        block(p.c);
        for (Vertex x : g.neighbors(p.b)) {
            block(x);
        }
        for (Vertex x : g.neighbors(p.c)) {
            block(x);
        }
        blocked[p.a] = false;
        blocked[p.d] = false;
        auto path = bfs_path(g, p.d, p.a, blocked);
        for (Vertex v : touched) {
            blocked[v] = false;
        }
        if (path) {
            std::vector<Vertex> cycle{p.a, p.b, p.c, p.d};
            for (std::size_t i = 1; i + 1 < path->size(); ++i) {
                cycle.push_back((*path)[i]);
            }
            return cycle;
        }
    }
    return std::nullopt;
}

ChordalResult is_chordal(const Graph& g) {
    const std::size_t n = g.order();
    ChordalResult out;
    // Maximum cardinality search; the reverse visit order is a perfect
    // elimination order iff g is chordal.
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<Vertex> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        bool have = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!visited[v] && (!have || weight[v] > weight[best])) {
                best = v;
                have = true;
            }
        }
        visited[best] = true;
        visit.push_back(best);
        for (Vertex w : g.neighbors(best)) {
            if (!visited[w]) {
                ++weight[w];
            }
        }
    }
    std::vector<Vertex> peo(visit.rbegin(), visit.rend());
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos[peo[i]] = i;
    }
    bool ok = true;
    for (Vertex v : peo) {
        // later neighbors of v must form a clique; checking against the
        // earliest later neighbor suffices.
        Vertex first = 0;
        bool have = false;
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] > pos[v] && (!have || pos[w] < pos[first])) {
                first = w;
                have = true;
            }
        }
        if (!have) {
            continue;
        }
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] > pos[v] && w != first && !g.adjacent(first, w)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            break;
        }
    }
    if (ok) {
        out.chordal = true;
        out.elimination_order = std::move(peo);
        return out;
    }
    // Extract an induced cycle >= 4 through some v and two non-adjacent
    // neighbors x, y: shortest x-y path avoiding N[v] \ {x, y}.
    std::vector<bool> blocked(n, false);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex x = nb[i];
                Vertex y = nb[j];
                if (g.adjacent(x, y)) {
                    continue;
                }
                std::fill(blocked.begin(), blocked.end(), false);
                blocked[v] = true;
                for (Vertex w : nb) {
                    blocked[w] = true;
                }
                blocked[x] = blocked[y] = false;
                if (auto path = bfs_path(g, x, y, blocked)) {
                    out.cycle.push_back(v);
                    out.cycle.insert(out.cycle.end(), path->begin(), path->end());
                    return out;
                }
            }
        }
    }
    throw std::logic_error("is_chordal: elimination failed but no induced cycle found");
}

ClassWitness is_ptolemaic(const Graph& g) {
    auto chordal = is_chordal(g);
    if (!chordal.chordal) {
        return {false, cycle_match(chordal.cycle)};
    }
    if (auto m = find_induced(g, patterns::gem())) {
        return {false, *m};
    }
    return {true, std::nullopt};
}

ClassWitness is_gem_house_free(const Graph& g) {
    for (const Pattern& p : {patterns::gem(), patterns::house()}) {
        if (auto m = find_induced(g, p)) {
            return {false, *m};
        }
    }
    return {true, std::nullopt};
}

ClassWitness is_gem_house_hole_free(const Graph& g) {
    auto gh = is_gem_house_free(g);
    if (!gh.member) {
        return gh;
    }
    if (auto hole = has_hole(g)) {
        return {false, cycle_match(*hole)};
    }
    return {true, std::nullopt};
}

std::string to_string(PruneKind kind) {
    switch (kind) {
        case PruneKind::pendant:
            return "pendant";
        case PruneKind::true_twin:
            return "true-twin";
        case PruneKind::false_twin:
            return "false-twin";
    }
    return "?";
}

namespace {

// Mutable adjacency used by the pruning loop.
struct LiveGraph {
    std::vector<std::vector<Vertex>> adj;  // sorted
    std::vector<bool> alive;

    explicit LiveGraph(const Graph& g) : adj(g.order()), alive(g.order(), true) {
        for (Vertex v = 0; v < g.order(); ++v) {
            adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
        }
    }

    void remove(Vertex v) {
        alive[v] = false;
        for (Vertex w : adj[v]) {
            auto& nb = adj[w];
            nb.erase(std::lower_bound(nb.begin(), nb.end(), v));
        }
        adj[v].clear();
    }

    std::optional<PruneStep> next_step() const {
        const auto n = static_cast<Vertex>(adj.size());
        for (Vertex v = 0; v < n; ++v) {
            if (alive[v] && adj[v].size() == 1) {
                return PruneStep{PruneKind::pendant, v, adj[v][0]};
            }
        }
        std::map<std::vector<Vertex>, Vertex> open;
        std::map<std::vector<Vertex>, Vertex> closed;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v] || adj[v].empty()) {
                continue;
            }
            auto [it, fresh] = open.try_emplace(adj[v], v);
            if (!fresh) {
                return PruneStep{PruneKind::false_twin, v, it->second};
            }
            std::vector<Vertex> cl = adj[v];
            cl.insert(std::lower_bound(cl.begin(), cl.end(), v), v);
            auto [jt, fresh2] = closed.try_emplace(std::move(cl), v);
            if (!fresh2) {
                return PruneStep{PruneKind::true_twin, v, jt->second};
            }
        }
        return std::nullopt;
    }
};

}  // namespace

DistanceHereditaryResult is_distance_hereditary(const Graph& g) {
    DistanceHereditaryResult out;
    LiveGraph live(g);
    while (auto step = live.next_step()) {
        out.pruning.push_back(*step);
        live.remove(step->removed);
    }
    out.member = true;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (live.alive[v] && !live.adj[v].empty()) {
            out.member = false;
            break;
        }
    }
    if (out.member) {
        return out;
    }
    for (const Pattern& p : {patterns::gem(), patterns::house(), patterns::domino()}) {
        if (auto m = find_induced(g, p)) {
            out.witness = *m;
            return out;
        }
    }
    if (auto hole = has_hole(g)) {
        out.witness = cycle_match(*hole);
        return out;
    }
    throw std::logic_error("is_distance_hereditary: pruning stuck but no obstruction found");
}

std::vector<TwinOrPendant> twins_and_pendants(const Graph& g) {
    std::vector<TwinOrPendant> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) {
            out.push_back({PruneKind::pendant, v, g.neighbors(v)[0]});
        }
    }
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            std::vector<Vertex> nu;
            std::vector<Vertex> nv;
            for (Vertex x : g.neighbors(u)) {
                if (x != v) {
                    nu.push_back(x);
                }
            }
            for (Vertex x : g.neighbors(v)) {
                if (x != u) {
                    nv.push_back(x);
                }
            }
            if (nu == nv) {
                out.push_back({g.adjacent(u, v) ? PruneKind::true_twin : PruneKind::false_twin, u, v});
            }
        }
    }
    return out;
}

}  // namespace oppo

namespace oppo {

namespace {

std::optional<int> numeric_suffix(const std::string& s, std::size_t from) {
    if (from >= s.size()) {
        return std::nullopt;
    }
    int value = 0;
    for (std::size_t i = from; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9' || value > 100000) {
            return std::nullopt;
        }
        value = value * 10 + (s[i] - '0');
    }
    return value;
}

}  // namespace

std::optional<Pattern> pattern_by_name(const std::string& name) {
    static const std::vector<Pattern (*)()> fixed = {
        patterns::p4,    patterns::p5, patterns::c4, patterns::c5, patterns::gem,
        patterns::house, patterns::domino, patterns::a, patterns::g1, patterns::g2,
        patterns::n,     patterns::co_c6};
    for (auto make : fixed) {
        Pattern p = make();
        if (p.name == name) {
            return p;
        }
    }
    if (name.starts_with("T")) {
        if (auto k = numeric_suffix(name, 1); k && *k >= 1) {
            return make_tk(*k);
        }
    }
    if (name.starts_with("H")) {
        const bool minus = name.ends_with("-");
        std::string digits = name.substr(1, name.size() - 1 - (minus ? 1 : 0));
        if (auto k = numeric_suffix(digits, 0); k && *k >= 1) {
            return make_hk(*k, minus ? HkVariant::minus : HkVariant::full);
        }
    }
    if (name.starts_with("C")) {
        if (auto k = numeric_suffix(name, 1); k && *k >= 3) {
            std::vector<std::string> roles;
            for (int i = 1; i <= *k; ++i) {
                roles.push_back(std::to_string(i));
            }
            Graph c = cycle_graph(static_cast<std::size_t>(*k));
            return Pattern{name, Graph(c.order(), [&] {
                               std::vector<std::pair<Vertex, Vertex>> e;
                               for (const Edge& ed : c.edges()) {
                                   e.emplace_back(ed.u, ed.v);
                               }
                               return e;
                           }(), roles),
                           roles};
        }
    }
    return std::nullopt;
}

}  // namespace oppo
