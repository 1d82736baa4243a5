#include "oppo/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "oppo/constraints.hpp"

namespace oppo::gen {

namespace {

// Mutable adjacency used while growing graphs.
struct Grow {
    std::vector<std::set<Vertex>> adj;

    Vertex add() {
        adj.emplace_back();
        return static_cast<Vertex>(adj.size() - 1);
    }
    void link(Vertex u, Vertex v) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    Graph graph() const {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < adj.size(); ++u) {
            for (Vertex v : adj[u]) {
                if (u < v) {
                    edges.emplace_back(u, v);
                }
            }
        }
        return Graph(adj.size(), edges);
    }
    bool neighborhood_is_clique(Vertex v) const {
        for (Vertex a : adj[v]) {
            for (Vertex b : adj[v]) {
                if (a < b && !adj[a].contains(b)) {
                    return false;
                }
            }
        }
        return true;
    }
};

enum class Op { pendant, true_twin, false_twin };

void apply(Grow& g, Op op, Vertex v) {
    const auto nv = g.adj[v];
    Vertex w = g.add();
    switch (op) {
        case Op::pendant:
            g.link(v, w);
            break;
        case Op::true_twin:
            g.link(v, w);
            [[fallthrough]];
        case Op::false_twin:
            for (Vertex x : nv) {
                g.link(w, x);
            }
            break;
    }
}

Graph grow_random(std::size_t n, Rng& rng, bool chordal) {
    Grow g;
    if (n == 0) {
        return g.graph();
    }
    g.add();
    while (g.adj.size() < n) {
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.adj.size() - 1));
        Vertex v = pick(rng);
        auto op = static_cast<Op>(std::uniform_int_distribution<int>(0, 2)(rng));
        if (op == Op::false_twin &&
            (g.adj[v].empty() || (chordal && !g.neighborhood_is_clique(v)))) {
            continue;
        }
        apply(g, op, v);
    }
    return g.graph();
}

std::string encode(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : adj[v]) {
        if (w != parent) {
            kids.push_back(encode(adj, w, v));
        }
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) {
        s += k;
    }
    return s + ")";
}

}  // namespace

std::string tree_code(const Graph& tree) {
    const std::size_t n = tree.order();
    if (n == 0) {
        return "";
    }
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) {
        adj[v].assign(tree.neighbors(v).begin(), tree.neighbors(v).end());
        deg[v] = adj[v].size();
    }
    // Peel leaves to find the center (one or two vertices).
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        if (deg[v] <= 1) {
            layer.push_back(v);
        }
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            for (Vertex w : adj[v]) {
                if (--deg[w] == 1) {
                    next.push_back(w);
                }
            }
        }
        layer = std::move(next);
    }
    std::string best;
    for (Vertex c : layer) {
        std::string s = encode(adj, c, c);
        if (best.empty() || s < best) {
            best = s;
        }
    }
    return best;
}

std::vector<Graph> all_trees(std::size_t n) {
    std::vector<Graph> level{Graph(1, {})};
    for (std::size_t k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& t : level) {
            for (Vertex v = 0; v < t.order(); ++v) {
                std::vector<std::pair<Vertex, Vertex>> edges;
                for (const Edge& e : t.edges()) {
                    edges.emplace_back(e.u, e.v);
                }
                edges.emplace_back(v, static_cast<Vertex>(t.order()));
                Graph grown(t.order() + 1, edges);
                if (seen.insert(tree_code(grown)).second) {
                    next.push_back(std::move(grown));
                }
            }
        }
        level = std::move(next);
    }
    return n == 0 ? std::vector<Graph>{} : level;
}

Graph random_distance_hereditary(std::size_t n, Rng& rng) {
    return grow_random(n, rng, false);
}

Graph random_ptolemaic(std::size_t n, Rng& rng) {
    return grow_random(n, rng, true);
}

Graph random_ptolemaic_opposition(std::size_t n, Rng& rng, double twin_bias) {
    Grow g;
    if (n == 0) {
        return g.graph();
    }
    g.add();
    std::bernoulli_distribution twin(twin_bias);
    std::bernoulli_distribution truth(0.5);
    while (g.adj.size() < n) {
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.adj.size() - 1));
        Vertex v = pick(rng);
        Op op = !twin(rng) ? Op::pendant : truth(rng) ? Op::true_twin : Op::false_twin;
        if (op == Op::false_twin && (g.adj[v].empty() || !g.neighborhood_is_clique(v))) {
            continue;
        }
        Grow trial = g;
        apply(trial, op, v);
        Graph candidate = trial.graph();
        auto cg = build_constraint_graph(candidate, ConstraintKind::opposition);
        if (std::holds_alternative<Bipartition>(bipartition_or_odd_walk(cg))) {
            g = std::move(trial);
        }
    }
    return g.graph();
}

Graph random_gnm(std::size_t n, std::size_t m, Rng& rng) {
    const std::size_t max_edges = n * (n - 1) / 2;
    if (n == 0 || m > max_edges) {
        throw GraphError("random_gnm: too many edges requested");
    }
    std::set<std::pair<Vertex, Vertex>> edges;
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    while (edges.size() < m) {
        Vertex u = pick(rng);
        Vertex v = pick(rng);
        if (u != v) {
            edges.emplace(std::min(u, v), std::max(u, v));
        }
    }
    std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
    return Graph(n, list);
}

}  // namespace oppo::gen
