#include "oppo/p4.hpp"

#include <algorithm>
#include <queue>

namespace oppo {

bool is_induced_p4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d) {
        return false;
    }
    return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
           !g.adjacent(a, d) && !g.adjacent(b, d);
}

std::vector<P4> induced_p4s(const Graph& g) {
    std::vector<P4> out;
    // Each mid-edge bc is visited in both directions; a in N(b)\N[c],
    // d in N(c)\N[b], a !~ d. Keep the orientation with a < d.
    for (const Edge& mid : g.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
            Vertex b = dir == 0 ? mid.u : mid.v;
            Vertex c = dir == 0 ? mid.v : mid.u;
            for (Vertex a : g.neighbors(b)) {
                if (a == c || g.adjacent(a, c)) {
                    continue;
                }
                for (Vertex d : g.neighbors(c)) {
                    if (d == b || d <= a || g.adjacent(d, b) || g.adjacent(a, d)) {
                        continue;
                    }
                    out.push_back({a, b, c, d});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> end_edges(const Graph& g) {
    std::vector<bool> mark(g.size(), false);
    for (const P4& p : induced_p4s(g)) {
        mark[g.edge_id(p.a, p.b)] = true;
        mark[g.edge_id(p.c, p.d)] = true;
    }
    std::vector<Edge> out;
    for (EdgeId e = 0; e < g.size(); ++e) {
        if (mark[e]) {
            out.push_back(g.edge(e));
        }
    }
    return out;
}

int p4_type(const P4& p, const Orientation& o) {
    if (!is_induced_p4(o.base(), p)) {
        throw GraphError("p4_type: not an induced P4 of the oriented graph");
    }
    const bool ab = o.points(p.a, p.b);
    const bool dc = o.points(p.d, p.c);
    if (ab && dc) {
        return 0;
    }
    if (!ab && !dc) {
        return 1;
    }
    // Aligned end-edges: forward (a->b, c->d) or backward (b->a, d->c).
    const bool forward = ab;
    const bool mid_forward = o.points(p.b, p.c);
    return mid_forward == forward ? 2 : 3;
}

std::uint32_t LayerDecomposition::depth() const {
    std::uint32_t d = 0;
    for (auto l : layer) {
        d = std::max(d, l);
    }
    return d;
}

LayerDecomposition layer_decompose(const Graph& g, Vertex w) {
    if (w >= g.order()) {
        throw GraphError("layer_decompose: root out of range");
    }
    constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
    LayerDecomposition out{w, std::vector<std::uint32_t>(g.order(), kUnseen)};
    std::queue<Vertex> q;
    out.layer[w] = 0;
    q.push(w);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex x : g.neighbors(v)) {
            if (out.layer[x] == kUnseen) {
                out.layer[x] = out.layer[v] + 1;
                q.push(x);
            }
        }
    }
    if (std::find(out.layer.begin(), out.layer.end(), kUnseen) != out.layer.end()) {
        throw GraphError("layer_decompose: graph is disconnected from the root");
    }
    return out;
}

char to_char(LayerType t) {
    return static_cast<char>('A' + static_cast<int>(t));
}

namespace {

std::optional<LayerClass> match_oriented(const P4& p, const LayerDecomposition& L) {
    const std::int64_t la = L.layer[p.a];
    const std::int64_t lb = L.layer[p.b];
    const std::int64_t lc = L.layer[p.c];
    const std::int64_t ld = L.layer[p.d];
    auto make = [&](LayerType t, std::int64_t i) {
        return LayerClass{t, p, static_cast<std::uint32_t>(i)};
    };
    if (lb == la + 1 && lc == la + 2 && ld == la + 3) {
        return make(LayerType::A, la);
    }
    if (lb == lc && la == lb + 1 && ld == lb + 1) {
        return make(LayerType::B, lb);
    }
    if (la == lb + 1 && lc == lb + 1 && ld == lb + 2) {
        return make(LayerType::C, lb);
    }
    if (la == lb && lc == la + 1 && ld == la + 2) {
        return make(LayerType::D, la);
    }
    if (la == lb && lb == lc && ld == la + 1) {
        return make(LayerType::E, la);
    }
    return std::nullopt;
}

}  // namespace

std::optional<LayerClass> classify_layer_type(const P4& p, const LayerDecomposition& layers) {
    if (auto m = match_oriented(p, layers)) {
        return m;
    }
    return match_oriented(p.reversed(), layers);
}

}  // namespace oppo
