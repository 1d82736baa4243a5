#include "oppo/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oppo::oracle {

namespace {

struct Path4 {
    Vertex a, b, c, d;
};

// Ordered 4-tuple scan, each path kept once (a < d). Independent of the
// library's P4 enumerator on purpose.
std::vector<Path4> brute_p4s(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    std::vector<Path4> out;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            for (Vertex c = 0; c < n; ++c) {
                for (Vertex d = a + 1; d < n; ++d) {
                    if (a == b || a == c || b == c || b == d || c == d) {
                        continue;
                    }
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) &&
                        !g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, d)) {
                        out.push_back({a, b, c, d});
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Edge> brute_end_edges(const Graph& g, const std::vector<Path4>& paths) {
    std::set<Edge> s;
    for (const auto& p : paths) {
        s.insert({std::min(p.a, p.b), std::max(p.a, p.b)});
        s.insert({std::min(p.c, p.d), std::max(p.c, p.d)});
    }
    (void)g;
    return {s.begin(), s.end()};
}

OracleResult order_scan(const Graph& g, bool enumerate_all, bool opposition) {
    if (g.order() > kMaxOrderVertices) {
        throw CapExceeded("oracle: order scan limited to " + std::to_string(kMaxOrderVertices) +
                          " vertices, got " + std::to_string(g.order()));
    }
    const auto paths = brute_p4s(g);
    const auto ends = brute_end_edges(g, paths);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> pos(g.order());
    OracleResult result;
    std::set<std::vector<Arc>> solutions;
    do {
        for (std::size_t i = 0; i < perm.size(); ++i) {
            pos[perm[i]] = i;
        }
        bool ok = true;
        for (const auto& p : paths) {
            const bool ab = pos[p.a] < pos[p.b];
            const bool other = opposition ? pos[p.d] < pos[p.c] : pos[p.c] < pos[p.d];
            if (ab != other) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        if (!result.member) {
            result.member = true;
            result.witness_order = perm;
        }
        if (!enumerate_all) {
            break;
        }
        std::vector<Arc> sol;
        sol.reserve(ends.size());
        for (const Edge& e : ends) {
            sol.push_back(pos[e.u] < pos[e.v] ? Arc{e.u, e.v} : Arc{e.v, e.u});
        }
        solutions.insert(std::move(sol));
    } while (std::next_permutation(perm.begin(), perm.end()));
    result.all_solutions.assign(solutions.begin(), solutions.end());
    return result;
}

}  // namespace

OracleResult opposition(const Graph& g, bool enumerate_all) {
    return order_scan(g, enumerate_all, true);
}

OracleResult coalition(const Graph& g, bool enumerate_all) {
    return order_scan(g, enumerate_all, false);
}

OracleResult generalized_opposition(const Graph& g) {
    const auto paths = brute_p4s(g);
    const auto ends = brute_end_edges(g, paths);
    if (ends.size() > kMaxEndEdges) {
        throw CapExceeded("oracle: generalized scan limited to " + std::to_string(kMaxEndEdges) +
                          " end-edges, got " + std::to_string(ends.size()));
    }
    // Bit i set means ends[i] is directed u -> v (smaller id first).
    auto index_of = [&](Vertex x, Vertex y) {
        Edge e{std::min(x, y), std::max(x, y)};
        return static_cast<std::size_t>(std::lower_bound(ends.begin(), ends.end(), e) - ends.begin());
    };
    struct Constraint {
        std::size_t ab, cd;
        bool ab_low_first, dc_low_first;  // does x->y with x<y mean a->b / d->c?
    };
    std::vector<Constraint> cons;
    for (const auto& p : paths) {
        cons.push_back({index_of(p.a, p.b), index_of(p.c, p.d), p.a < p.b, p.d < p.c});
    }
    OracleResult result;
    const std::uint64_t total = std::uint64_t{1} << ends.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (const auto& c : cons) {
            const bool low_ab = (mask >> c.ab) & 1U;
            const bool low_cd = (mask >> c.cd) & 1U;
            const bool a_to_b = low_ab == c.ab_low_first;
            const bool d_to_c = low_cd == c.dc_low_first;
            if (a_to_b != d_to_c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.member = true;
            std::vector<Arc> sol;
            for (std::size_t i = 0; i < ends.size(); ++i) {
                const bool low = (mask >> i) & 1U;
                sol.push_back(low ? Arc{ends[i].u, ends[i].v} : Arc{ends[i].v, ends[i].u});
            }
            result.witness_assignment = std::move(sol);
            break;
        }
    }
    return result;
}

}  // namespace oppo::oracle
