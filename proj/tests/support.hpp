#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "oppo/detectors.hpp"
#include "oppo/graph.hpp"

#ifndef OPPO_TEST_DATA
#define OPPO_TEST_DATA "tests/data"
#endif

namespace testing {

inline std::string data_path(const std::string& name) {
    return std::string(OPPO_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

/// Connected graphs on 1..7 vertices, one per isomorphism class.
inline std::vector<oppo::Graph> connected_upto7(std::size_t max_n = 7) {
    std::ifstream in(data_path("connected_upto7.g6"));
    std::vector<oppo::Graph> out;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) {
            auto g = oppo::parse_graph6(line);
            if (g.order() <= max_n) {
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

inline oppo::Graph load(const std::string& name) {
    return oppo::parse_edge_list(slurp(data_path(name)));
}

inline oppo::Graph pattern_graph(const std::string& name) {
    return oppo::pattern_by_name(name).value().graph;
}

/// Permutation search; fine for the handful of vertices used in tests.
inline bool isomorphic(const oppo::Graph& a, const oppo::Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) {
        return false;
    }
    std::vector<oppo::Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& e : a.edges()) {
            if (!b.adjacent(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Graph plus one new vertex joined to `nbrs`.
inline oppo::Graph add_vertex(const oppo::Graph& g, const std::vector<oppo::Vertex>& nbrs) {
    std::vector<std::pair<oppo::Vertex, oppo::Vertex>> edges;
    for (const auto& e : g.edges()) {
        edges.emplace_back(e.u, e.v);
    }
    const auto w = static_cast<oppo::Vertex>(g.order());
    for (auto v : nbrs) {
        edges.emplace_back(v, w);
    }
    return oppo::Graph(g.order() + 1, edges);
}

}  // namespace testing
