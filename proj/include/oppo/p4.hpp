#pragma once

#include <optional>
#include <vector>

#include "oppo/graph.hpp"

namespace oppo {

/// Induced path a-b-c-d. Stored once per vertex set with a < d.
struct P4 {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;
    Vertex d = 0;

    P4 reversed() const { return {d, c, b, a}; }
    friend bool operator==(const P4&, const P4&) = default;
    friend auto operator<=>(const P4&, const P4&) = default;
};

bool is_induced_p4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d);
inline bool is_induced_p4(const Graph& g, const P4& p) {
    return is_induced_p4(g, p.a, p.b, p.c, p.d);
}

/// All induced P4s, canonical (a < d), sorted.
std::vector<P4> induced_p4s(const Graph& g);

/// Edges that are the first or last edge of some induced P4, sorted.
std::vector<Edge> end_edges(const Graph& g);

/// Orientation type of an induced P4 (0..3).
///
///   0: a->b, d->c           (end-edges point at the middle)
///   1: b->a, c->d           (end-edges point away)
///   2: directed path        (a->b->c->d or its reverse)
///   3: aligned end-edges with the mid-edge against them (a->b<-c->d or reverse)
///
/// Throws GraphError when p is not an induced P4 of o.base().
int p4_type(const P4& p, const Orientation& o);

/// BFS layering N_0(w), N_1(w), ... of a connected graph.
struct LayerDecomposition {
    Vertex root = 0;
    std::vector<std::uint32_t> layer;
    std::uint32_t depth() const;
};

/// Throws GraphError when some vertex is unreachable from w.
LayerDecomposition layer_decompose(const Graph& g, Vertex w);

enum class LayerType { A, B, C, D, E };

char to_char(LayerType t);

struct LayerClass {
    LayerType type = LayerType::A;
    /// Path relabeled so that its vertices sit in the layers prescribed by
    /// `type` with base index `index`.
    P4 path;
    std::uint32_t index = 0;
};

/// Matches the path (in either direction) against the five layer shapes.
/// nullopt means none fits, which cannot happen in a ptolemaic graph.
std::optional<LayerClass> classify_layer_type(const P4& p, const LayerDecomposition& layers);

}  // namespace oppo
