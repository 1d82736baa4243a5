#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oppo {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed edge tail -> head.
struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure carrying the 1-based line (edge lists) or 0-based byte
/// offset (graph6) at which the input went wrong.
class ParseError : public GraphError {
public:
    ParseError(std::string message, std::size_t position)
        : GraphError(std::move(message)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted. Edges are numbered 0..m-1 in lexicographic
/// order of (min, max) endpoint; every per-edge array in the library is
/// indexed by this id.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Duplicate edges collapse; self-loops and
    /// out-of-range endpoints throw GraphError.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
          std::vector<std::string> labels = {});
    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
          std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    bool adjacent(Vertex u, Vertex v) const;

    /// Edge id of {u,v}, or kNoEdge.
    EdgeId edge_id(Vertex u, Vertex v) const;
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    /// Original name of v; the decimal id when the graph carries no labels.
    std::string label(Vertex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_;
    }

private:
    void build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> adj_eid_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    // Dense adjacency bits for small graphs; empty when n is large.
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
};

/// Complete orientation of a graph: one direction per edge.
class Orientation {
public:
    Orientation() = default;
    /// Every edge oriented from its smaller to its larger endpoint.
    explicit Orientation(const Graph& g);

    const Graph& base() const { return *base_; }
    bool is_forward(EdgeId e) const { return !reversed_[e]; }

    /// Direct edge {tail, head} as tail -> head. Throws if not an edge.
    void set(Vertex tail, Vertex head);
    void set_forward(EdgeId e, bool forward) { reversed_[e] = forward ? 0 : 1; }

    Arc arc(EdgeId e) const;
    /// True iff {u,v} is an edge oriented u -> v.
    bool points(Vertex u, Vertex v) const;

    std::vector<Arc> arcs() const;
    Orientation reversed() const;

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.reversed_ == b.reversed_;
    }

private:
    const Graph* base_ = nullptr;
    std::vector<std::uint8_t> reversed_;
};

/// Orientation of some of the edges of a graph.
class PartialOrientation {
public:
    PartialOrientation() = default;
    explicit PartialOrientation(const Graph& g);

    const Graph& base() const { return *base_; }

    bool is_directed(EdgeId e) const { return state_[e] != kUnset; }
    std::optional<Arc> arc(EdgeId e) const;

    /// Direct {tail, head}. Returns false (and leaves the orientation
    /// unchanged) when the edge is already directed the other way.
    bool set(Vertex tail, Vertex head);
    void clear(EdgeId e) { state_[e] = kUnset; }

    bool points(Vertex u, Vertex v) const;
    std::size_t directed_count() const;
    std::vector<Arc> arcs() const;

private:
    static constexpr std::uint8_t kUnset = 2;
    const Graph* base_ = nullptr;
    std::vector<std::uint8_t> state_;
};

struct InducedSubgraph {
    Graph graph;
    /// new id -> original id
    std::vector<Vertex> to_original;
};

/// Subgraph induced by `vertices` (duplicates ignored, order of first
/// appearance defines the new ids). Labels are carried over.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// g minus one vertex.
InducedSubgraph delete_vertex(const Graph& g, Vertex v);

Graph complement(const Graph& g);

/// Connected components; comp[v] in 0..count-1 numbered by smallest vertex.
struct Components {
    std::vector<std::uint32_t> of;
    std::size_t count = 0;
};
Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

struct DotOptions {
    const Orientation* orientation = nullptr;
    std::span<const Vertex> highlight = {};
    std::string name = "G";
};
std::string emit_dot(const Graph& g, const DotOptions& options = {});

// Small named graphs used throughout tests and tools.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace oppo
