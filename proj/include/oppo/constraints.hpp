#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oppo/graph.hpp"
#include "oppo/p4.hpp"

namespace oppo {

enum class ConstraintKind { opposition, coalition };

std::string to_string(ConstraintKind kind);

/// One orientation choice x -> y of an end-edge.
struct ArcVar {
    Vertex x = 0;
    Vertex y = 0;
    ArcVar swapped() const { return {y, x}; }
    friend bool operator==(const ArcVar&, const ArcVar&) = default;
    friend auto operator<=>(const ArcVar&, const ArcVar&) = default;
};

using VarId = std::uint32_t;

/// Auxiliary graph whose vertices are the two orientations of every
/// end-edge. Adjacent variables cannot both be chosen.
///
/// opposition: (x,y) ~ (u,v) iff xyuv or uvxy is an induced P4
/// coalition:  (x,y) ~ (u,v) iff xyvu or vuxy is an induced P4
/// and in both kinds (x,y) ~ (y,x).
class ConstraintGraph {
public:
    ConstraintKind kind() const noexcept { return kind_; }
    const Graph& base() const { return *base_; }

    std::size_t var_count() const noexcept { return vars_.size(); }
    const ArcVar& var(VarId v) const { return vars_[v]; }
    const std::vector<ArcVar>& vars() const noexcept { return vars_; }
    const std::vector<VarId>& neighbors(VarId v) const { return adj_[v]; }
    bool adjacent(VarId a, VarId b) const;
    std::size_t edge_count() const;

    std::optional<VarId> find(Vertex x, Vertex y) const;
    /// The var for (y,x).
    VarId negation(VarId v) const { return v ^ 1U; }

    std::size_t p4_count() const noexcept { return p4_count_; }

    friend ConstraintGraph build_constraint_graph(const Graph& g, ConstraintKind kind);

private:
    ConstraintKind kind_ = ConstraintKind::opposition;
    const Graph* base_ = nullptr;
    std::vector<ArcVar> vars_;
    std::vector<std::vector<VarId>> adj_;
    // First var of each edge id (vars 2k, 2k+1 are mutual negations), or -1.
    std::vector<VarId> var_of_edge_;
    std::size_t p4_count_ = 0;
};

/// Built P4 by P4; each induced P4 contributes its two constraint edges.
ConstraintGraph build_constraint_graph(const Graph& g, ConstraintKind kind);

/// Proper 2-coloring of a constraint graph with connected-component ids.
struct Bipartition {
    std::vector<std::uint8_t> side;
    std::vector<std::uint32_t> component;
    std::size_t component_count = 0;
};

/// Closed walk v0 v1 ... vk = v0 of odd length k in the constraint graph.
struct OddWalk {
    std::vector<ArcVar> walk;
    std::size_t length() const { return walk.empty() ? 0 : walk.size() - 1; }
};

std::variant<Bipartition, OddWalk> bipartition_or_odd_walk(const ConstraintGraph& cg);

/// A flip vector chooses, per component, whether side 0 (flip 0) or side 1
/// (flip 1) supplies the directed end-edges. Var (x,y) is chosen iff
/// side ^ flip == 0, and chosen vars direct x -> y.
PartialOrientation forced_orientation(const ConstraintGraph& cg, const Bipartition& b,
                                      const std::vector<std::uint8_t>& flips);

/// Directed cycle v0 -> v1 -> ... -> v_{k-1} -> v0 (first vertex not repeated).
struct DirectedCycle {
    std::vector<Vertex> cycle;
};

struct TopologicalOrder {
    std::vector<Vertex> order;
};

std::variant<TopologicalOrder, DirectedCycle> is_acyclic(const PartialOrientation& p);

/// Completes p along a linear order extending its directed part (Kahn's
/// algorithm, smallest available id first). Throws GraphError if p is cyclic.
Orientation extend_acyclic(const PartialOrientation& p);

/// Vertex order induced by an acyclic orientation (smallest id first among
/// ties). Throws GraphError if o has a cycle.
std::vector<Vertex> linear_order(const Orientation& o);

/// Orientation of all edges by position in `order`.
Orientation orient_by_order(const Graph& g, const std::vector<Vertex>& order);

/// DOT export with vars labeled by concatenated vertex labels ("xy").
/// When `sides` is given, side-1 vars are drawn as boxes.
std::string constraint_graph_dot(const ConstraintGraph& cg, const Bipartition* sides = nullptr);

// ------------------------------------------------------------ flip search

/// A subtree of the flip search closed off by a directed cycle: every flip
/// vector starting with `prefix` (component 0 first) directs every arc of
/// `cycle`.
struct ExhaustedBranch {
    std::vector<std::uint8_t> prefix;
    DirectedCycle cycle;
};

struct FlipSearchResult {
    enum class Status { found, exhausted, capped };
    Status status = Status::exhausted;
    std::vector<std::uint8_t> flips;        // when found
    std::vector<ExhaustedBranch> branches;  // when exhausted
    std::uint64_t tried = 0;
};

inline constexpr std::uint64_t kDefaultFlipCap = std::uint64_t{1} << 20;

/// Searches flip vectors (component 0 pinned to 0; global reversal maps the
/// other half onto it) for one whose forced orientation is acyclic.
/// Depth-first over components with the cycle check applied to every
/// prefix; `cap` bounds the number of prefixes examined.
FlipSearchResult search_acyclic_flips(const ConstraintGraph& cg, const Bipartition& b,
                                      std::uint64_t cap = kDefaultFlipCap);

}  // namespace oppo
