#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oppo/graph.hpp"
#include "oppo/p4.hpp"

namespace oppo {

/// Small fixed graph searched for as an induced subgraph.
struct Pattern {
    std::string name;
    Graph graph;
    /// One role label per pattern vertex ("v1", "v0''", "1", ...).
    std::vector<std::string> roles;

    std::size_t order() const { return graph.order(); }
    /// Pattern vertex carrying `role`; throws if absent.
    Vertex role(const std::string& r) const;
};

/// Injective map pattern vertex -> host vertex inducing exactly the
/// pattern's edges.
struct PatternMatch {
    std::string pattern;
    std::vector<Vertex> embedding;
};

namespace patterns {
Pattern p4();
Pattern p5();
Pattern c4();
Pattern c5();
Pattern gem();
Pattern house();
Pattern domino();
/// C4 2-3-6-5 with pendants 1 at 2 and 4 at 3.
Pattern a();
Pattern g1();
Pattern g2();
/// Path 1-2-3-4, vertex 5 adjacent to 2 and 3, pendant 6 at 5.
Pattern n();
/// Complement of C6, labeled as two triangles {1,3,5}, {2,4,6} plus the
/// matching 1-4, 3-6, 5-2.
Pattern co_c6();
}  // namespace patterns

/// Catalog lookup: gem, house, domino, P4, P5, C4, C5, A, G1, G2, N, coC6,
/// T<k>, H<k>, H<k>-. nullopt for unknown names.
std::optional<Pattern> pattern_by_name(const std::string& name);

/// Backtracking induced-subgraph search. Pattern vertices are placed in BFS
/// order from a maximum-degree vertex, host candidates in increasing id, so
/// the first hit is deterministic.
std::optional<PatternMatch> find_induced(const Graph& g, const Pattern& p);

/// Spine of 2k+4 vertices with pendants at spine positions 3 and 2k+2.
Pattern make_tk(int k);

enum class HkVariant { full, minus };

/// H_k / H_k^- on 3k+3 vertices with roles v_i, v_i', v_i''.
Pattern make_hk(int k, HkVariant variant);

struct TkViolation {
    int k = 0;
    PatternMatch match;
};
/// Smallest k with an induced T_k, k = 1 .. (n-6)/2.
std::optional<TkViolation> find_tk_violation(const Graph& g);

struct HkMatch {
    int k = 0;
    HkVariant variant = HkVariant::full;
    PatternMatch match;
    /// Host vertex playing v_k.
    Vertex apex = 0;
};
/// Largest k such that g contains H_k or H_k^- (full preferred on ties).
std::optional<HkMatch> find_max_hk(const Graph& g);

/// Induced cycle of length >= 5, listed in cycle order.
std::optional<std::vector<Vertex>> has_hole(const Graph& g);

struct ChordalResult {
    bool chordal = false;
    /// Perfect elimination order when chordal.
    std::vector<Vertex> elimination_order;
    /// Induced cycle of length >= 4 otherwise.
    std::vector<Vertex> cycle;
};
ChordalResult is_chordal(const Graph& g);

struct ClassWitness {
    bool member = false;
    /// Embedding of the forbidden pattern or induced cycle on failure.
    std::optional<PatternMatch> witness;
};

/// Chordal and gem-free.
ClassWitness is_ptolemaic(const Graph& g);

/// Gem-free and house-free.
ClassWitness is_gem_house_free(const Graph& g);

/// Gem-, house- and hole-free.
ClassWitness is_gem_house_hole_free(const Graph& g);

enum class PruneKind { pendant, true_twin, false_twin };

std::string to_string(PruneKind kind);

struct PruneStep {
    PruneKind kind = PruneKind::pendant;
    Vertex removed = 0;
    /// Neighbor of a pendant, or the surviving twin.
    Vertex partner = 0;
};

struct DistanceHereditaryResult {
    bool member = false;
    std::vector<PruneStep> pruning;
    /// gem, house, domino or hole when not distance-hereditary.
    std::optional<PatternMatch> witness;
};

/// Prunes pendants and twins; the graph is distance-hereditary iff every
/// component shrinks to one vertex.
DistanceHereditaryResult is_distance_hereditary(const Graph& g);

struct TwinOrPendant {
    PruneKind kind = PruneKind::pendant;
    Vertex first = 0;
    Vertex second = 0;
};
/// Every pendant (first = the leaf, second = its neighbor) and every twin
/// pair (first < second) of g.
std::vector<TwinOrPendant> twins_and_pendants(const Graph& g);

}  // namespace oppo
