#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "oppo/constraints.hpp"
#include "oppo/detectors.hpp"
#include "oppo/graph.hpp"

namespace oppo {

enum class GraphClass { opposition, generalized_opposition, coalition };
enum class Decision { member, non_member, undecided };

std::string to_string(GraphClass c);
std::string to_string(Decision d);
std::optional<GraphClass> parse_graph_class(const std::string& s);
ConstraintKind constraint_kind(GraphClass c);

/// Rejection by exhaustive flip search: the bipartition of the constraint
/// graph plus closed-off search branches covering every flip vector with
/// component 0 pinned to 0.
struct FlipRefutation {
    ConstraintKind kind = ConstraintKind::opposition;
    std::vector<ArcVar> vars;
    std::vector<std::uint8_t> side;
    std::vector<std::uint32_t> component;
    std::size_t component_count = 0;
    std::vector<ExhaustedBranch> branches;
};

using Certificate = std::variant<std::monostate, Orientation, OddWalk, FlipRefutation, PatternMatch>;

struct VerdictStats {
    std::size_t p4_count = 0;
    std::size_t aux_vertices = 0;
    std::size_t aux_components = 0;
    std::uint64_t flips_tried = 0;
};

struct Verdict {
    GraphClass graph_class = GraphClass::opposition;
    Decision decision = Decision::undecided;
    /// Which decision path produced the verdict.
    std::string method;
    Certificate certificate;
    /// Human-readable forbidden pattern accompanying a rejection, if asked for.
    std::optional<PatternMatch> witness;
    VerdictStats stats;
};

struct RecognizeOptions {
    std::uint64_t flip_cap = kDefaultFlipCap;
    /// Locate a forbidden pattern for rejections where a catalog applies.
    bool witness = false;
};

/// Raised when a construction that the theory guarantees breaks down:
/// a precondition was violated or an implementation bug surfaced.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Verdict recognize(const Graph& g, GraphClass c, const RecognizeOptions& options = {});

/// Member iff O(G) is bipartite. The certificate orients end-edges from one
/// side of the bipartition and the remaining edges low -> high; it need not
/// be acyclic.
Verdict recognize_generalized_opposition(const Graph& g, const RecognizeOptions& options = {});

/// Structural fast paths (distance-hereditary, gem/house-free) first, then
/// flip search over the components of O(G).
Verdict recognize_opposition(const Graph& g, const RecognizeOptions& options = {});

/// On (gem, house)-free graphs every bipartition of O(G) forces an acyclic
/// partial orientation. Defers to recognize_opposition otherwise.
Verdict recognize_opposition_gem_house_free(const Graph& g, const RecognizeOptions& options = {});

/// Distance-hereditary graphs: member iff O(G) bipartite. Orientation from
/// the ptolemaic constructor, through twin reduction when g has C4s.
/// Defers to recognize_opposition when g is not distance-hereditary.
Verdict recognize_opposition_distance_hereditary(const Graph& g,
                                                 const RecognizeOptions& options = {});

Verdict recognize_coalition(const Graph& g, const RecognizeOptions& options = {});

/// Distance-hereditary graphs: member iff N-free; certificate is a
/// transitive orientation. Defers to recognize_coalition otherwise.
Verdict recognize_coalition_distance_hereditary(const Graph& g,
                                                const RecognizeOptions& options = {});

enum class RootRule { p5_free_search, p5_midpoint, hk_apex };

std::string to_string(RootRule r);

struct ComponentRoot {
    RootRule rule = RootRule::p5_free_search;
    Vertex root = 0;
    /// k of the maximal H_k / H_k^- for hk_apex.
    int k = 0;
    HkVariant variant = HkVariant::full;
};

struct PtolemaicOrientation {
    Orientation orientation;
    /// One entry per connected component with at least one induced P4.
    std::vector<ComponentRoot> roots;
};

/// Layer construction for ptolemaic, T_k-free, (G1, G2)-free graphs.
/// Per component: root at the apex of a maximum H_k/H_k^-, else at the
/// midpoint of an induced P5; P5-free components go through flip search.
/// Throws ConstructionError on conflicting forced directions, a cyclic
/// forced part, or a failed final check.
PtolemaicOrientation ptolemaic_opposition_construct(const Graph& g);

inline Orientation ptolemaic_opposition_orient(const Graph& g) {
    return ptolemaic_opposition_construct(g).orientation;
}

/// Transitive orientation by implication-class forcing, or nullopt when g
/// is not a comparability graph.
std::optional<Orientation> transitive_orient(const Graph& g);

}  // namespace oppo
