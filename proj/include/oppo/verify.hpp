#pragma once

#include <string>
#include <vector>

#include "oppo/constraints.hpp"
#include "oppo/detectors.hpp"
#include "oppo/graph.hpp"
#include "oppo/recognize.hpp"

/// Certificate checkers. Everything here re-derives what it needs from the
/// graph with its own scans; none of it calls the producers' enumerators,
/// constraint-graph builder, cycle finder or pattern search.
namespace oppo::verify {

struct Check {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
    static Check pass() { return {}; }
    static Check fail(std::string why) { return {false, std::move(why)}; }
};

Check orientation_acyclic(const Orientation& o);

/// Acyclic and every induced P4 of type 0 or 1.
Check opposition_orientation(const Graph& g, const Orientation& o);
/// Acyclic and every induced P4 of type 2 or 3.
Check coalition_orientation(const Graph& g, const Orientation& o);
/// Every induced P4 of type 0 or 1 (cycles allowed).
Check generalized_opposition_orientation(const Graph& g, const Orientation& o);
/// Acyclic and a->b->c implies a->c.
Check transitive_orientation(const Graph& g, const Orientation& o);

/// Odd closed walk whose every hop satisfies the adjacency rule of `kind`.
Check odd_walk(const Graph& g, ConstraintKind kind, const OddWalk& walk);

Check flip_refutation(const Graph& g, const FlipRefutation& r);

/// Embedding is injective and induces exactly the pattern's edges.
Check pattern_match(const Graph& g, const Pattern& p, const PatternMatch& m);

/// The pattern's own constraint graph of `kind` is not bipartite, so no
/// graph containing it is in the class.
Check obstruction(const Pattern& p, ConstraintKind kind);

/// Induced cycle of at least `min_length` vertices in listed order.
Check induced_cycle(const Graph& g, const std::vector<Vertex>& cycle, std::size_t min_length);

/// Directed cycle every arc of which `o` directs that way.
Check directed_cycle(const PartialOrientation& o, const DirectedCycle& c);

/// Replays the pruning steps and checks one vertex per component remains.
Check pruning_sequence(const Graph& g, const std::vector<PruneStep>& steps);

Check perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order);

/// Dispatches on the certificate held by the verdict.
Check verdict(const Graph& g, const Verdict& v);

}  // namespace oppo::verify
