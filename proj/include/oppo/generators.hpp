#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "oppo/graph.hpp"

namespace oppo::gen {

using Rng = std::mt19937_64;

/// Pairwise non-isomorphic trees on n vertices (n >= 1), grown leaf by leaf
/// and deduplicated by canonical encoding.
std::vector<Graph> all_trees(std::size_t n);

/// Canonical string of a tree (center-rooted AHU encoding).
std::string tree_code(const Graph& tree);

/// Connected distance-hereditary graph on n vertices grown by random
/// pendant / true-twin / false-twin additions.
Graph random_distance_hereditary(std::size_t n, Rng& rng);

/// As above, but false twins are only added to vertices whose neighborhood
/// is a clique, which keeps the graph chordal (hence ptolemaic).
Graph random_ptolemaic(std::size_t n, Rng& rng);

/// Random ptolemaic graph grown one vertex at a time, rejecting any step
/// after which the opposition constraint graph stops being bipartite.
/// `twin_bias` in [0,1] weights twin additions against pendants.
Graph random_ptolemaic_opposition(std::size_t n, Rng& rng, double twin_bias = 0.5);

/// Uniform random graph with n vertices and m edges.
Graph random_gnm(std::size_t n, std::size_t m, Rng& rng);

}  // namespace oppo::gen
