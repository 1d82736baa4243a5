#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "oppo/graph.hpp"

namespace oppo::oracle {

inline constexpr std::size_t kMaxOrderVertices = 9;
inline constexpr std::size_t kMaxEndEdges = 22;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Brute-force ground truth. Deliberately unpruned.
struct OracleResult {
    bool member = false;
    /// Distinct end-edge direction assignments of all valid solutions,
    /// each as arcs over the end-edges sorted by edge. Filled on request.
    std::vector<std::vector<Arc>> all_solutions;
    /// A valid linear order (order oracles) when member.
    std::optional<std::vector<Vertex>> witness_order;
    /// A valid end-edge assignment (generalized oracle) when member.
    std::optional<std::vector<Arc>> witness_assignment;
};

/// Every vertex permutation; member iff some order has, for every induced
/// P4 abcd, a<b exactly when d<c. n <= 9.
OracleResult opposition(const Graph& g, bool enumerate_all = false);

/// Same scan with a<b exactly when c<d. n <= 9.
OracleResult coalition(const Graph& g, bool enumerate_all = false);

/// Every direction assignment of the end-edges (at most 22); member iff one
/// puts the end-edges of every induced P4 in opposition.
OracleResult generalized_opposition(const Graph& g);

}  // namespace oppo::oracle
