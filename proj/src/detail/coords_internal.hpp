#pragma once

#include <optional>
#include <vector>

#include "linkdim/coords.hpp"
#include "linkdim/graph.hpp"

namespace linkdim::detail {

// columns[k][i] = hop distance from node i to landmark k, by per-landmark
// BFS; throws DisconnectedError when some node is unreachable.
std::vector<std::vector<int>> landmark_columns(const Graph& g,
                                               const std::vector<int>& members);

// Same columns sliced out of a precomputed distance matrix.
std::vector<std::vector<int>> landmark_columns(const DistanceMatrix& h,
                                               const std::vector<int>& members);

// Lexicographically first node pair with identical coordinate rows, if any.
std::optional<Edge> first_coordinate_collision(
    const std::vector<std::vector<int>>& columns, int node_count);

// Invisibility test against precomputed baseline columns: true when deleting
// e changes no landmark distance of any node (deletion that disconnects the
// graph counts as a change).
bool edge_invisible_given(const Graph& g, const std::vector<int>& members,
                          const std::vector<std::vector<int>>& baseline, Edge e);

AmbiguityReport ambiguity_report_core(const Graph& g,
                                      const std::vector<int>& members,
                                      const std::vector<std::vector<int>>& baseline,
                                      int threads);

} // namespace linkdim::detail
