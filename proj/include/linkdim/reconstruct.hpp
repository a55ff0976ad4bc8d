#pragma once

#include <vector>

#include "linkdim/coords.hpp"
#include "linkdim/graph.hpp"

namespace linkdim {

inline constexpr int kDefaultEnumerationLimit = 16;
inline constexpr int kOracleNodeLimit = 12;

// Builds the graph whose edges are exactly the node pairs at coordinate gap 1,
// then checks that its landmark distances reproduce p and that no edge is
// invisible. Throws InfeasibleError when p has duplicate rows, matches no
// graph, or matches more than one.
Graph reconstruct(const DistanceVectorMatrix& p);

// Every connected simple graph whose landmark columns equal p, at most `limit`
// of them, in a deterministic order. An empty result means p is unrealizable.
std::vector<Graph> enumerate_consistent_graphs(const DistanceVectorMatrix& p,
                                               int limit = kDefaultEnumerationLimit);

// True when coordinates(g, m) pins down g among all consistent graphs.
bool is_unique_realization(const Graph& g, const LandmarkSet& m);

} // namespace linkdim
