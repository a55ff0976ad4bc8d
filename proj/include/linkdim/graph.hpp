#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linkdim/errors.hpp"

namespace linkdim {

// Unordered node pair, stored with first < second (internal indices).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/**
 * Simple undirected graph over labeled nodes.
 *
 * Labels are opaque tokens; internally nodes are dense indices 0..N-1 in
 * first-appearance order. Immutable after construction and safe to share
 * across threads. Connectivity is not required here; it is enforced when a
 * DistanceMatrix is requested.
 */
class Graph {
public:
    // Throws InputError on duplicate labels, self-loops, duplicate edges or
    // out-of-range endpoints.
    Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

    // Builds a graph from label pairs; node order is first appearance.
    static Graph from_label_pairs(
        const std::vector<std::pair<std::string, std::string>>& pairs);

    int node_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const;

    std::optional<int> index_of(std::string_view label) const;
    // Like index_of but throws InputError for unknown labels.
    int require_index(std::string_view label) const;

    // Neighbor indices of v, sorted ascending.
    const std::vector<int>& neighbors(int v) const;
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    // Edges sorted lexicographically by (first, second).
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;

    // Equal when labels (in order) and edge sets match exactly.
    bool operator==(const Graph& other) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/**
 * Parses edge-list text: one edge per line as two whitespace-separated node
 * labels; blank lines and lines starting with '#' are ignored. Throws
 * InputError with a line number on malformed lines, self-loops and duplicate
 * edges.
 */
Graph parse_graph(std::string_view text);

// Serializes a graph back to edge-list text, one "u v" line per edge in the
// graph's canonical edge order.
std::string to_edge_list(const Graph& g);

/**
 * Dense hop-distance matrix of a connected graph, with the diameter and the
 * maximum node degree of the source graph. Entries are exact integers.
 */
class DistanceMatrix {
public:
    int order() const { return order_; }
    int at(int i, int j) const;
    int diameter() const { return diameter_; }
    int max_degree() const { return max_degree_; }
    const std::vector<std::string>& node_labels() const { return labels_; }

    // h(i,j) == 1 exactly when (i,j) is an edge of the source graph.
    bool has_edge(int i, int j) const { return at(i, j) == 1; }

private:
    friend DistanceMatrix all_pairs_distances(const Graph&, int);
    DistanceMatrix() = default;

    int order_ = 0;
    int diameter_ = 0;
    int max_degree_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> entries_;
};

/**
 * BFS from every node. Throws DisconnectedError naming two unreachable nodes
 * when the graph is not connected. With threads > 1 the per-source runs
 * execute in parallel; the result is identical to the sequential one.
 */
DistanceMatrix all_pairs_distances(const Graph& g, int threads = 1);

enum class GraphFamily { path, cycle, complete, erdos_renyi };

// Parses "path", "cycle", "complete", "er" / "erdos-renyi".
std::optional<GraphFamily> parse_family(std::string_view name);

/**
 * Deterministic graph generator. Nodes are labeled "1".."n".
 *
 * erdos_renyi requires p in (0,1] and redraws until the sample is connected;
 * throws InfeasibleError once the retry budget is exhausted. Identical
 * arguments always yield identical edge sets.
 */
Graph generate(GraphFamily family, int n, std::optional<double> p = {},
               std::uint64_t seed = 0);

} // namespace linkdim
