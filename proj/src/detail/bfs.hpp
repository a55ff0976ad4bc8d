#pragma once

#include <vector>

namespace linkdim::detail {

// Hop distances from src over an adjacency list; unreachable nodes get -1.
inline void bfs(const std::vector<std::vector<int>>& adj, int src,
                std::vector<int>& dist) {
    dist.assign(adj.size(), -1);
    std::vector<int> frontier;
    frontier.reserve(adj.size());
    frontier.push_back(src);
    dist[src] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        int v = frontier[head];
        for (int w : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                frontier.push_back(w);
            }
        }
    }
}

// Same as bfs() but traverses the graph as if edge (skip_a, skip_b) were
// absent.
inline void bfs_skip_edge(const std::vector<std::vector<int>>& adj, int src,
                          int skip_a, int skip_b, std::vector<int>& dist) {
    dist.assign(adj.size(), -1);
    std::vector<int> frontier;
    frontier.reserve(adj.size());
    frontier.push_back(src);
    dist[src] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        int v = frontier[head];
        for (int w : adj[v]) {
            if ((v == skip_a && w == skip_b) || (v == skip_b && w == skip_a))
                continue;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                frontier.push_back(w);
            }
        }
    }
}

} // namespace linkdim::detail
