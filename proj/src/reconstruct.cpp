#include "linkdim/reconstruct.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "detail/bfs.hpp"
#include "detail/coords_internal.hpp"

namespace linkdim {

namespace {

int max_gap(const DistanceVectorMatrix& p, int i, int j) {
    int gap = 0;
    for (int k = 0; k < p.landmark_count(); ++k)
        gap = std::max(gap, std::abs(p.at(i, k) - p.at(j, k)));
    return gap;
}

std::optional<Edge> find_duplicate_rows(const DistanceVectorMatrix& p) {
    for (int i = 0; i < p.node_count(); ++i)
        for (int j = i + 1; j < p.node_count(); ++j)
            if (p.row_equals(i, j)) return Edge{i, j};
    return std::nullopt;
}

std::vector<std::vector<int>> matrix_columns(const DistanceVectorMatrix& p) {
    std::vector<std::vector<int>> columns(p.landmark_count(),
                                          std::vector<int>(p.node_count()));
    for (int k = 0; k < p.landmark_count(); ++k)
        for (int v = 0; v < p.node_count(); ++v) columns[k][v] = p.at(v, k);
    return columns;
}

// Depth-first include/exclude search over the free candidate edges. The
// included-only graph gives distance upper bounds and the
// included-plus-undecided graph gives lower bounds; a branch dies as soon as
// either bound contradicts a target column.
struct OracleSearch {
    const DistanceVectorMatrix& p;
    const std::vector<int>& landmark_rows;
    const std::vector<Edge>& free_edges;
    int limit;
    std::vector<Edge> included;
    std::vector<Graph> results;
    std::vector<int> dist;

    bool feasible(int idx) {
        const int n = p.node_count();
        std::vector<std::vector<int>> adj_incl(n), adj_super(n);
        auto add = [](std::vector<std::vector<int>>& adj, const Edge& e) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        };
        for (const auto& e : included) {
            add(adj_incl, e);
            add(adj_super, e);
        }
        for (std::size_t t = idx; t < free_edges.size(); ++t) add(adj_super, free_edges[t]);
        for (std::size_t k = 0; k < landmark_rows.size(); ++k) {
            detail::bfs(adj_incl, landmark_rows[k], dist);
            for (int v = 0; v < n; ++v)
                if (dist[v] >= 0 && dist[v] < p.at(v, static_cast<int>(k))) return false;
            detail::bfs(adj_super, landmark_rows[k], dist);
            for (int v = 0; v < n; ++v)
                if (dist[v] < 0 || dist[v] > p.at(v, static_cast<int>(k))) return false;
        }
        return true;
    }

    void dfs(int idx) {
        if (static_cast<int>(results.size()) >= limit) return;
        if (!feasible(idx)) return;
        if (idx == static_cast<int>(free_edges.size())) {
            results.emplace_back(p.node_labels(), included);
            return;
        }
        included.push_back(free_edges[idx]);
        dfs(idx + 1);
        included.pop_back();
        dfs(idx + 1);
    }
};

} // namespace

Graph reconstruct(const DistanceVectorMatrix& p) {
    if (auto dup = find_duplicate_rows(p))
        throw InfeasibleError("rows for '" + p.node_labels()[dup->first] + "' and '" +
                              p.node_labels()[dup->second] +
                              "' are identical; the coordinates do not come from a "
                              "resolution set");
    const int n = p.node_count();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (max_gap(p, i, j) == 1) edges.emplace_back(i, j);
    Graph g(p.node_labels(), edges);

    std::vector<int> dist;
    for (int k = 0; k < p.landmark_count(); ++k) {
        detail::bfs(g.adjacency(), p.landmark_row(k), dist);
        for (int v = 0; v < n; ++v) {
            if (dist[v] != p.at(v, k))
                throw InfeasibleError(
                    "coordinates are not realizable: landmark '" +
                    p.landmark_labels()[k] + "' would be at distance " +
                    (dist[v] < 0 ? std::string("infinity") : std::to_string(dist[v])) +
                    " from node '" + p.node_labels()[v] + "', not " +
                    std::to_string(p.at(v, k)));
        }
    }

    std::vector<int> landmark_rows;
    std::vector<char> is_landmark(n, 0);
    for (int k = 0; k < p.landmark_count(); ++k) {
        landmark_rows.push_back(p.landmark_row(k));
        is_landmark[p.landmark_row(k)] = 1;
    }
    auto baseline = matrix_columns(p);
    for (const auto& e : g.edges()) {
        if (is_landmark[e.first] || is_landmark[e.second]) continue;
        if (detail::edge_invisible_given(g, landmark_rows, baseline, e))
            throw InfeasibleError("coordinates admit more than one graph: edge (" +
                                  g.label(e.first) + ", " + g.label(e.second) +
                                  ") can be removed without changing any distance "
                                  "vector");
    }
    return g;
}

std::vector<Graph> enumerate_consistent_graphs(const DistanceVectorMatrix& p,
                                               int limit) {
    if (limit < 1) throw InputError("enumeration limit must be at least 1");
    const int n = p.node_count();
    const int m = p.landmark_count();
    std::vector<int> landmark_rows(m);
    std::vector<char> is_landmark(n, 0);
    for (int k = 0; k < m; ++k) {
        landmark_rows[k] = p.landmark_row(k);
        is_landmark[landmark_rows[k]] = 1;
    }

    // A landmark at distance 1 forces the edge; if that pair fails the gap
    // test, no graph fits.
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < n; ++i)
            if (i != landmark_rows[k] && p.at(i, k) == 1 &&
                max_gap(p, i, landmark_rows[k]) > 1)
                return {};

    // Candidates are the pairs with coordinate gap at most 1. Candidates
    // touching a landmark row always sit at distance exactly 1 in its column,
    // so they are forced in; the rest stay free.
    std::vector<Edge> forced, free_edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (max_gap(p, i, j) > 1) continue;
            if (is_landmark[i] || is_landmark[j])
                forced.emplace_back(i, j);
            else
                free_edges.emplace_back(i, j);
        }
    }

    OracleSearch search{p, landmark_rows, free_edges, limit, std::move(forced), {}, {}};
    search.dfs(0);
    return std::move(search.results);
}

bool is_unique_realization(const Graph& g, const LandmarkSet& m) {
    if (g.node_count() > kOracleNodeLimit)
        throw CapabilityError("consistency oracle is capped at " +
                              std::to_string(kOracleNodeLimit) + " nodes (graph has " +
                              std::to_string(g.node_count()) + ")");
    auto h = all_pairs_distances(g);
    auto p = coordinates(h, m);
    auto results = enumerate_consistent_graphs(p, 2);
    return results.size() == 1 && results.front() == g;
}

} // namespace linkdim
