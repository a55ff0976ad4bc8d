#include "linkdim/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "detail/bfs.hpp"
#include "detail/parallel.hpp"

namespace linkdim {

namespace {

constexpr int kErdosRenyiRetryLimit = 256;

std::string edge_text(const std::string& a, const std::string& b) {
    return "(" + a + ", " + b + ")";
}

} // namespace

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty())
            throw InputError("empty node label at position " + std::to_string(i));
        auto [_, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
        if (!inserted)
            throw InputError("duplicate node label '" + labels_[i] + "'");
    }
    const int n = node_count();
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InputError("edge endpoint out of range");
        if (a == b)
            throw InputError("self-loop at node '" + labels_[a] + "'");
        Edge e = make_edge(a, b);
        if (!seen.insert(e).second)
            throw InputError("duplicate edge " +
                             edge_text(labels_[e.first], labels_[e.second]));
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n, {});
    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::from_label_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(label);
        index.emplace(label, id);
        return id;
    };
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.emplace_back(intern(a), intern(b));
    return Graph(std::move(labels), edges);
}

const std::string& Graph::label(int v) const {
    if (v < 0 || v >= node_count())
        throw InputError("node index out of range");
    return labels_[v];
}

std::optional<int> Graph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Graph::require_index(std::string_view label) const {
    auto idx = index_of(label);
    if (!idx)
        throw InputError("unknown node label '" + std::string(label) + "'");
    return *idx;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= node_count())
        throw InputError("node index out of range");
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= node_count() || v < 0 || v >= node_count())
        throw InputError("node index out of range");
    if (u == v) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

bool Graph::operator==(const Graph& other) const {
    // Same labeled graph regardless of node order, so parse(to_edge_list(g))
    // compares equal even when first-appearance order differs.
    if (labels_ == other.labels_) return edges_ == other.edges_;
    auto key = [](const Graph& g) {
        std::vector<std::pair<std::string, std::string>> named;
        named.reserve(g.edges_.size());
        for (const auto& e : g.edges_) {
            auto a = g.labels_[static_cast<std::size_t>(e.first)];
            auto b = g.labels_[static_cast<std::size_t>(e.second)];
            if (b < a) std::swap(a, b);
            named.emplace_back(std::move(a), std::move(b));
        }
        std::sort(named.begin(), named.end());
        return named;
    };
    auto mine = labels_;
    auto theirs = other.labels_;
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    return mine == theirs && key(*this) == key(other);
}

Graph parse_graph(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    auto intern = [&](std::string label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        index.emplace(label, id);
        labels.push_back(std::move(label));
        return id;
    };

    std::vector<Edge> edges;
    std::set<Edge> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start));
        }
        if (tokens.empty()) continue;
        if (tokens[0][0] == '#') continue;
        if (tokens.size() != 2)
            throw InputError("line " + std::to_string(line_no) +
                             ": expected two node labels, found " +
                             std::to_string(tokens.size()));
        if (tokens[0] == tokens[1])
            throw InputError("line " + std::to_string(line_no) +
                             ": self-loop on node '" + tokens[0] + "'");
        int a = intern(tokens[0]);
        int b = intern(tokens[1]);
        Edge e = make_edge(a, b);
        if (!seen.insert(e).second)
            throw InputError("line " + std::to_string(line_no) +
                             ": duplicate edge " + edge_text(tokens[0], tokens[1]));
        edges.push_back(e);
    }
    if (edges.empty())
        throw InputError("input declares no edges");
    return Graph(std::move(labels), edges);
}

std::string to_edge_list(const Graph& g) {
    // Canonical form: each pair smaller label first, lines sorted, so the
    // text depends only on the labeled graph and not on node order.
    std::vector<std::pair<std::string, std::string>> lines;
    lines.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) {
        auto u = g.label(a);
        auto v = g.label(b);
        if (v < u) std::swap(u, v);
        lines.emplace_back(std::move(u), std::move(v));
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream out;
    for (const auto& [u, v] : lines) out << u << ' ' << v << '\n';
    return out.str();
}

int DistanceMatrix::at(int i, int j) const {
    if (i < 0 || i >= order_ || j < 0 || j >= order_)
        throw InputError("distance matrix index out of range");
    return entries_[static_cast<std::size_t>(i) * order_ + j];
}

DistanceMatrix all_pairs_distances(const Graph& g, int threads) {
    const int n = g.node_count();
    if (n == 0) throw InputError("graph has no nodes");

    // Connectivity first, so the error names a concrete unreachable pair.
    {
        std::vector<int> dist;
        detail::bfs(g.adjacency(), 0, dist);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0)
                throw DisconnectedError("graph is not connected: no path between '" +
                                        g.label(0) + "' and '" + g.label(v) + "'");
        }
    }

    DistanceMatrix h;
    h.order_ = n;
    h.labels_ = g.labels();
    h.max_degree_ = g.max_degree();
    h.entries_.assign(static_cast<std::size_t>(n) * n, 0);
    detail::parallel_for(n, threads, [&](int src) {
        std::vector<int> dist;
        detail::bfs(g.adjacency(), src, dist);
        std::copy(dist.begin(), dist.end(),
                  h.entries_.begin() + static_cast<std::size_t>(src) * n);
    });
    h.diameter_ = *std::max_element(h.entries_.begin(), h.entries_.end());
    return h;
}

std::optional<GraphFamily> parse_family(std::string_view name) {
    if (name == "path") return GraphFamily::path;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "complete") return GraphFamily::complete;
    if (name == "er" || name == "erdos-renyi") return GraphFamily::erdos_renyi;
    return std::nullopt;
}

namespace {

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

// 53-bit uniform draw in [0, 1); kept explicit so results are identical
// across standard library implementations.
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool edges_form_connected_graph(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> dist;
    detail::bfs(adj, 0, dist);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

} // namespace

Graph generate(GraphFamily family, int n, std::optional<double> p,
               std::uint64_t seed) {
    if (n < 2) throw InputError("graph generation requires n >= 2");
    switch (family) {
    case GraphFamily::path: {
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return Graph(numbered_labels(n), edges);
    }
    case GraphFamily::cycle: {
        if (n < 3) throw InputError("cycle generation requires n >= 3");
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 1, 0);
        return Graph(numbered_labels(n), edges);
    }
    case GraphFamily::complete: {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return Graph(numbered_labels(n), edges);
    }
    case GraphFamily::erdos_renyi: {
        if (!p)
            throw InputError("erdos-renyi generation requires an edge probability");
        if (!(*p > 0.0 && *p <= 1.0))
            throw InputError("edge probability must lie in (0, 1]");
        std::mt19937_64 rng(seed);
        for (int attempt = 0; attempt < kErdosRenyiRetryLimit; ++attempt) {
            std::vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (unit_draw(rng) < *p) edges.emplace_back(i, j);
            if (edges_form_connected_graph(n, edges))
                return Graph(numbered_labels(n), edges);
        }
        throw InfeasibleError(
            "no connected graph after " + std::to_string(kErdosRenyiRetryLimit) +
            " attempts (n=" + std::to_string(n) + ", p=" + std::to_string(*p) + ")");
    }
    }
    throw InputError("unknown graph family");
}

} // namespace linkdim
