#include "linkdim/coords.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "detail/bfs.hpp"
#include "detail/coords_internal.hpp"
#include "detail/parallel.hpp"

namespace linkdim {

LandmarkSet LandmarkSet::from_labels(const Graph& g,
                                     const std::vector<std::string>& labels) {
    std::vector<int> members;
    members.reserve(labels.size());
    for (const auto& label : labels) members.push_back(g.require_index(label));
    return from_indices(g, std::move(members));
}

LandmarkSet LandmarkSet::from_indices(const Graph& g, std::vector<int> members) {
    if (members.empty()) throw InputError("landmark set must not be empty");
    std::unordered_set<int> seen;
    for (int v : members) {
        if (v < 0 || v >= g.node_count())
            throw InputError("landmark index out of range");
        if (!seen.insert(v).second)
            throw InputError("duplicate landmark '" + g.label(v) + "'");
    }
    LandmarkSet m;
    m.members_ = std::move(members);
    m.labels_.reserve(m.members_.size());
    for (int v : m.members_) m.labels_.push_back(g.label(v));
    return m;
}

int LandmarkSet::member(int k) const {
    if (k < 0 || k >= size()) throw InputError("landmark position out of range");
    return members_[k];
}

bool LandmarkSet::contains(int node) const {
    return std::find(members_.begin(), members_.end(), node) != members_.end();
}

DistanceVectorMatrix::DistanceVectorMatrix(std::vector<std::string> node_labels,
                                           std::vector<std::string> landmark_labels,
                                           std::vector<int> values)
    : node_labels_(std::move(node_labels)),
      landmark_labels_(std::move(landmark_labels)),
      values_(std::move(values)) {
    const int n = node_count();
    const int m = landmark_count();
    if (n == 0) throw InputError("coordinate matrix has no rows");
    if (m == 0) throw InputError("coordinate matrix has no landmark columns");
    if (values_.size() != static_cast<std::size_t>(n) * m)
        throw InputError("coordinate matrix shape mismatch");

    std::unordered_map<std::string, int> row_index;
    for (int i = 0; i < n; ++i) {
        if (node_labels_[i].empty()) throw InputError("empty node label");
        if (!row_index.emplace(node_labels_[i], i).second)
            throw InputError("duplicate node label '" + node_labels_[i] + "'");
    }
    for (const int v : values_) {
        if (v < 0) throw InputError("negative coordinate entry");
    }

    landmark_rows_.reserve(m);
    std::unordered_set<std::string> landmark_seen;
    for (int k = 0; k < m; ++k) {
        const auto& label = landmark_labels_[k];
        if (!landmark_seen.insert(label).second)
            throw InputError("duplicate landmark label '" + label + "'");
        auto it = row_index.find(label);
        if (it == row_index.end())
            throw InputError("landmark '" + label + "' is not a listed node");
        landmark_rows_.push_back(it->second);
    }

    // Zero structure: column k is zero exactly at its landmark's row.
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < n; ++i) {
            bool should_be_zero = i == landmark_rows_[k];
            bool is_zero = at(i, k) == 0;
            if (is_zero != should_be_zero)
                throw InputError(
                    "malformed coordinates: column '" + landmark_labels_[k] +
                    "' must be zero exactly at row '" + node_labels_[i] + "'" +
                    (should_be_zero ? "" : " and nowhere else"));
        }
    }
}

int DistanceVectorMatrix::at(int row, int col) const {
    if (row < 0 || row >= node_count() || col < 0 || col >= landmark_count())
        throw InputError("coordinate index out of range");
    return values_[static_cast<std::size_t>(row) * landmark_count() + col];
}

std::optional<int> DistanceVectorMatrix::row_of(std::string_view node_label) const {
    for (int i = 0; i < node_count(); ++i)
        if (node_labels_[i] == node_label) return i;
    return std::nullopt;
}

int DistanceVectorMatrix::landmark_row(int k) const {
    if (k < 0 || k >= landmark_count())
        throw InputError("landmark column out of range");
    return landmark_rows_[k];
}

bool DistanceVectorMatrix::row_equals(int i, int j) const {
    const int m = landmark_count();
    for (int k = 0; k < m; ++k)
        if (at(i, k) != at(j, k)) return false;
    return true;
}

bool DistanceVectorMatrix::operator==(const DistanceVectorMatrix& other) const {
    return node_labels_ == other.node_labels_ &&
           landmark_labels_ == other.landmark_labels_ && values_ == other.values_;
}

namespace {

void check_csv_token(const std::string& token) {
    if (token.empty()) throw InputError("empty label is not representable in CSV");
    for (char c : token) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            throw InputError("label '" + token + "' is not representable in CSV");
    }
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(pos));
            return fields;
        }
        fields.emplace_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

} // namespace

std::string DistanceVectorMatrix::to_csv() const {
    std::ostringstream out;
    out << "node";
    for (const auto& label : landmark_labels_) {
        check_csv_token(label);
        out << ',' << label;
    }
    out << '\n';
    for (int i = 0; i < node_count(); ++i) {
        check_csv_token(node_labels_[i]);
        out << node_labels_[i];
        for (int k = 0; k < landmark_count(); ++k) out << ',' << at(i, k);
        out << '\n';
    }
    return out.str();
}

DistanceVectorMatrix DistanceVectorMatrix::from_csv(std::string_view text) {
    std::vector<std::string> node_labels;
    std::vector<std::string> landmark_labels;
    std::vector<int> values;
    int line_no = 0;
    bool saw_header = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        auto fields = split_csv_line(line);
        if (!saw_header) {
            if (fields.size() < 2 || fields[0] != "node")
                throw InputError("line 1: expected CSV header 'node,<landmark>,...'");
            landmark_labels.assign(fields.begin() + 1, fields.end());
            saw_header = true;
            continue;
        }
        if (fields.size() != landmark_labels.size() + 1)
            throw InputError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(landmark_labels.size() + 1) + " fields, found " +
                             std::to_string(fields.size()));
        node_labels.push_back(fields[0]);
        for (std::size_t k = 1; k < fields.size(); ++k) {
            const std::string& f = fields[k];
            int value = 0;
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
            if (ec != std::errc() || ptr != f.data() + f.size() || value < 0)
                throw InputError("line " + std::to_string(line_no) +
                                 ": invalid coordinate '" + f + "'");
            values.push_back(value);
        }
    }
    if (!saw_header) throw InputError("empty coordinate CSV");
    if (node_labels.empty()) throw InputError("coordinate CSV has no rows");
    return DistanceVectorMatrix(std::move(node_labels), std::move(landmark_labels),
                                std::move(values));
}

namespace detail {

std::vector<std::vector<int>> landmark_columns(const Graph& g,
                                               const std::vector<int>& members) {
    std::vector<std::vector<int>> columns(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        bfs(g.adjacency(), members[k], columns[k]);
        for (int v = 0; v < g.node_count(); ++v) {
            if (columns[k][v] < 0)
                throw DisconnectedError("graph is not connected: no path between '" +
                                        g.label(members[k]) + "' and '" + g.label(v) +
                                        "'");
        }
    }
    return columns;
}

std::vector<std::vector<int>> landmark_columns(const DistanceMatrix& h,
                                               const std::vector<int>& members) {
    std::vector<std::vector<int>> columns(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        columns[k].resize(h.order());
        for (int v = 0; v < h.order(); ++v) columns[k][v] = h.at(v, members[k]);
    }
    return columns;
}

std::optional<Edge> first_coordinate_collision(
    const std::vector<std::vector<int>>& columns, int node_count) {
    for (int i = 0; i < node_count; ++i) {
        for (int j = i + 1; j < node_count; ++j) {
            bool equal = true;
            for (const auto& col : columns) {
                if (col[i] != col[j]) {
                    equal = false;
                    break;
                }
            }
            if (equal) return Edge{i, j};
        }
    }
    return std::nullopt;
}

bool edge_invisible_given(const Graph& g, const std::vector<int>& members,
                          const std::vector<std::vector<int>>& baseline, Edge e) {
    std::vector<int> dist;
    for (std::size_t k = 0; k < members.size(); ++k) {
        bfs_skip_edge(g.adjacency(), members[k], e.first, e.second, dist);
        if (dist != baseline[k]) return false;
    }
    return true;
}

AmbiguityReport ambiguity_report_core(const Graph& g,
                                      const std::vector<int>& members,
                                      const std::vector<std::vector<int>>& baseline,
                                      int threads) {
    AmbiguityReport report;

    const auto& edges = g.edges();
    std::vector<char> invisible(edges.size(), 0);
    parallel_for(static_cast<int>(edges.size()), threads, [&](int idx) {
        invisible[idx] = edge_invisible_given(g, members, baseline, edges[idx]) ? 1 : 0;
    });
    for (std::size_t idx = 0; idx < edges.size(); ++idx)
        if (invisible[idx]) report.invisible_present_edges.push_back(edges[idx]);

    const int n = g.node_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) continue;
            int max_gap = 0;
            for (const auto& col : baseline)
                max_gap = std::max(max_gap, std::abs(col[i] - col[j]));
            if (max_gap == 1) report.ambiguous_absent_edges.emplace_back(i, j);
        }
    }
    return report;
}

} // namespace detail

namespace {

// coordinates() and friends accept any (h, m) pair built against the same
// graph; a label cross-check catches mismatched arguments early.
void check_matrix_landmarks(const DistanceMatrix& h, const LandmarkSet& m) {
    for (int k = 0; k < m.size(); ++k) {
        int v = m.member(k);
        if (v < 0 || v >= h.order() || h.node_labels()[v] != m.labels()[k])
            throw InputError("landmark set does not match the distance matrix");
    }
}

} // namespace

DistanceVectorMatrix coordinates(const DistanceMatrix& h, const LandmarkSet& m) {
    check_matrix_landmarks(h, m);
    const int n = h.order();
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(n) * m.size());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m.size(); ++k) values.push_back(h.at(i, m.member(k)));
    return DistanceVectorMatrix(h.node_labels(), m.labels(), std::move(values));
}

DeltaProfile delta(const DistanceVectorMatrix& p, int i, int j) {
    if (i < 0 || i >= p.node_count() || j < 0 || j >= p.node_count())
        throw InputError("node row out of range");
    if (i == j) throw InputError("delta requires two distinct nodes");
    DeltaProfile profile;
    profile.i = i;
    profile.j = j;
    profile.per_landmark.reserve(p.landmark_count());
    for (int k = 0; k < p.landmark_count(); ++k) {
        int gap = std::abs(p.at(i, k) - p.at(j, k));
        profile.per_landmark.push_back(gap);
        profile.max = std::max(profile.max, gap);
    }
    return profile;
}

ResolutionResult is_resolution_set(const DistanceMatrix& h, const LandmarkSet& m) {
    check_matrix_landmarks(h, m);
    auto columns = detail::landmark_columns(h, m.members());
    auto collision = detail::first_coordinate_collision(columns, h.order());
    return {!collision.has_value(), collision};
}

bool is_edge_invisible(const Graph& g, const LandmarkSet& m, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw InputError("pair (" + g.label(e.first) + ", " + g.label(e.second) +
                         ") is not an edge of the graph");
    auto baseline = detail::landmark_columns(g, m.members());
    return detail::edge_invisible_given(g, m.members(), baseline, e);
}

bool is_nonedge_ambiguous_candidate(const DistanceMatrix& h, const LandmarkSet& m,
                                    int i, int j) {
    check_matrix_landmarks(h, m);
    if (i < 0 || i >= h.order() || j < 0 || j >= h.order())
        throw InputError("node index out of range");
    if (i == j) throw InputError("pair must consist of two distinct nodes");
    if (h.has_edge(i, j))
        throw InputError("pair (" + h.node_labels()[i] + ", " + h.node_labels()[j] +
                         ") is an edge of the graph");
    int max_gap = 0;
    for (int k = 0; k < m.size(); ++k)
        max_gap = std::max(max_gap, std::abs(h.at(i, m.member(k)) - h.at(j, m.member(k))));
    return max_gap == 1;
}

AmbiguityReport ambiguity_report(const Graph& g, const LandmarkSet& m, int threads) {
    auto baseline = detail::landmark_columns(g, m.members());
    return detail::ambiguity_report_core(g, m.members(), baseline, threads);
}

} // namespace linkdim
