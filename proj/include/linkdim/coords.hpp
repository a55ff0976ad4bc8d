#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkdim/graph.hpp"

namespace linkdim {

/**
 * Ordered set of distinct nodes designated as landmarks. Members are stored
 * as internal node indices together with their labels, so a set stays tied
 * to the node ordering of the graph it was built against.
 */
class LandmarkSet {
public:
    static LandmarkSet from_labels(const Graph& g,
                                   const std::vector<std::string>& labels);
    static LandmarkSet from_indices(const Graph& g, std::vector<int> members);

    int size() const { return static_cast<int>(members_.size()); }
    int member(int k) const;
    const std::vector<int>& members() const { return members_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool contains(int node) const;

private:
    LandmarkSet() = default;
    std::vector<int> members_;
    std::vector<std::string> labels_;
};

/**
 * Per-node coordinate vectors: row i holds the hop distances from node i to
 * each landmark, columns in landmark order. Construction enforces the zero
 * structure: column k is zero exactly at landmark k's own row, and no other
 * entry of the matrix is zero.
 */
class DistanceVectorMatrix {
public:
    DistanceVectorMatrix(std::vector<std::string> node_labels,
                         std::vector<std::string> landmark_labels,
                         std::vector<int> values); // row-major

    int node_count() const { return static_cast<int>(node_labels_.size()); }
    int landmark_count() const { return static_cast<int>(landmark_labels_.size()); }
    int at(int row, int col) const;

    const std::vector<std::string>& node_labels() const { return node_labels_; }
    const std::vector<std::string>& landmark_labels() const { return landmark_labels_; }

    std::optional<int> row_of(std::string_view node_label) const;
    // Row index holding the zero of landmark column k.
    int landmark_row(int k) const;

    bool row_equals(int i, int j) const;

    bool operator==(const DistanceVectorMatrix& other) const;

    // CSV with header "node,<A1>,<A2>,..."; one row per node in row order.
    std::string to_csv() const;
    static DistanceVectorMatrix from_csv(std::string_view text);

private:
    std::vector<std::string> node_labels_;
    std::vector<std::string> landmark_labels_;
    std::vector<int> values_;
    std::vector<int> landmark_rows_;
};

// Coordinate difference profile of a node pair: per-landmark absolute
// distance differences and their maximum.
struct DeltaProfile {
    int i = 0;
    int j = 0;
    std::vector<int> per_landmark;
    int max = 0;
};

struct ResolutionResult {
    bool is_resolution = false;
    // Lexicographically first colliding node pair when not a resolution set.
    std::optional<Edge> collision;
};

/**
 * The pairs a landmark set cannot pin down: present edges whose removal
 * leaves every coordinate unchanged, and absent pairs whose coordinate gap
 * permits an edge. Both lists are sorted lexicographically by node index and
 * never touch a landmark.
 */
struct AmbiguityReport {
    std::vector<Edge> invisible_present_edges;
    std::vector<Edge> ambiguous_absent_edges;

    bool is_empty() const {
        return invisible_present_edges.empty() && ambiguous_absent_edges.empty();
    }
};

// Row i, column k of the result equals h(i, landmark k).
DistanceVectorMatrix coordinates(const DistanceMatrix& h, const LandmarkSet& m);

// Requires i != j; both are row indices of p.
DeltaProfile delta(const DistanceVectorMatrix& p, int i, int j);

// True when all coordinate rows are pairwise distinct.
ResolutionResult is_resolution_set(const DistanceMatrix& h, const LandmarkSet& m);

/**
 * True when removing e changes no coordinate of any node. Removal that
 * disconnects the graph counts as a change. Throws InputError when e is not
 * an edge of g.
 */
bool is_edge_invisible(const Graph& g, const LandmarkSet& m, Edge e);

// For a non-adjacent pair: true when the coordinate gap is exactly one hop
// to every landmark, i.e. adding the edge would leave coordinates intact.
// Throws InputError when (i,j) is an edge.
bool is_nonedge_ambiguous_candidate(const DistanceMatrix& h, const LandmarkSet& m,
                                    int i, int j);

// Full scan of edges and non-adjacent pairs. threads > 1 parallelizes the
// per-edge checks with an order-independent, deterministic aggregation.
AmbiguityReport ambiguity_report(const Graph& g, const LandmarkSet& m,
                                 int threads = 1);

} // namespace linkdim
