#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkdim/coords.hpp"
#include "linkdim/graph.hpp"

namespace linkdim {

enum class DimensionKind { metric, link, strong };
enum class SolveMethod { exact, greedy_upper_bound };

std::string to_string(DimensionKind kind);
std::string to_string(SolveMethod method);

struct DimensionResult {
    DimensionKind kind = DimensionKind::metric;
    int value = 0;
    std::vector<std::string> witness;
    SolveMethod method = SolveMethod::exact;
};

// Node-count caps for exhaustive subset search. Larger graphs are refused
// unless greedy mode is requested explicitly.
inline constexpr int kDefaultExactLimit = 16;
inline constexpr int kDefaultStrongExactLimit = 14;

struct SolveOptions {
    std::optional<int> exact_limit;
    bool greedy = false;
    int threads = 1;
};

struct ConstructionCheck {
    bool is_construction = false;
    ResolutionResult resolution;
    AmbiguityReport report;
};

ConstructionCheck is_construction_set(const Graph& g, const LandmarkSet& m,
                                      int threads = 1);

DimensionResult metric_dimension(const Graph& g, const SolveOptions& options = {});
DimensionResult link_dimension(const Graph& g, const SolveOptions& options = {});
DimensionResult strong_metric_dimension(const Graph& g,
                                        const SolveOptions& options = {});

// r must already be a resolution set. Repeatedly adds the non-landmark node
// incident to the most flagged pairs in the ambiguity report until the report
// is empty; ties go to the smallest internal index.
LandmarkSet upgrade_to_construction_set(const Graph& g, const LandmarkSet& r,
                                        int threads = 1);

// w strongly resolves (u, v) when u lies on a shortest v-w path or v lies on
// a shortest u-w path.
bool strongly_resolves(const DistanceMatrix& h, int w, int u, int v);
bool is_strong_resolving_set(const DistanceMatrix& h, const LandmarkSet& m);

} // namespace linkdim
