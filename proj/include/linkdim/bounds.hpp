#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkdim/graph.hpp"

namespace linkdim {

// Necessary conditions on the landmark count m. Each returns whether the
// inequality holds at the given m; exponentials saturate instead of
// overflowing, which can only turn a false into a true once the saturated
// side already dwarfs the other.
bool metric_dimension_bound(std::int64_t n, std::int64_t d, std::int64_t m);
bool link_count_bound(std::int64_t n, std::int64_t l, std::int64_t m);
bool degree_link_bound(std::int64_t d, std::int64_t l, std::int64_t ndmax,
                       std::int64_t m);
bool landmark_degree_bound(std::int64_t ndmax, std::int64_t m);

struct BoundEntry {
    std::string name;
    // Smallest m satisfying the bound; empty when no admissible m does
    // (link_count_bound additionally requires m <= n).
    std::optional<int> minimal_m;
};

struct BoundsReport {
    std::int64_t n = 0;
    std::int64_t l = 0;
    std::int64_t d = 0;
    std::int64_t ndmax = 0;
    std::vector<BoundEntry> entries;
    int gamma_lower_bound = 0;
};

BoundsReport bounds_report(const Graph& g);
BoundsReport bounds_report_params(std::int64_t n, std::int64_t l, std::int64_t d,
                                  std::int64_t ndmax);

} // namespace linkdim
