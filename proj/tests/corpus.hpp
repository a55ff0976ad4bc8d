#pragma once

#include <vector>

#include "linkdim/graph.hpp"

// Deterministic graph corpus shared by the property tests and the acceptance
// suite. Seeds are fixed so any failure reproduces exactly.
namespace corpus {

inline std::vector<linkdim::Graph> er(int count, std::uint64_t base_seed, int n_min,
                                      int n_max, const std::vector<double>& ps) {
    std::vector<linkdim::Graph> graphs;
    graphs.reserve(count);
    const int span = n_max - n_min + 1;
    for (int i = 0; i < count; ++i) {
        const int n = n_min + i % span;
        const double p = ps[i % ps.size()];
        graphs.push_back(linkdim::generate(linkdim::GraphFamily::erdos_renyi, n, p,
                                           base_seed + static_cast<std::uint64_t>(i)));
    }
    return graphs;
}

// 300 seeded graphs on 2..7 nodes, used by the exact-solver chain checks.
inline const std::vector<linkdim::Graph>& chain_er() {
    static const auto graphs = er(300, 1000, 2, 7, {0.3, 0.5, 0.7});
    return graphs;
}

// 200 seeded graphs on 2..10 nodes, used by the round-trip checks.
inline const std::vector<linkdim::Graph>& roundtrip_er() {
    static const auto graphs = er(200, 5000, 2, 10, {0.3, 0.5, 0.8});
    return graphs;
}

// Paths on 2..10 nodes, cycles on 3..12, complete graphs on 3..7.
inline std::vector<linkdim::Graph> families() {
    std::vector<linkdim::Graph> graphs;
    for (int n = 2; n <= 10; ++n)
        graphs.push_back(linkdim::generate(linkdim::GraphFamily::path, n));
    for (int n = 3; n <= 12; ++n)
        graphs.push_back(linkdim::generate(linkdim::GraphFamily::cycle, n));
    for (int n = 3; n <= 7; ++n)
        graphs.push_back(linkdim::generate(linkdim::GraphFamily::complete, n));
    return graphs;
}

} // namespace corpus
