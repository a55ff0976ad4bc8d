#include "linkdim/dimensions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>

#include "detail/bfs.hpp"
#include "detail/coords_internal.hpp"
#include "detail/parallel.hpp"

namespace linkdim {

std::string to_string(DimensionKind kind) {
    switch (kind) {
        case DimensionKind::metric: return "metric";
        case DimensionKind::link: return "link";
        case DimensionKind::strong: return "strong";
    }
    throw Error("unknown dimension kind");
}

std::string to_string(SolveMethod method) {
    switch (method) {
        case SolveMethod::exact: return "exact";
        case SolveMethod::greedy_upper_bound: return "greedy-upper-bound";
    }
    throw Error("unknown solve method");
}

namespace {

void require_connected(const Graph& g) {
    (void)detail::landmark_columns(g, std::vector<int>{0});
}

// Steps c to its lexicographic successor among size-|c| subsets of [0, n).
bool next_combination(std::vector<int>& c, int n) {
    const int s = static_cast<int>(c.size());
    for (int i = s - 1; i >= 0; --i) {
        if (c[i] < n - (s - i)) {
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// First subset of size s passing `check`, in lexicographic order. Candidates
// are tested in parallel blocks; the block is then scanned in order, so the
// result matches the sequential search exactly.
template <typename CheckFn>
std::optional<std::vector<int>> first_passing_subset(int n, int s, int threads,
                                                     const CheckFn& check) {
    if (s > n) return std::nullopt;
    std::vector<int> comb(s);
    std::iota(comb.begin(), comb.end(), 0);
    const int block = std::max(1, threads) * 16;
    std::vector<std::vector<int>> batch;
    bool more = true;
    while (more) {
        batch.clear();
        while (static_cast<int>(batch.size()) < block) {
            batch.push_back(comb);
            more = next_combination(comb, n);
            if (!more) break;
        }
        std::vector<char> pass(batch.size(), 0);
        detail::parallel_for(static_cast<int>(batch.size()), threads,
                             [&](int idx) { pass[idx] = check(batch[idx]) ? 1 : 0; });
        for (std::size_t i = 0; i < batch.size(); ++i)
            if (pass[i]) return batch[i];
    }
    return std::nullopt;
}

bool resolves_all_pairs(const DistanceMatrix& h, const std::vector<int>& members) {
    const int n = h.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool separated = false;
            for (int a : members) {
                if (h.at(i, a) != h.at(j, a)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) return false;
        }
    }
    return true;
}

// Construction-set test tuned for subset search: cheap checks first, the
// per-edge deleted-edge BFS last. Landmark-incident edges are never invisible
// (removing one changes that landmark's distance-1 entry), so only edges
// between two non-landmarks need the BFS.
bool passes_construction(const Graph& g, const DistanceMatrix& h,
                         const std::vector<int>& members) {
    if (!resolves_all_pairs(h, members)) return false;
    const int n = h.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (h.has_edge(i, j)) continue;
            int max_gap = 0;
            for (int a : members)
                max_gap = std::max(max_gap, std::abs(h.at(i, a) - h.at(j, a)));
            if (max_gap == 1) return false;
        }
    }
    std::vector<char> is_member(n, 0);
    for (int a : members) is_member[a] = 1;
    std::vector<int> dist;
    for (const auto& e : g.edges()) {
        if (is_member[e.first] || is_member[e.second]) continue;
        bool invisible = true;
        for (int a : members) {
            detail::bfs_skip_edge(g.adjacency(), a, e.first, e.second, dist);
            for (int v = 0; v < n; ++v) {
                if (dist[v] != h.at(a, v)) {
                    invisible = false;
                    break;
                }
            }
            if (!invisible) break;
        }
        if (invisible) return false;
    }
    return true;
}

std::vector<std::string> member_labels(const Graph& g, const std::vector<int>& members) {
    std::vector<std::string> labels;
    labels.reserve(members.size());
    for (int v : members) labels.push_back(g.label(v));
    return labels;
}

int resolve_exact_limit(const SolveOptions& options, int fallback) {
    int limit = options.exact_limit.value_or(fallback);
    if (limit < 1) throw InputError("exact search limit must be at least 1");
    return limit;
}

void require_exact_capacity(const Graph& g, int limit, const char* what) {
    if (g.node_count() > limit)
        throw CapabilityError(std::string("exact ") + what + " search is capped at " +
                              std::to_string(limit) + " nodes (graph has " +
                              std::to_string(g.node_count()) +
                              "); request greedy mode for an upper bound");
}

template <typename CheckFn>
DimensionResult exact_search(const Graph& g, DimensionKind kind, int threads,
                             const CheckFn& check) {
    const int n = g.node_count();
    for (int s = 1; s <= n; ++s) {
        auto found = first_passing_subset(n, s, threads, check);
        if (found) {
            DimensionResult result;
            result.kind = kind;
            result.value = s;
            result.witness = member_labels(g, *found);
            result.method = SolveMethod::exact;
            return result;
        }
    }
    throw Error("subset search exhausted without a witness");
}

// Greedy resolution-set construction: each round adds the node separating the
// most still-unresolved pairs, smallest index on ties. Any unresolved pair is
// separated by its own endpoints, so every round makes progress.
std::vector<int> greedy_resolution_members(const DistanceMatrix& h) {
    const int n = h.order();
    std::vector<std::pair<int, int>> unresolved;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) unresolved.emplace_back(i, j);
    std::vector<int> members;
    std::vector<char> chosen(n, 0);
    while (!unresolved.empty()) {
        int best = -1;
        int best_gain = 0;
        for (int c = 0; c < n; ++c) {
            if (chosen[c]) continue;
            int gain = 0;
            for (const auto& [i, j] : unresolved)
                if (h.at(i, c) != h.at(j, c)) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        if (best < 0) throw Error("greedy resolution search stalled");
        chosen[best] = 1;
        members.push_back(best);
        std::erase_if(unresolved, [&](const std::pair<int, int>& pr) {
            return h.at(pr.first, best) != h.at(pr.second, best);
        });
    }
    if (members.empty()) members.push_back(0);
    return members;
}

// Upgrade loop shared by upgrade_to_construction_set and greedy link mode.
// members must already resolve the graph.
std::vector<int> upgrade_members(const Graph& g, const DistanceMatrix& h,
                                 std::vector<int> members, int threads) {
    const int n = g.node_count();
    std::vector<char> is_member(n, 0);
    for (int v : members) is_member[v] = 1;
    for (;;) {
        auto columns = detail::landmark_columns(h, members);
        auto report = detail::ambiguity_report_core(g, members, columns, threads);
        if (report.is_empty()) break;
        std::vector<int> score(n, 0);
        for (const auto& e : report.invisible_present_edges) {
            ++score[e.first];
            ++score[e.second];
        }
        for (const auto& e : report.ambiguous_absent_edges) {
            ++score[e.first];
            ++score[e.second];
        }
        int best = -1;
        int best_score = 0;
        for (int v = 0; v < n; ++v) {
            if (is_member[v]) continue;
            if (score[v] > best_score) {
                best_score = score[v];
                best = v;
            }
        }
        if (best < 0) throw Error("no candidate landmark resolves the ambiguity report");
        is_member[best] = 1;
        members.push_back(best);
    }
    return members;
}

// Bitset over node pairs (u < v), one row per potential landmark: which pairs
// the landmark strongly resolves.
struct PairCoverage {
    int pair_count = 0;
    int words = 0;
    std::vector<std::uint64_t> full_mask;
    std::vector<std::vector<std::uint64_t>> cover;
};

PairCoverage strong_coverage(const DistanceMatrix& h) {
    const int n = h.order();
    PairCoverage pc;
    pc.pair_count = n * (n - 1) / 2;
    pc.words = std::max(1, (pc.pair_count + 63) / 64);
    pc.cover.assign(n, std::vector<std::uint64_t>(pc.words, 0));
    int idx = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++idx) {
            for (int w = 0; w < n; ++w) {
                bool resolves = h.at(v, w) == h.at(v, u) + h.at(u, w) ||
                                h.at(u, w) == h.at(u, v) + h.at(v, w);
                if (resolves)
                    pc.cover[w][idx / 64] |= std::uint64_t{1} << (idx % 64);
            }
        }
    }
    pc.full_mask.assign(pc.words, 0);
    for (int i = 0; i < pc.pair_count; ++i)
        pc.full_mask[i / 64] |= std::uint64_t{1} << (i % 64);
    return pc;
}

bool covers_all_pairs(const PairCoverage& pc, const std::vector<int>& members) {
    for (int w = 0; w < pc.words; ++w) {
        std::uint64_t acc = 0;
        for (int a : members) acc |= pc.cover[a][w];
        if (acc != pc.full_mask[w]) return false;
    }
    return true;
}

// Greedy set cover over the strong-resolution pair table, smallest index on
// ties. Each pair is covered by its own endpoints, so progress is guaranteed.
std::vector<int> greedy_strong_members(const PairCoverage& pc, int n) {
    std::vector<std::uint64_t> covered(pc.words, 0);
    std::vector<int> members;
    std::vector<char> chosen(n, 0);
    auto done = [&] {
        for (int w = 0; w < pc.words; ++w)
            if (covered[w] != pc.full_mask[w]) return false;
        return true;
    };
    while (!done()) {
        int best = -1;
        int best_gain = 0;
        for (int c = 0; c < n; ++c) {
            if (chosen[c]) continue;
            int gain = 0;
            for (int w = 0; w < pc.words; ++w)
                gain += std::popcount(pc.cover[c][w] & ~covered[w]);
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        if (best < 0) throw Error("greedy strong-resolution search stalled");
        chosen[best] = 1;
        members.push_back(best);
        for (int w = 0; w < pc.words; ++w) covered[w] |= pc.cover[best][w];
    }
    if (members.empty()) members.push_back(0);
    return members;
}

} // namespace

ConstructionCheck is_construction_set(const Graph& g, const LandmarkSet& m,
                                      int threads) {
    threads = detail::clamp_threads(threads);
    auto h = all_pairs_distances(g, threads);
    ConstructionCheck check;
    check.resolution = is_resolution_set(h, m);
    auto columns = detail::landmark_columns(h, m.members());
    check.report = detail::ambiguity_report_core(g, m.members(), columns, threads);
    check.is_construction = check.resolution.is_resolution && check.report.is_empty();
    return check;
}

DimensionResult metric_dimension(const Graph& g, const SolveOptions& options) {
    const int threads = detail::clamp_threads(options.threads);
    require_connected(g);
    if (options.greedy) {
        auto h = all_pairs_distances(g, threads);
        auto members = greedy_resolution_members(h);
        return {DimensionKind::metric, static_cast<int>(members.size()),
                member_labels(g, members), SolveMethod::greedy_upper_bound};
    }
    require_exact_capacity(g, resolve_exact_limit(options, kDefaultExactLimit),
                           "metric dimension");
    auto h = all_pairs_distances(g, threads);
    return exact_search(g, DimensionKind::metric, threads,
                        [&](const std::vector<int>& members) {
                            return resolves_all_pairs(h, members);
                        });
}

DimensionResult link_dimension(const Graph& g, const SolveOptions& options) {
    const int threads = detail::clamp_threads(options.threads);
    require_connected(g);
    if (options.greedy) {
        auto h = all_pairs_distances(g, threads);
        auto members = upgrade_members(g, h, greedy_resolution_members(h), threads);
        return {DimensionKind::link, static_cast<int>(members.size()),
                member_labels(g, members), SolveMethod::greedy_upper_bound};
    }
    require_exact_capacity(g, resolve_exact_limit(options, kDefaultExactLimit),
                           "link dimension");
    auto h = all_pairs_distances(g, threads);
    return exact_search(g, DimensionKind::link, threads,
                        [&](const std::vector<int>& members) {
                            return passes_construction(g, h, members);
                        });
}

DimensionResult strong_metric_dimension(const Graph& g, const SolveOptions& options) {
    const int threads = detail::clamp_threads(options.threads);
    require_connected(g);
    if (options.greedy) {
        auto h = all_pairs_distances(g, threads);
        auto pc = strong_coverage(h);
        auto members = greedy_strong_members(pc, g.node_count());
        return {DimensionKind::strong, static_cast<int>(members.size()),
                member_labels(g, members), SolveMethod::greedy_upper_bound};
    }
    require_exact_capacity(g, resolve_exact_limit(options, kDefaultStrongExactLimit),
                           "strong dimension");
    auto h = all_pairs_distances(g, threads);
    auto pc = strong_coverage(h);
    return exact_search(g, DimensionKind::strong, threads,
                        [&](const std::vector<int>& members) {
                            return covers_all_pairs(pc, members);
                        });
}

LandmarkSet upgrade_to_construction_set(const Graph& g, const LandmarkSet& r,
                                        int threads) {
    threads = detail::clamp_threads(threads);
    auto h = all_pairs_distances(g, threads);
    auto res = is_resolution_set(h, r);
    if (!res.is_resolution) {
        const auto& [a, b] = *res.collision;
        throw InfeasibleError("landmarks do not form a resolution set: nodes '" +
                              g.label(a) + "' and '" + g.label(b) +
                              "' share identical coordinates");
    }
    auto members = upgrade_members(g, h, r.members(), threads);
    return LandmarkSet::from_indices(g, members);
}

bool strongly_resolves(const DistanceMatrix& h, int w, int u, int v) {
    if (u < 0 || u >= h.order() || v < 0 || v >= h.order() || w < 0 || w >= h.order())
        throw InputError("node index out of range");
    if (u == v) throw InputError("pair must consist of two distinct nodes");
    return h.at(v, w) == h.at(v, u) + h.at(u, w) ||
           h.at(u, w) == h.at(u, v) + h.at(v, w);
}

bool is_strong_resolving_set(const DistanceMatrix& h, const LandmarkSet& m) {
    const int n = h.order();
    for (int k = 0; k < m.size(); ++k) {
        int v = m.member(k);
        if (v < 0 || v >= n || h.node_labels()[v] != m.labels()[k])
            throw InputError("landmark set does not match the distance matrix");
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool resolved = false;
            for (int a : m.members()) {
                if (strongly_resolves(h, a, u, v)) {
                    resolved = true;
                    break;
                }
            }
            if (!resolved) return false;
        }
    }
    return true;
}

} // namespace linkdim
