#include "linkdim/bounds.hpp"

#include <algorithm>

#include "linkdim/errors.hpp"

namespace linkdim {

namespace {

// Everything at or above this value is treated as "effectively infinite";
// inputs are capped far below it, so a saturated side always wins a >=.
constexpr std::int64_t kSaturated = std::int64_t{1} << 62;
constexpr std::int64_t kMaxParam = 1'000'000'000;

std::int64_t mul_sat(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kSaturated / b) return kSaturated;
    return a * b;
}

std::int64_t add_sat(std::int64_t a, std::int64_t b) {
    if (a >= kSaturated - b) return kSaturated;
    return a + b;
}

std::int64_t pow_sat(std::int64_t base, std::int64_t exp) {
    if (base == 1 || exp == 0) return 1;
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        result = mul_sat(result, base);
        if (result >= kSaturated) return kSaturated;
    }
    return result;
}

void require_at_least(std::int64_t value, std::int64_t minimum, const char* name) {
    if (value < minimum)
        throw InputError(std::string(name) + " must be at least " +
                         std::to_string(minimum));
}

} // namespace

bool metric_dimension_bound(std::int64_t n, std::int64_t d, std::int64_t m) {
    require_at_least(n, 2, "n");
    require_at_least(d, 1, "d");
    require_at_least(m, 1, "m");
    return add_sat(m, pow_sat(d, m)) >= n;
}

bool link_count_bound(std::int64_t n, std::int64_t l, std::int64_t m) {
    require_at_least(m, 1, "m");
    require_at_least(l, 1, "l");
    if (n < m) throw InputError("n must be at least m");
    std::int64_t adjacent_combos = pow_sat(3, m) - 1;
    std::int64_t lhs = add_sat(mul_sat(adjacent_combos, n - m),
                               mul_sat(pow_sat(3, m - 1), m));
    return lhs >= mul_sat(2, l);
}

bool degree_link_bound(std::int64_t d, std::int64_t l, std::int64_t ndmax,
                       std::int64_t m) {
    require_at_least(d, 1, "d");
    require_at_least(l, 1, "l");
    require_at_least(ndmax, 1, "ndmax");
    require_at_least(m, 1, "m");
    // (m + d^m) * ndmax / 2 >= l, compared without the halving to stay exact.
    return mul_sat(add_sat(m, pow_sat(d, m)), ndmax) >= mul_sat(2, l);
}

bool landmark_degree_bound(std::int64_t ndmax, std::int64_t m) {
    require_at_least(ndmax, 1, "ndmax");
    require_at_least(m, 1, "m");
    return pow_sat(3, m - 1) >= ndmax;
}

namespace {

int minimal_m_metric(std::int64_t n, std::int64_t d) {
    if (d == 1) return static_cast<int>(std::max<std::int64_t>(1, n - 1));
    for (int m = 1; m <= 128; ++m)
        if (metric_dimension_bound(n, d, m)) return m;
    throw Error("metric bound search failed to saturate");
}

std::optional<int> minimal_m_link_count(std::int64_t n, std::int64_t l) {
    const int cap = static_cast<int>(std::min<std::int64_t>(n, 128));
    for (int m = 1; m <= cap; ++m)
        if (link_count_bound(n, l, m)) return m;
    return std::nullopt;
}

int minimal_m_degree_link(std::int64_t d, std::int64_t l, std::int64_t ndmax) {
    if (d == 1) {
        std::int64_t m = (2 * l + ndmax - 1) / ndmax - 1;
        return static_cast<int>(std::max<std::int64_t>(1, m));
    }
    for (int m = 1; m <= 128; ++m)
        if (degree_link_bound(d, l, ndmax, m)) return m;
    throw Error("degree bound search failed to saturate");
}

int minimal_m_landmark_degree(std::int64_t ndmax) {
    for (int m = 1; m <= 128; ++m)
        if (landmark_degree_bound(ndmax, m)) return m;
    throw Error("landmark degree bound search failed to saturate");
}

BoundsReport assemble(std::int64_t n, std::int64_t l, std::int64_t d,
                      std::int64_t ndmax) {
    BoundsReport report;
    report.n = n;
    report.l = l;
    report.d = d;
    report.ndmax = ndmax;
    report.entries.push_back({"metric", minimal_m_metric(n, d)});
    report.entries.push_back({"link_count", minimal_m_link_count(n, l)});
    report.entries.push_back({"degree_link", minimal_m_degree_link(d, l, ndmax)});
    report.entries.push_back({"landmark_degree", minimal_m_landmark_degree(ndmax)});
    // The landmark degree cap restricts landmark nodes only; a max-degree
    // node outside the landmark set escapes it (a path realizes m = 1 with
    // ndmax = 2), so that entry stays out of the combined floor.
    for (const auto& entry : report.entries) {
        if (entry.name == "landmark_degree" || !entry.minimal_m) continue;
        report.gamma_lower_bound = std::max(report.gamma_lower_bound, *entry.minimal_m);
    }
    return report;
}

void require_param_range(std::int64_t value, std::int64_t minimum, const char* name) {
    require_at_least(value, minimum, name);
    if (value > kMaxParam)
        throw InputError(std::string(name) + " exceeds the supported limit of " +
                         std::to_string(kMaxParam));
}

} // namespace

BoundsReport bounds_report(const Graph& g) {
    auto h = all_pairs_distances(g);
    return assemble(g.node_count(), g.edge_count(), h.diameter(), g.max_degree());
}

BoundsReport bounds_report_params(std::int64_t n, std::int64_t l, std::int64_t d,
                                  std::int64_t ndmax) {
    require_param_range(n, 2, "n");
    require_param_range(l, 1, "l");
    require_param_range(d, 1, "d");
    require_param_range(ndmax, 1, "ndmax");
    return assemble(n, l, d, ndmax);
}

} // namespace linkdim
