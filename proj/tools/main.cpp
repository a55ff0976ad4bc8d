#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "linkdim/bounds.hpp"
#include "linkdim/coords.hpp"
#include "linkdim/dimensions.hpp"
#include "linkdim/errors.hpp"
#include "linkdim/graph.hpp"
#include "linkdim/reconstruct.hpp"

namespace {

using nlohmann::json;

// Usage mistakes that CLI11 cannot express declaratively (conditionally
// required flags); mapped to exit code 1 like any other usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw linkdim::InputError("cannot open file '" + path + "'");
    buffer << file.rdbuf();
    return buffer.str();
}

linkdim::Graph load_graph(const std::string& path) {
    return linkdim::parse_graph(read_input(path));
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> labels;
    std::size_t pos = 0;
    for (;;) {
        auto comma = csv.find(',', pos);
        if (comma == std::string::npos) {
            labels.push_back(csv.substr(pos));
            break;
        }
        labels.push_back(csv.substr(pos, comma - pos));
        pos = comma + 1;
    }
    for (const auto& label : labels)
        if (label.empty())
            throw linkdim::InputError("empty landmark label in list '" + csv + "'");
    return labels;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out;
}

std::string pair_text(const linkdim::Graph& g, const linkdim::Edge& e) {
    return g.label(e.first) + "," + g.label(e.second);
}

json edges_json(const linkdim::Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back(json::array({g.label(e.first), g.label(e.second)}));
    return edges;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

struct DimsFlags {
    std::string path;
    int exact_limit = 0;
    bool has_exact_limit = false;
    bool skip_strong = false;
    bool greedy = false;
};

void print_dim_text(const std::string& key, const linkdim::DimensionResult& r) {
    std::cout << key << ' ' << r.value << '\n';
    std::cout << key << "_witness " << join(r.witness) << '\n';
    std::cout << key << "_method " << linkdim::to_string(r.method) << '\n';
}

json dim_json(const linkdim::DimensionResult& r) {
    return json{{"value", r.value},
                {"witness", r.witness},
                {"method", linkdim::to_string(r.method)}};
}

int run_dims(const DimsFlags& flags, int threads, bool as_json) {
    auto g = load_graph(flags.path);
    linkdim::SolveOptions options;
    if (flags.has_exact_limit) options.exact_limit = flags.exact_limit;
    options.greedy = flags.greedy;
    options.threads = threads;
    auto beta = linkdim::metric_dimension(g, options);
    auto gamma = linkdim::link_dimension(g, options);
    std::optional<linkdim::DimensionResult> sdim;
    if (!flags.skip_strong) sdim = linkdim::strong_metric_dimension(g, options);
    if (as_json) {
        json doc{{"beta", dim_json(beta)}, {"gamma", dim_json(gamma)}};
        if (sdim) doc["sdim"] = dim_json(*sdim);
        emit(doc);
    } else {
        print_dim_text("beta", beta);
        print_dim_text("gamma", gamma);
        if (sdim) print_dim_text("sdim", *sdim);
    }
    return 0;
}

int run_check_set(const std::string& path, const std::string& landmarks, int threads,
                  bool as_json) {
    auto g = load_graph(path);
    auto m = linkdim::LandmarkSet::from_labels(g, split_labels(landmarks));
    auto check = linkdim::is_construction_set(g, m, threads);
    if (as_json) {
        json doc{{"resolution", check.resolution.is_resolution},
                 {"construction", check.is_construction},
                 {"invisible_edges", json::array()},
                 {"ambiguous_nonedges", json::array()}};
        if (check.resolution.collision) {
            const auto& c = *check.resolution.collision;
            doc["collision"] = json::array({g.label(c.first), g.label(c.second)});
        }
        for (const auto& e : check.report.invisible_present_edges)
            doc["invisible_edges"].push_back(
                json::array({g.label(e.first), g.label(e.second)}));
        for (const auto& e : check.report.ambiguous_absent_edges)
            doc["ambiguous_nonedges"].push_back(
                json::array({g.label(e.first), g.label(e.second)}));
        emit(doc);
    } else {
        std::cout << "resolution " << (check.resolution.is_resolution ? "true" : "false")
                  << '\n';
        std::cout << "construction " << (check.is_construction ? "true" : "false")
                  << '\n';
        if (check.resolution.collision)
            std::cout << "collision " << pair_text(g, *check.resolution.collision)
                      << '\n';
        for (const auto& e : check.report.invisible_present_edges)
            std::cout << "invisible_edge " << pair_text(g, e) << '\n';
        for (const auto& e : check.report.ambiguous_absent_edges)
            std::cout << "ambiguous_nonedge " << pair_text(g, e) << '\n';
    }
    return 0;
}

int run_upgrade(const std::string& path, const std::string& landmarks, int threads,
                bool as_json) {
    auto g = load_graph(path);
    auto r = linkdim::LandmarkSet::from_labels(g, split_labels(landmarks));
    auto upgraded = linkdim::upgrade_to_construction_set(g, r, threads);
    if (as_json)
        emit(json{{"landmarks", upgraded.labels()}});
    else
        std::cout << join(upgraded.labels()) << '\n';
    return 0;
}

int run_coords(const std::string& path, const std::string& landmarks, int threads,
               bool as_json) {
    auto g = load_graph(path);
    auto m = linkdim::LandmarkSet::from_labels(g, split_labels(landmarks));
    auto h = linkdim::all_pairs_distances(g, threads);
    auto p = linkdim::coordinates(h, m);
    if (as_json) {
        json matrix = json::array();
        for (int i = 0; i < p.node_count(); ++i) {
            json row = json::array();
            for (int k = 0; k < p.landmark_count(); ++k) row.push_back(p.at(i, k));
            matrix.push_back(row);
        }
        emit(json{{"nodes", p.node_labels()},
                  {"landmarks", p.landmark_labels()},
                  {"matrix", matrix}});
    } else {
        std::cout << p.to_csv();
    }
    return 0;
}

int run_reconstruct(const std::string& path, bool enumerate, int limit, bool as_json) {
    auto p = linkdim::DistanceVectorMatrix::from_csv(read_input(path));
    if (!enumerate) {
        auto g = linkdim::reconstruct(p);
        if (as_json)
            emit(json{{"nodes", g.labels()}, {"edges", edges_json(g)}});
        else
            std::cout << linkdim::to_edge_list(g);
        return 0;
    }
    auto graphs = linkdim::enumerate_consistent_graphs(p, limit);
    if (as_json) {
        json list = json::array();
        for (const auto& g : graphs) list.push_back(edges_json(g));
        emit(json{{"count", graphs.size()}, {"graphs", list}});
    } else {
        std::cout << "candidates " << graphs.size() << '\n';
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            std::cout << "candidate " << i + 1 << '\n';
            std::cout << linkdim::to_edge_list(graphs[i]);
        }
    }
    return 0;
}

struct BoundsFlags {
    std::string path;
    std::int64_t n = 0, l = 0, d = 0, ndmax = 0;
    bool has_n = false, has_l = false, has_d = false, has_ndmax = false;
};

int run_bounds(const BoundsFlags& flags, bool as_json) {
    const bool any_scalar = flags.has_n || flags.has_l || flags.has_d || flags.has_ndmax;
    linkdim::BoundsReport report;
    if (!flags.path.empty()) {
        if (any_scalar)
            throw UsageError("give either a graph file or the four scalars, not both");
        report = linkdim::bounds_report(load_graph(flags.path));
    } else {
        if (!(flags.has_n && flags.has_l && flags.has_d && flags.has_ndmax))
            throw UsageError("scalar mode requires --n, --l, --d, and --ndmax");
        report = linkdim::bounds_report_params(flags.n, flags.l, flags.d, flags.ndmax);
    }
    if (as_json) {
        json bounds = json::array();
        for (const auto& entry : report.entries) {
            json e{{"name", entry.name}};
            if (entry.minimal_m)
                e["minimal_m"] = *entry.minimal_m;
            else
                e["minimal_m"] = nullptr;
            bounds.push_back(e);
        }
        emit(json{{"n", report.n},
                  {"l", report.l},
                  {"d", report.d},
                  {"ndmax", report.ndmax},
                  {"bounds", bounds},
                  {"gamma_lower_bound", report.gamma_lower_bound}});
    } else {
        std::cout << "n " << report.n << '\n';
        std::cout << "l " << report.l << '\n';
        std::cout << "d " << report.d << '\n';
        std::cout << "ndmax " << report.ndmax << '\n';
        for (const auto& entry : report.entries) {
            std::cout << "bound " << entry.name << " minimal_m ";
            if (entry.minimal_m)
                std::cout << *entry.minimal_m;
            else
                std::cout << "none";
            std::cout << '\n';
        }
        std::cout << "gamma_lower_bound " << report.gamma_lower_bound << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"landmark-based graph representation toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    int threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_flag("--json", as_json, "emit JSON instead of line-oriented text");
    app.add_option("--threads", threads, "worker threads for solvers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* gen = app.add_subcommand("gen", "generate a family graph as an edge list");
    gen->fallthrough();
    std::string gen_family;
    int gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family, "path, cycle, complete, or er")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "er", "erdos-renyi"}));
    gen->add_option("--n", gen_n, "node count")->required();
    auto* gen_p_opt = gen->add_option("--p", gen_p, "edge probability (er only)");
    gen->add_option("--seed", gen_seed, "random seed (er only)")
        ->capture_default_str();

    auto* dims = app.add_subcommand("dims", "compute metric, link, and strong dimensions");
    dims->fallthrough();
    DimsFlags dims_flags;
    dims->add_option("graph", dims_flags.path, "edge-list file, or - for stdin")
        ->required();
    auto* dims_limit_opt =
        dims->add_option("--exact-limit", dims_flags.exact_limit,
                         "node-count cap for exhaustive search")
            ->check(CLI::PositiveNumber);
    dims->add_flag("--skip-strong", dims_flags.skip_strong,
                   "skip the strong dimension");
    dims->add_flag("--greedy", dims_flags.greedy, "greedy upper bounds instead of exact");

    auto* check = app.add_subcommand("check-set",
                                     "test a landmark set for resolution/construction");
    check->fallthrough();
    std::string check_path, check_landmarks;
    check->add_option("graph", check_path, "edge-list file, or - for stdin")->required();
    check->add_option("--landmarks", check_landmarks, "comma-separated node labels")
        ->required();

    auto* upgrade = app.add_subcommand("upgrade",
                                       "grow a resolution set into a construction set");
    upgrade->fallthrough();
    std::string upgrade_path, upgrade_landmarks;
    upgrade->add_option("graph", upgrade_path, "edge-list file, or - for stdin")
        ->required();
    upgrade->add_option("--landmarks", upgrade_landmarks, "comma-separated node labels")
        ->required();

    auto* coords = app.add_subcommand("coords", "distance-vector coordinates as CSV");
    coords->fallthrough();
    std::string coords_path, coords_landmarks;
    coords->add_option("graph", coords_path, "edge-list file, or - for stdin")
        ->required();
    coords->add_option("--landmarks", coords_landmarks, "comma-separated node labels")
        ->required();

    auto* rec = app.add_subcommand("reconstruct", "rebuild a graph from coordinates");
    rec->fallthrough();
    std::string rec_path;
    bool rec_enumerate = false;
    int rec_limit = linkdim::kDefaultEnumerationLimit;
    rec->add_option("coords", rec_path, "coordinate CSV file, or - for stdin")
        ->required();
    rec->add_flag("--enumerate", rec_enumerate, "list all consistent graphs");
    rec->add_option("--limit", rec_limit, "max graphs to enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* bounds = app.add_subcommand("bounds", "landmark-count bounds report");
    bounds->fallthrough();
    BoundsFlags bounds_flags;
    bounds->add_option("graph", bounds_flags.path, "edge-list file, or - for stdin");
    auto* bn = bounds->add_option("--n", bounds_flags.n, "node count");
    auto* bl = bounds->add_option("--l", bounds_flags.l, "edge count");
    auto* bd = bounds->add_option("--d", bounds_flags.d, "diameter");
    auto* bx = bounds->add_option("--ndmax", bounds_flags.ndmax, "max degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    dims_flags.has_exact_limit = dims_limit_opt->count() > 0;
    bounds_flags.has_n = bn->count() > 0;
    bounds_flags.has_l = bl->count() > 0;
    bounds_flags.has_d = bd->count() > 0;
    bounds_flags.has_ndmax = bx->count() > 0;

    try {
        if (gen->parsed()) {
            auto family = linkdim::parse_family(gen_family);
            if (!family) throw UsageError("unknown family '" + gen_family + "'");
            if (*family == linkdim::GraphFamily::erdos_renyi && gen_p_opt->count() == 0)
                throw UsageError("--p is required for the er family");
            std::optional<double> p;
            if (gen_p_opt->count() > 0) p = gen_p;
            auto g = linkdim::generate(*family, gen_n, p, gen_seed);
            if (as_json)
                emit(json{{"nodes", g.labels()}, {"edges", edges_json(g)}});
            else
                std::cout << linkdim::to_edge_list(g);
            return 0;
        }
        if (dims->parsed()) return run_dims(dims_flags, threads, as_json);
        if (check->parsed())
            return run_check_set(check_path, check_landmarks, threads, as_json);
        if (upgrade->parsed())
            return run_upgrade(upgrade_path, upgrade_landmarks, threads, as_json);
        if (coords->parsed())
            return run_coords(coords_path, coords_landmarks, threads, as_json);
        if (rec->parsed()) return run_reconstruct(rec_path, rec_enumerate, rec_limit, as_json);
        if (bounds->parsed()) return run_bounds(bounds_flags, as_json);
        std::cerr << "error: no command selected\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const linkdim::CapabilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const linkdim::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const linkdim::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
