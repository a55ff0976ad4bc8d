#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "linkdim/coords.hpp"
#include "linkdim/graph.hpp"
#include "subprocess.hpp"

using namespace linkdim;
using nlohmann::json;

namespace {

std::filesystem::path graph_file(const std::string& hint, const Graph& g) {
    auto path = cli::temp_file(hint);
    cli::write_file(path, to_edge_list(g));
    return path;
}

// Walk order 1..n, so parsed node order matches the label order the
// golden outputs below are written in.
std::filesystem::path natural_cycle_file(const std::string& hint, int n) {
    std::string text;
    for (int i = 1; i < n; ++i)
        text += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    text += "1 " + std::to_string(n) + "\n";
    auto path = cli::temp_file(hint);
    cli::write_file(path, text);
    return path;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

bool has_line(const std::string& text, const std::string& line) {
    return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

} // namespace

TEST_CASE("gen emits family edge lists") {
    auto r = cli::run_cli({"gen", "--family", "cycle", "--n", "7"});
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 7);
    CHECK(has_line(r.out, "1 7"));
    CHECK(r.out == to_edge_list(generate(GraphFamily::cycle, 7)));
}

TEST_CASE("gen er output is seed-deterministic") {
    std::vector<std::string> args{"gen", "--family", "er",     "--n",
                                  "10",  "--p",      "0.3",    "--seed",
                                  "42"};
    auto a = cli::run_cli(args);
    auto b = cli::run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("gen usage errors exit 1") {
    auto no_p = cli::run_cli({"gen", "--family", "er", "--n", "10"});
    CHECK(no_p.exit_code == 1);
    CHECK(no_p.err.find("--p") != std::string::npos);

    auto bad_family = cli::run_cli({"gen", "--family", "grid", "--n", "5"});
    CHECK(bad_family.exit_code == 1);

    auto no_n = cli::run_cli({"gen", "--family", "cycle"});
    CHECK(no_n.exit_code == 1);
}

TEST_CASE("gen rejects out-of-range family parameters with exit 2") {
    auto r = cli::run_cli({"gen", "--family", "path", "--n", "1"});
    CHECK(r.exit_code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("dims reports all three dimensions") {
    auto c7 = graph_file("c7.txt", generate(GraphFamily::cycle, 7));
    auto r = cli::run_cli({"dims", c7.string()});
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "beta 2"));
    CHECK(has_line(r.out, "gamma 2"));
    CHECK(has_line(r.out, "gamma_witness 1,3"));
    CHECK(has_line(r.out, "beta_method exact"));
    CHECK(r.out.find("sdim ") != std::string::npos);

    auto skipped = cli::run_cli({"dims", c7.string(), "--skip-strong"});
    CHECK(skipped.exit_code == 0);
    CHECK(skipped.out.find("sdim") == std::string::npos);

    auto k4 = graph_file("k4.txt", generate(GraphFamily::complete, 4));
    auto rk = cli::run_cli({"dims", k4.string()});
    CHECK(has_line(rk.out, "beta 3"));
    CHECK(has_line(rk.out, "gamma 3"));
    CHECK(has_line(rk.out, "sdim 3"));

    auto p5 = graph_file("p5.txt", generate(GraphFamily::path, 5));
    auto rp = cli::run_cli({"dims", p5.string()});
    CHECK(has_line(rp.out, "beta 1"));
    CHECK(has_line(rp.out, "gamma 1"));
    CHECK(has_line(rp.out, "sdim 1"));
}

TEST_CASE("dims reads stdin and emits json") {
    auto edge_list = to_edge_list(generate(GraphFamily::cycle, 7));
    auto r = cli::run_cli({"--json", "dims", "-", "--skip-strong"}, edge_list);
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["beta"]["value"] == 2);
    CHECK(doc["gamma"]["value"] == 2);
    CHECK(doc["gamma"]["witness"] == json::array({"1", "3"}));
    CHECK(doc["beta"]["method"] == "exact");
    CHECK_FALSE(doc.contains("sdim"));
}

TEST_CASE("dims failure exits follow the contract") {
    auto missing = cli::run_cli({"dims", "/nonexistent/graph.txt"});
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    auto disconnected = cli::temp_file("disc.txt");
    cli::write_file(disconnected, "1 2\n3 4\n");
    auto r = cli::run_cli({"dims", disconnected.string()});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("not connected") != std::string::npos);

    auto big = graph_file("p20.txt", generate(GraphFamily::path, 20));
    auto capped = cli::run_cli({"dims", big.string()});
    CHECK(capped.exit_code == 1);
    CHECK(capped.err.find("capped") != std::string::npos);
    auto widened = cli::run_cli({"dims", big.string(), "--exact-limit", "20",
                                 "--skip-strong"});
    CHECK(widened.exit_code == 0);
    CHECK(has_line(widened.out, "gamma 1"));
}

TEST_CASE("check-set prints verdicts and evidence") {
    auto c5 = natural_cycle_file("c5.txt", 5);

    auto gap = cli::run_cli({"check-set", c5.string(), "--landmarks", "1,2"});
    CHECK(gap.exit_code == 0);
    CHECK(has_line(gap.out, "resolution true"));
    CHECK(has_line(gap.out, "construction false"));
    CHECK(has_line(gap.out, "ambiguous_nonedge 3,5"));

    auto full = cli::run_cli({"check-set", c5.string(), "--landmarks", "1,2,3"});
    CHECK(full.exit_code == 0);
    CHECK(has_line(full.out, "resolution true"));
    CHECK(has_line(full.out, "construction true"));
    CHECK(full.out.find("invisible_edge") == std::string::npos);
    CHECK(full.out.find("ambiguous_nonedge") == std::string::npos);

    auto thin = cli::run_cli({"check-set", c5.string(), "--landmarks", "1"});
    CHECK(thin.exit_code == 0);
    CHECK(has_line(thin.out, "resolution false"));
    CHECK(has_line(thin.out, "collision 2,5"));
}

TEST_CASE("check-set json shape") {
    auto c5 = natural_cycle_file("c5j.txt", 5);
    auto r = cli::run_cli({"--json", "check-set", c5.string(), "--landmarks", "1"});
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["resolution"] == false);
    CHECK(doc["construction"] == false);
    CHECK(doc["collision"] == json::array({"2", "5"}));
    CHECK(doc["invisible_edges"].size() == 1);
    CHECK(doc["ambiguous_nonedges"].size() == 2);
}

TEST_CASE("upgrade grows the landmark list or refuses") {
    auto c5 = natural_cycle_file("c5u.txt", 5);
    auto grown = cli::run_cli({"upgrade", c5.string(), "--landmarks", "1,2"});
    CHECK(grown.exit_code == 0);
    CHECK(grown.out == "1,2,3\n");

    auto c7 = natural_cycle_file("c7u.txt", 7);
    auto kept = cli::run_cli({"upgrade", c7.string(), "--landmarks", "1,3"});
    CHECK(kept.exit_code == 0);
    CHECK(kept.out == "1,3\n");

    auto refused = cli::run_cli({"upgrade", c5.string(), "--landmarks", "1"});
    CHECK(refused.exit_code == 3);
    CHECK(refused.err.find("'2' and '5'") != std::string::npos);
}

TEST_CASE("coords emits the documented CSV") {
    auto g = generate(GraphFamily::cycle, 5);
    auto c5 = natural_cycle_file("c5c.txt", 5);
    auto r = cli::run_cli({"coords", c5.string(), "--landmarks", "1,2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "node,1,2\n1,0,1\n2,1,0\n3,2,1\n4,2,2\n5,1,2\n");

    auto h = all_pairs_distances(g);
    auto full = coordinates(h, LandmarkSet::from_labels(g, g.labels()));
    auto all = cli::run_cli({"coords", c5.string(), "--landmarks", "1,2,3,4,5"});
    CHECK(all.out == full.to_csv());

    auto unknown = cli::run_cli({"coords", c5.string(), "--landmarks", "9"});
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("reconstruct rebuilds, enumerates, and refuses per contract") {
    auto g = generate(GraphFamily::cycle, 5);
    auto h = all_pairs_distances(g);
    auto unique_csv = cli::temp_file("c5_full.csv");
    cli::write_file(unique_csv,
                    coordinates(h, LandmarkSet::from_labels(g, {"1", "2", "3"})).to_csv());
    auto r = cli::run_cli({"reconstruct", unique_csv.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out == to_edge_list(g));

    auto two_csv = cli::temp_file("c5_two.csv");
    cli::write_file(two_csv,
                    coordinates(h, LandmarkSet::from_labels(g, {"1", "2"})).to_csv());
    auto refused = cli::run_cli({"reconstruct", two_csv.string()});
    CHECK(refused.exit_code == 3);
    CHECK(refused.err.find("more than one graph") != std::string::npos);

    auto listed = cli::run_cli({"reconstruct", two_csv.string(), "--enumerate"});
    CHECK(listed.exit_code == 0);
    CHECK(has_line(listed.out, "candidates 2"));
    CHECK(has_line(listed.out, "candidate 1"));
    CHECK(has_line(listed.out, "candidate 2"));

    auto capped = cli::run_cli({"reconstruct", two_csv.string(), "--enumerate",
                                "--limit", "1"});
    CHECK(has_line(capped.out, "candidates 1"));

    auto zero = cli::run_cli({"reconstruct", two_csv.string(), "--enumerate",
                              "--limit", "0"});
    CHECK(zero.exit_code == 1);

    auto bad_csv = cli::temp_file("bad.csv");
    cli::write_file(bad_csv, "node,1\nx,borked\n");
    CHECK(cli::run_cli({"reconstruct", bad_csv.string()}).exit_code == 2);
}

TEST_CASE("reconstruct json lists nodes and edges") {
    auto g = generate(GraphFamily::path, 4);
    auto h = all_pairs_distances(g);
    auto csv = cli::temp_file("p4.csv");
    cli::write_file(csv, coordinates(h, LandmarkSet::from_labels(g, {"1"})).to_csv());
    auto r = cli::run_cli({"--json", "reconstruct", csv.string()});
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["nodes"] == json::array({"1", "2", "3", "4"}));
    CHECK(doc["edges"].size() == 3);
}

TEST_CASE("bounds reads a graph or the four scalars") {
    auto c5 = graph_file("c5b.txt", generate(GraphFamily::cycle, 5));
    auto from_file = cli::run_cli({"bounds", c5.string()});
    CHECK(from_file.exit_code == 0);
    CHECK(has_line(from_file.out, "gamma_lower_bound 2"));

    auto scalars = cli::run_cli({"bounds", "--n", "5", "--l", "10", "--d", "1",
                                 "--ndmax", "4"});
    CHECK(scalars.exit_code == 0);
    CHECK(has_line(scalars.out, "bound landmark_degree minimal_m 3"));

    auto both = cli::run_cli({"bounds", c5.string(), "--n", "5", "--l", "10",
                              "--d", "1", "--ndmax", "4"});
    CHECK(both.exit_code == 1);

    auto partial = cli::run_cli({"bounds", "--n", "5", "--l", "10"});
    CHECK(partial.exit_code == 1);
    CHECK(partial.err.find("requires") != std::string::npos);

    auto as_json = cli::run_cli({"--json", "bounds", c5.string()});
    auto doc = json::parse(as_json.out);
    CHECK(doc["gamma_lower_bound"] == 2);
    CHECK(doc["bounds"].size() == 4);
}

TEST_CASE("commands compose through pipes") {
    auto bin = cli::shell_quote(cli::binary_path());
    auto gen = cli::run_command(bin + " gen --family cycle --n 6");
    REQUIRE(gen.exit_code == 0);
    auto piped = cli::run_command(bin + " gen --family cycle --n 6 | " + bin +
                                  " coords - --landmarks 1,2,3 | " + bin +
                                  " reconstruct -");
    CHECK(piped.exit_code == 0);
    CHECK(piped.out == gen.out);

    auto dims = cli::run_command(bin + " gen --family cycle --n 7 | " + bin +
                                 " dims - --skip-strong");
    CHECK(dims.exit_code == 0);
    CHECK(dims.out.find("gamma 2") != std::string::npos);
}

TEST_CASE("thread count does not change output") {
    auto c7 = graph_file("c7t.txt", generate(GraphFamily::cycle, 7));
    auto one = cli::run_cli({"--threads", "1", "dims", c7.string()});
    auto four = cli::run_cli({"--threads", "4", "dims", c7.string()});
    CHECK(one.exit_code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("top-level usage errors exit 1, help exits 0") {
    CHECK(cli::run_cli({}).exit_code == 1);
    CHECK(cli::run_cli({"frobnicate"}).exit_code == 1);
    auto help = cli::run_cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("reconstruct") != std::string::npos);
}
