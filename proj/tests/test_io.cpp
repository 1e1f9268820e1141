#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "injcol/gen.hpp"
#include "injcol/io.hpp"
#include "support.hpp"

using namespace injcol;
namespace fs = std::filesystem;

namespace {

Graph parse(const std::string& text, io::Format f)
{
    std::istringstream in(text);
    return io::parse_graph(in, f);
}

int parse_error_line(const std::string& text, io::Format f)
{
    try {
        parse(text, f);
    } catch (const io::ParseError& e) {
        return e.line;
    }
    return -1;
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("injcol-io-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const
    {
        std::ofstream(path / name) << content;
        return (path / name).string();
    }
};

int run(const std::string& args)
{
    std::string cmd = std::string(INJCOL_CLI) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("DIMACS parsing")
{
    Graph t = parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", io::Format::Dimacs);
    CHECK(t == gen::complete(3));
    CHECK(parse("c comment\np col 4 2\nc more\ne 1 2\n\ne 3 4\n", io::Format::Dimacs).edge_count() == 2);

    try {
        parse("p edge 2 1\ne 1 1\n", io::Format::Dimacs);
        FAIL("expected a self-loop error");
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::SelfLoop);
    }
    try {
        parse("p edge 2 2\ne 1 2\ne 2 1\n", io::Format::Dimacs);
        FAIL("expected a duplicate-edge error");
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::DuplicateEdge);
    }
    CHECK(parse_error_line("e 1 2\n", io::Format::Dimacs) == 1);
    CHECK(parse_error_line("p edge 3 1\ne 1 4\n", io::Format::Dimacs) == 2);
    CHECK(parse_error_line("p edge 3 1\ne 1 x\n", io::Format::Dimacs) == 2);
    CHECK(parse_error_line("p edge 3 2\ne 1 2\n", io::Format::Dimacs) >= 1);
    CHECK(parse_error_line("p edge 3 1\np edge 3 1\n", io::Format::Dimacs) == 2);
}

TEST_CASE("edge list parsing")
{
    CHECK(parse("0 1\n1 2\n", io::Format::Edgelist) == gen::path(3));
    Graph iso = parse("# n 5\n0 1\n", io::Format::Edgelist);
    CHECK(iso.vertex_count() == 5);
    CHECK(iso.edge_count() == 1);
    CHECK(parse("", io::Format::Edgelist).vertex_count() == 0);
    CHECK(parse_error_line("0 1\n1\n", io::Format::Edgelist) == 2);
    CHECK(parse_error_line("0 -1\n", io::Format::Edgelist) == 1);
    CHECK_THROWS_AS(parse("0 0\n", io::Format::Edgelist), GraphError);
}

TEST_CASE("round trips")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        Graph g = support::random_graph(1 + i % 12, 0.3, rng);
        CHECK(parse(io::emit_dimacs(g), io::Format::Dimacs) == g);
        CHECK(parse(io::emit_edgelist(g), io::Format::Edgelist) == g);
    }
    CHECK(io::format_for_path("a/b.col") == io::Format::Dimacs);
    CHECK(io::format_for_path("x.dimacs") == io::Format::Dimacs);
    CHECK(io::format_for_path("x.txt") == io::Format::Edgelist);
}

TEST_CASE("coloring documents")
{
    Coloring c(3, 4);
    c.colors = {1, 4, 2};
    std::string text = io::coloring_json(c);
    auto j = nlohmann::json::parse(text);
    CHECK(j["palette"] == 4);
    CHECK(j["colors"] == nlohmann::json::array({1, 4, 2}));
    CHECK(text.find("palette") < text.find("colors"));
    Coloring back = io::parse_coloring_json(text);
    CHECK(back.colors == c.colors);
    CHECK(back.palette == 4);
    CHECK_THROWS(io::parse_coloring_json("{\"colors\": 3}"));
    CHECK_THROWS(io::parse_coloring_json("not json"));
}

TEST_CASE("ledger documents")
{
    Graph h = gen::heawood();
    std::vector<Edge> e;
    for (Edge f : h.edges())
        if (f != Edge{0, 1})
            e.push_back(f);
    e.insert(e.end(), {{0, 14}, {14, 1}});
    ChargeLedger l = discharge_thm2(Graph::from_edges(15, e));
    std::string text = io::ledger_json(l, "d3");
    auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"case", "vertices", "initial", "final", "bank", "min_final", "conserved",
                                           "log", "snapshots"});
    CHECK(j["final"][14] == "36/13");
    CHECK(j["final"][0] == "36/13");
    CHECK(j["bank"] == "0/1");
    CHECK(j["conserved"] == true);
    CHECK(j["log"][0]["rule"] == "R1");
}

TEST_CASE("command line exit codes")
{
    TempDir dir;
    const std::string heawood = dir.file("heawood.col", io::emit_dimacs(gen::subdivide(gen::heawood(), 1)));
    const std::string fano = dir.file("fano.col", io::emit_dimacs(gen::fano_minus_vertex()));
    const std::string petersen = dir.file("petersen.txt", io::emit_edgelist(gen::petersen()));
    const std::string bad = dir.file("bad.col", "p edge 2 1\ne 1 7\n");
    const std::string out = (dir.path / "c.json").string();

    CHECK(run("analyze " + heawood) == 0);
    CHECK(run("color " + heawood + " --out " + out) == 0);
    CHECK(run("verify " + heawood + " " + out) == 0);

    Coloring c = io::parse_coloring_json(slurp(out));
    CHECK(c.palette <= 5);
    CHECK_FALSE(verify_injective(gen::subdivide(gen::heawood(), 1), c).has_value());
    // Give a vertex sharing a neighbor with 0 the color of 0.
    Graph sh = gen::subdivide(gen::heawood(), 1);
    Vertex w = sh.neighbors(0)[0];
    Vertex partner = sh.neighbors(w)[0] == 0 ? sh.neighbors(w)[1] : sh.neighbors(w)[0];
    c.colors[partner] = c.colors[0];
    const std::string tampered = dir.file("t.json", io::coloring_json(c));
    CHECK(run("verify " + heawood + " " + tampered) == 1);

    CHECK(run("color " + fano) == 2);
    CHECK(run("color " + fano + " --mode force") == 3);
    CHECK(run("color " + petersen + " --mode force") == 0);
    CHECK(run("exact " + fano + " --ub 6") == 0);
    CHECK(run("discharge " + dir.file("h.col", io::emit_dimacs(gen::heawood()))) == 0);
    CHECK(run("discharge " + heawood) == 4);
    CHECK(run("discharge " + dir.file("p5.col", io::emit_dimacs(gen::star(3)))) == 4);

    CHECK(run("") == 64);
    CHECK(run("frobnicate") == 64);
    CHECK(run("color " + heawood + " --mode sideways") == 64);
    CHECK(run("generate random 4 3 1/1") != 0);
    CHECK(run("generate cycle 2") == 64);
    CHECK(run("analyze " + bad) == 65);
    CHECK(run("analyze " + (dir.path / "missing.col").string()) == 66);

    const std::string gen_out = (dir.path / "g.col").string();
    CHECK(run("generate heawood --subdivide 1 --out " + gen_out) == 0);
    CHECK(io::read_graph(gen_out, io::Format::Dimacs) == gen::subdivide(gen::heawood(), 1));
}
