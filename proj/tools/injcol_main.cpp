#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "injcol/density.hpp"
#include "injcol/discharge.hpp"
#include "injcol/gen.hpp"
#include "injcol/io.hpp"
#include "injcol/listcolor.hpp"
#include "injcol/solver.hpp"

using namespace injcol;
namespace fs = std::filesystem;

namespace {

enum Exit {
    kOk = 0,
    kFailed = 1,
    kHypothesis = 2,
    kStalled = 3,
    kConfigPresent = 4,
    kDeficit = 5,
    kUsage = 64,
    kDataError = 65,
    kIoError = 66,
};

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_name = "auto";

Graph load(const std::string& path)
{
    if (!fs::exists(path) || fs::is_directory(path))
        throw IoFailure("cannot read " + path);
    std::ifstream in(path);
    if (!in)
        throw IoFailure("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    io::Format f = format_name == "dimacs" ? io::Format::Dimacs : io::Format::Edgelist;
    if (format_name == "auto") {
        // DIMACS files carry a problem line; edge lists never start with 'p'.
        std::istringstream lines(text);
        f = io::format_for_path(path);
        for (std::string line; std::getline(lines, line);)
            if (line.rfind("p ", 0) == 0)
                f = io::Format::Dimacs;
    }
    std::istringstream body(text);
    return io::parse_graph(body, f);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoFailure("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_out(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out || !(out << text))
        throw IoFailure("cannot write " + path);
}

int cmd_analyze(const std::string& file)
{
    Graph g = load(file);
    std::cout << "n " << g.vertex_count() << "\n";
    std::cout << "m " << g.edge_count() << "\n";
    std::cout << "max_degree " << (g.empty() ? 0 : g.max_degree()) << "\n";
    if (g.empty())
        return kOk;
    Rational mad = mad_exact(g).density;
    std::cout << "mad " << mad.fraction_str() << " (" << std::fixed << std::setprecision(6) << mad.to_double()
              << ")\n";
    for (Rational bound : {Rational(36, 13), Rational(14, 5)})
        std::cout << "mad < " << bound.fraction_str() << " " << (mad < bound ? "yes" : "no") << "\n";
    return kOk;
}

int color_one(const std::string& file, SolveMode mode, const std::string& out, std::ostream& log)
{
    Graph g = load(file);
    try {
        SolveResult r = color_injective(g, mode);
        log << file << ": palette " << r.report.palette << ", colors used " << r.coloring.distinct_colors()
            << ", steps " << r.report.trace.size() << ", mad " << r.report.mad.fraction_str();
        if (r.report.fallback_vertices > 0)
            log << ", exact fallback on " << r.report.fallback_vertices << " vertices";
        log << "\n";
        if (!out.empty())
            write_out(out, io::coloring_json(r.coloring));
        return kOk;
    } catch (const HypothesisViolated& e) {
        log << file << ": hypothesis violated: " << e.what() << "\n";
        return kHypothesis;
    } catch (const Stalled& e) {
        log << file << ": stalled: " << e.what() << "\n";
        return kStalled;
    }
}

int cmd_color(const std::string& target, const std::string& mode_name, const std::string& out, int jobs)
{
    SolveMode mode = mode_name == "force" ? SolveMode::Force : SolveMode::Strict;
    if (!fs::is_directory(target)) {
        std::string dest = out.empty() ? "-" : out;
        return color_one(target, mode, dest, std::cerr);
    }
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(target))
        if (entry.is_regular_file())
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (!out.empty())
        fs::create_directories(out);

    std::vector<int> codes(files.size(), kOk);
    std::vector<std::string> logs(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < files.size();) {
            std::ostringstream log;
            try {
                std::string dest;
                if (!out.empty())
                    dest = (fs::path(out) / (fs::path(files[i]).stem().string() + ".json")).string();
                codes[i] = color_one(files[i], mode, dest, log);
            } catch (const std::exception& e) {
                log << files[i] << ": " << e.what() << "\n";
                codes[i] = dynamic_cast<const IoFailure*>(&e) ? kIoError : kDataError;
            }
            logs[i] = log.str();
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, jobs); ++j)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    int worst = kOk;
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::cout << logs[i];
        worst = std::max(worst, codes[i]);
    }
    return worst;
}

int cmd_verify(const std::string& file, const std::string& coloring_file)
{
    Graph g = load(file);
    Coloring c = io::parse_coloring_json(slurp(coloring_file));
    if (static_cast<int>(c.colors.size()) != g.vertex_count()) {
        std::cout << "invalid: " << c.colors.size() << " colors for " << g.vertex_count() << " vertices\n";
        return kFailed;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!c.is_colored(v)) {
            std::cout << "invalid: vertex " << v << " is uncolored\n";
            return kFailed;
        }
    if (auto bad = verify_injective(g, c)) {
        std::cout << "violation: vertices " << bad->u << " and " << bad->v << " share neighbor "
                  << bad->shared_neighbor << " and color " << c.colors[bad->u] << "\n";
        return kFailed;
    }
    std::cout << "ok: injective with " << c.distinct_colors() << " colors\n";
    return kOk;
}

int cmd_exact(const std::string& file, int ub)
{
    Graph g = load(file);
    Graph sq = neighboring_graph(g);
    if (ub <= 0)
        ub = std::max(1, sq.empty() ? 1 : sq.max_degree() + 1);
    auto c = chi_exact(sq, ub);
    if (!c) {
        std::cout << "chi_i > " << ub << "\n";
        return kFailed;
    }
    std::cout << "chi_i " << c->palette << "\n";
    return kOk;
}

int cmd_discharge(const std::string& file, std::string which)
{
    Graph g = load(file);
    const int delta = g.empty() ? 0 : g.max_degree();
    if (which == "auto")
        which = delta == 3 ? "d3" : delta == 4 ? "d4" : delta == 5 ? "d5" : "d6";
    try {
        ChargeLedger ledger;
        if (which == "d3") {
            ledger = discharge_thm2(g);
        } else if (which == "d4" || which == "d5") {
            CaseSpec cs = CaseSpec::for_delta(which == "d4" ? 4 : 5);
            if (auto c = find_config(g, cs))
                throw ConfigPresent(*c);
            ledger = discharge_two_phase(g, build_aux_H(g, cs), cs.kind);
        } else {
            ledger = discharge_lemma6(g);
        }
        std::cout << io::ledger_json(ledger, which);
        return kOk;
    } catch (const ConfigPresent& e) {
        std::cerr << "configuration present: " << e.what() << "\n";
        return kConfigPresent;
    } catch (const DeficitFound& e) {
        std::cerr << "deficit: " << e.what() << "\n";
        return kDeficit;
    } catch (const CaseMismatch& e) {
        std::cerr << "case mismatch: " << e.what() << "\n";
        return kUsage;
    }
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
                 int times, const std::string& out)
{
    auto num = [&](std::size_t i) {
        if (i >= params.size())
            throw CLI::ValidationError("generate " + family, "missing parameter " + std::to_string(i + 1));
        try {
            return std::stoi(params[i]);
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("generate " + family, "bad integer '" + params[i] + "'");
        }
    };
    Graph g;
    if (family == "fano")
        g = gen::fano_incidence();
    else if (family == "fano-minus-vertex")
        g = gen::fano_minus_vertex();
    else if (family == "heawood")
        g = gen::heawood();
    else if (family == "petersen")
        g = gen::petersen();
    else if (family == "cycle")
        g = gen::cycle(num(0));
    else if (family == "path")
        g = gen::path(num(0));
    else if (family == "star")
        g = gen::star(num(0));
    else if (family == "complete")
        g = gen::complete(num(0));
    else if (family == "random") {
        if (params.size() < 3)
            throw CLI::ValidationError("generate random", "expects N DELTA BOUND");
        g = gen::random_sparse(num(0), num(1), Rational::parse(params[2]), seed);
    } else if (family == "regular")
        g = gen::random_regular(num(0), num(1), params.size() > 2 ? num(2) : 3, seed);
    else
        throw CLI::ValidationError("generate", "unknown family '" + family + "'");

    if (times > 0)
        g = gen::subdivide(g, times);
    bool edgelist = format_name == "edgelist";
    write_out(out, edgelist ? io::emit_edgelist(g) : io::emit_dimacs(g));
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Injective coloring of sparse graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format_name, "Graph file format")
        ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));

    std::string file, second, mode = "strict", out, which = "auto", family;
    int ub = 0, jobs = 1, times = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> params;

    auto* analyze = app.add_subcommand("analyze", "Size, maximum degree and exact mad");
    analyze->add_option("file", file)->required();

    auto* color = app.add_subcommand("color", "Injective coloring with at most max degree + 2 colors");
    color->add_option("file", file, "Graph file, or a directory of graph files")->required();
    color->add_option("--mode", mode)->check(CLI::IsMember({"strict", "force"}));
    color->add_option("--out", out, "Coloring file (directory when coloring a directory)");
    color->add_option("--jobs", jobs, "Worker threads for directories")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Check a coloring document");
    verify->add_option("graph", file)->required();
    verify->add_option("coloring", second)->required();

    auto* exact = app.add_subcommand("exact", "Injective chromatic number by exact search");
    exact->add_option("file", file)->required();
    exact->add_option("--ub", ub, "Largest palette to try");

    auto* discharge = app.add_subcommand("discharge", "Discharging ledger");
    discharge->add_option("file", file)->required();
    discharge->add_option("--case", which)->check(CLI::IsMember({"auto", "d3", "d4", "d5", "d6"}));

    auto* generate = app.add_subcommand("generate", "Write a generated graph");
    generate->add_option("family", family)->required();
    generate->add_option("params", params);
    generate->add_option("--seed", seed);
    generate->add_option("--subdivide", times, "Interior vertices per edge")->check(CLI::NonNegativeNumber);
    generate->add_option("--out", out);
    generate->allow_extras(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze)
            return cmd_analyze(file);
        if (*color)
            return cmd_color(file, mode, out, jobs);
        if (*verify)
            return cmd_verify(file, second);
        if (*exact)
            return cmd_exact(file, ub);
        if (*discharge)
            return cmd_discharge(file, which);
        if (*generate)
            return cmd_generate(family, params, seed, times, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const gen::BadParameter& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const IoFailure& e) {
        std::cerr << e.what() << "\n";
        return kIoError;
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kDataError;
    } catch (const GraphError& e) {
        std::cerr << "invalid graph: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
