#include "injcol/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace injcol::io {

namespace {

using ordered = nlohmann::ordered_json;

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;)
        out.push_back(t);
    return out;
}

long long integer(const std::string& s, int line)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::logic_error&) {
    }
    throw ParseError(line, "expected an integer, got '" + s + "'");
}

Graph parse_dimacs(std::istream& in)
{
    int n = -1;
    long long declared = -1;
    std::vector<Edge> edges;
    std::string text;
    int line = 0;
    while (std::getline(in, text)) {
        ++line;
        auto t = tokens(text);
        if (t.empty() || t[0] == "c")
            continue;
        if (t[0] == "p") {
            if (n >= 0)
                throw ParseError(line, "second problem line");
            if (t.size() != 4 || (t[1] != "edge" && t[1] != "col"))
                throw ParseError(line, "expected 'p edge <n> <m>'");
            long long nn = integer(t[2], line);
            declared = integer(t[3], line);
            if (nn < 0 || declared < 0 || nn > (1 << 30))
                throw ParseError(line, "bad problem size");
            n = static_cast<int>(nn);
        } else if (t[0] == "e") {
            if (n < 0)
                throw ParseError(line, "edge before problem line");
            if (t.size() != 3)
                throw ParseError(line, "expected 'e <u> <v>'");
            long long u = integer(t[1], line), v = integer(t[2], line);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(line, "vertex out of range 1.." + std::to_string(n));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError(line, "unknown line type '" + t[0] + "'");
        }
    }
    if (n < 0)
        throw ParseError(line, "missing problem line");
    if (static_cast<long long>(edges.size()) != declared)
        throw ParseError(line, "header declares " + std::to_string(declared) + " edges, found " +
                                   std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

Graph parse_edgelist(std::istream& in)
{
    int n = 0;
    std::vector<Edge> edges;
    std::string text;
    int line = 0;
    while (std::getline(in, text)) {
        ++line;
        auto t = tokens(text);
        if (t.empty())
            continue;
        if (t[0][0] == '#') {
            if (t.size() == 3 && t[0] == "#" && t[1] == "n") {
                long long nn = integer(t[2], line);
                if (nn < 0 || nn > (1 << 30))
                    throw ParseError(line, "bad vertex count");
                n = std::max(n, static_cast<int>(nn));
            }
            continue;
        }
        if (t.size() != 2)
            throw ParseError(line, "expected 'u v'");
        long long u = integer(t[0], line), v = integer(t[1], line);
        if (u < 0 || v < 0 || u >= (1 << 30) || v >= (1 << 30))
            throw ParseError(line, "vertex id out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        n = std::max(n, static_cast<int>(std::max(u, v)) + 1);
    }
    return Graph::from_edges(n, edges);
}

std::string frac(const Rational& r) { return r.fraction_str(); }

std::string party(Vertex v) { return v == kBank ? std::string("bank") : std::to_string(v); }

} // namespace

Graph parse_graph(std::istream& in, Format format)
{
    return format == Format::Dimacs ? parse_dimacs(in) : parse_edgelist(in);
}

Graph read_graph(const std::string& path, Format format)
{
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open " + path);
    return parse_graph(in, format);
}

Format format_for_path(const std::string& path)
{
    for (const char* ext : {".col", ".dimacs"}) {
        std::string e(ext);
        if (path.size() >= e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0)
            return Format::Dimacs;
    }
    return Format::Edgelist;
}

std::string emit_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string emit_edgelist(const Graph& g)
{
    std::ostringstream out;
    out << "# n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string coloring_json(const Coloring& c)
{
    ordered doc;
    doc["palette"] = c.palette;
    doc["colors"] = c.colors;
    return doc.dump() + "\n";
}

Coloring parse_coloring_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, e.what());
    }
    if (!doc.is_object() || !doc.contains("palette") || !doc.contains("colors") ||
        !doc["palette"].is_number_integer() || !doc["colors"].is_array())
        throw ParseError(1, "expected {\"palette\": k, \"colors\": [...]}");
    Coloring c;
    c.palette = doc["palette"].get<int>();
    for (const auto& x : doc["colors"]) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > (1 << 30))
            throw ParseError(1, "colors must be non-negative integers");
        c.colors.push_back(x.get<int>());
    }
    return c;
}

std::string ledger_json(const ChargeLedger& ledger, const std::string& case_name)
{
    ordered doc;
    doc["case"] = case_name;
    doc["vertices"] = ledger.final.size();
    ordered initial = ordered::array(), final = ordered::array();
    for (const auto& r : ledger.initial)
        initial.push_back(frac(r));
    for (const auto& r : ledger.final)
        final.push_back(frac(r));
    doc["initial"] = initial;
    doc["final"] = final;
    doc["bank"] = frac(ledger.bank);
    doc["min_final"] = ledger.final.empty() ? std::string("0/1") : frac(ledger.min_final());
    doc["conserved"] = ledger.conserved();
    ordered log = ordered::array();
    for (const auto& t : ledger.log) {
        ordered e;
        e["rule"] = t.rule;
        e["donor"] = party(t.donor);
        e["recipient"] = party(t.recipient);
        e["amount"] = frac(t.amount);
        log.push_back(e);
    }
    doc["log"] = log;
    ordered snaps = ordered::array();
    for (const auto& s : ledger.snapshots) {
        ordered e;
        e["name"] = s.name;
        ordered charges = ordered::array();
        for (const auto& r : s.charges)
            charges.push_back(frac(r));
        e["charges"] = charges;
        snaps.push_back(e);
    }
    doc["snapshots"] = snaps;
    return doc.dump(2) + "\n";
}

} // namespace injcol::io
