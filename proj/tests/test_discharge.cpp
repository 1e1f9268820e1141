#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "injcol/discharge.hpp"
#include "injcol/gen.hpp"
#include "support.hpp"

using namespace injcol;

namespace {

const CaseSpec D3 = CaseSpec::for_delta(3);
const CaseSpec D4 = CaseSpec::for_delta(4);
const CaseSpec D5 = CaseSpec::for_delta(5);

Graph subdivide_edges(const Graph& g, const std::vector<Edge>& which)
{
    std::vector<Edge> e;
    for (Edge f : g.edges())
        if (std::find(which.begin(), which.end(), f) == which.end())
            e.push_back(f);
    int n = g.vertex_count();
    for (Edge f : which) {
        e.emplace_back(f.first, n);
        e.emplace_back(n++, f.second);
    }
    return Graph::from_edges(n, e);
}

int two_neighbor_count(const Graph& g, Vertex v)
{
    int c = 0;
    for (Vertex w : g.neighbors(v))
        c += g.degree(w) == 2;
    return c;
}

void check_same(const ChargeLedger& a, const ChargeLedger& b)
{
    CHECK(a.final == b.final);
    CHECK(a.bank == b.bank);
    CHECK(a.log.size() == b.log.size());
}

} // namespace

TEST_CASE("maximum degree 3 ledger examples")
{
    SUBCASE("no 2-vertices: nothing moves")
    {
        ChargeLedger l = discharge_thm2(gen::heawood());
        for (const Rational& c : l.final)
            CHECK(c == Rational(3));
        CHECK(l.log.empty());
        CHECK(average_degree_certificate(l, Rational(36, 13)));
    }
    SUBCASE("one subdivided edge")
    {
        Graph h = gen::heawood();
        Edge e = h.edges().front();
        Graph g = subdivide_edges(h, {e});
        ChargeLedger l = discharge_thm2(g);
        const Vertex p = 14;
        CHECK(l.final[p] == Rational(2) + Rational(6, 13) + Rational(4, 13));
        CHECK(l.final[p] == Rational(36, 13));
        CHECK(l.final[e.first] == Rational(3) - Rational(3, 13));
        CHECK(l.final[e.second] == Rational(36, 13));
        CHECK(l.conserved());
        CHECK(l.min_final() == Rational(36, 13));
    }
    SUBCASE("3-vertex at distance two from three 2-vertices")
    {
        Graph h = gen::heawood();
        auto edges = h.edges();
        bool found = false;
        for (std::size_t i = 0; i < edges.size() && !found; ++i)
            for (std::size_t j = i + 1; j < edges.size() && !found; ++j)
                for (std::size_t k = j + 1; k < edges.size() && !found; ++k) {
                    Graph g = subdivide_edges(h, {edges[i], edges[j], edges[k]});
                    if (find_config(g, D3))
                        continue;
                    ChargeLedger l = discharge_thm2(g);
                    for (Vertex v = 0; v < 14; ++v)
                        if (two_neighbor_count(g, v) == 0 && l.final[v] == Rational(3) - Rational(3, 13))
                            found = true;
                }
        CHECK(found);
    }
}

TEST_CASE("maximum degree 3 bounds and conservation on configuration-free graphs")
{
    int ledgers = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph base = gen::random_regular(14 + 2 * static_cast<int>(seed % 8), 3, 6, seed);
        Graph g = support::subdivide_config_free(base, D3, seed, 1 + static_cast<int>(seed % 6));
        ChargeLedger l = discharge_thm2(g);
        CHECK(l.conserved());
        CHECK(l.min_final() >= Rational(36, 13));
        CHECK(average_degree_certificate(l, Rational(36, 13)));
        for (const auto& t : l.log)
            CHECK(t.amount > Rational(0));
        check_same(l, discharge_thm2(g, Traversal::Descending));
        ++ledgers;
    }
    CHECK(ledgers == 30);
}

TEST_CASE("maximum degree 3 preconditions")
{
    CHECK_THROWS_AS(discharge_thm2(gen::star(3)), ConfigPresent);
    CHECK_THROWS_AS(discharge_thm2(gen::complete(5)), std::invalid_argument);
    CHECK_THROWS_AS(discharge_thm2(gen::cycle(5)), std::invalid_argument);
    try {
        Graph h = gen::heawood();
        discharge_thm2(subdivide_edges(subdivide_edges(h, {{0, 1}}), {{0, 14}}));
        FAIL("expected ConfigPresent");
    } catch (const ConfigPresent& e) {
        CHECK(e.config.tag == ConfigTag::RC2);
    }
}

TEST_CASE("maximum degree 6+ ledger examples")
{
    SUBCASE("2-vertex between two 6-vertices")
    {
        Graph g = subdivide_edges(gen::complete(7), {{0, 1}});
        ChargeLedger l = discharge_lemma6(g);
        CHECK(l.final[7] == Rational(14, 5));
        for (Vertex v = 0; v < 7; ++v)
            CHECK(l.final[v] >= Rational(3, 5) * Rational(g.degree(v)));
        CHECK(l.conserved());
        REQUIRE(l.snapshot("R2") != nullptr);
        CHECK(l.snapshot("R2")->charges[0] == Rational(6) - Rational(2, 5));
    }
    SUBCASE("4-vertex with four 2-neighbors")
    {
        // K7 minus 0-1 and 2-3; vertex 7 reaches 0..3 through 2-vertices.
        std::vector<Edge> e;
        for (Edge f : gen::complete(7).edges())
            if (f != Edge{0, 1} && f != Edge{2, 3})
                e.push_back(f);
        for (int i = 0; i < 4; ++i) {
            e.emplace_back(7, 8 + i);
            e.emplace_back(8 + i, i);
        }
        Graph g = Graph::from_edges(12, e);
        REQUIRE_FALSE(find_config(g, CaseSpec::for_delta(6)).has_value());
        ChargeLedger l = discharge_lemma6(g);
        CHECK(l.final[7] >= Rational(4) - Rational(8, 5) + Rational(4) * (Rational(3, 5) - Rational(14, 30)));
        CHECK(l.final[7] > Rational(14, 5));
        CHECK(l.min_final() >= Rational(14, 5));
    }
    SUBCASE("explicit delta above the graph's")
    {
        Graph g = subdivide_edges(gen::complete(7), {{0, 1}});
        ChargeLedger l = discharge_lemma6(g, 7);
        CHECK(l.min_final() >= Rational(14, 5));
        CHECK_THROWS_AS(discharge_lemma6(gen::complete(5)), std::invalid_argument);
    }
}

TEST_CASE("maximum degree 6+ bounds on configuration-free graphs")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int d = 6 + static_cast<int>(seed % 2);
        Graph base = gen::random_regular(d == 6 ? 14 : 16, d, 3, seed);
        Graph g = support::subdivide_config_free(base, CaseSpec::for_delta(d), seed, 4 + static_cast<int>(seed % 8));
        ChargeLedger l = discharge_lemma6(g);
        CHECK(l.conserved());
        CHECK(l.min_final() >= Rational(14, 5));
        check_same(l, discharge_lemma6(g, std::nullopt, Traversal::Descending));
    }
}

TEST_CASE("two-phase ledger examples")
{
    SUBCASE("D4: 3-vertex next to a 2-vertex and a 4-vertex")
    {
        support::H2Gadget gd = support::h2_gadget();
        AuxGraph h = build_aux_H(gd.g, D4);
        ChargeLedger l = discharge_two_phase(gd.g, h, DeltaCase::D4);
        REQUIRE(l.snapshot("phase1") != nullptr);
        CHECK(l.snapshot("phase1")->charges[gd.u] == Rational(3) - Rational(2, 5) + Rational(1, 5));
        CHECK(l.conserved());
    }
    SUBCASE("D4: 2,2,2,2 vertices are topped up by the bank")
    {
        std::vector<Edge> e;
        int next = 4;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 2; ++k) {
                e.emplace_back(i, next);
                e.emplace_back(next++, (i + 1) % 4);
            }
        Graph g = Graph::from_edges(next, e);
        AuxGraph h = build_aux_H(g, D4);
        ChargeLedger l = discharge_two_phase(g, h, DeltaCase::D4);
        for (Vertex v = 0; v < 4; ++v) {
            CHECK(l.snapshot("phase1")->charges[v] == Rational(12, 5));
            CHECK(l.final[v] == Rational(14, 5));
        }
        CHECK(l.bank == Rational(-8, 5));
        CHECK(l.conserved());
        CHECK_FALSE(average_degree_certificate(l, Rational(14, 5)));
    }
    SUBCASE("preconditions")
    {
        AuxGraph empty;
        CHECK_THROWS_AS(discharge_two_phase(gen::star(4), empty, DeltaCase::D4), ConfigPresent);
        CHECK_THROWS_AS(discharge_two_phase(gen::heawood(), empty, DeltaCase::D4), std::invalid_argument);
    }
}

TEST_CASE("two-phase: the bank is the total surplus, and deficits only come with negative surplus")
{
    int ledgers = 0, deficits = 0;
    for (int delta : {4, 5}) {
        CaseSpec cs = CaseSpec::for_delta(delta);
        std::vector<Graph> graphs;
        for (const Graph& g : support::corpus(delta, 120))
            if (!find_config(g, cs))
                graphs.push_back(g);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Graph base = gen::random_regular(delta == 4 ? 20 : 50, delta, 5, seed);
            graphs.push_back(support::subdivide_config_free(base, cs, seed, 3 + static_cast<int>(seed)));
        }
        for (const Graph& g : graphs) {
            if (g.max_degree() != delta)
                continue;
            AuxGraph h = build_aux_H(g, cs);
            Rational total;
            bool negative = false;
            for (const auto& c : component_surplus(h, g)) {
                total += c.surplus;
                negative = negative || c.surplus < Rational(0);
            }
            try {
                ChargeLedger l = discharge_two_phase(g, h, cs.kind);
                CHECK(l.conserved());
                CHECK(l.bank == total);
                CHECK(l.min_final() >= Rational(14, 5));
                CHECK(average_degree_certificate(l, Rational(14, 5)) == (total >= Rational(0)));
                ChargeLedger r = discharge_two_phase(g, h, cs.kind, Traversal::Descending);
                check_same(l, r);
                ++ledgers;
            } catch (const DeficitFound& e) {
                CHECK(e.negative_surplus);
                CHECK(negative);
                ++deficits;
            }
        }
    }
    CHECK(ledgers > 20);
    MESSAGE("ledgers " << ledgers << ", deficits " << deficits);
}

TEST_CASE("certificate")
{
    ChargeLedger l = discharge_thm2(gen::heawood());
    CHECK(average_degree_certificate(l, Rational(3)));
    CHECK_FALSE(average_degree_certificate(l, Rational(31, 10)));
    l.final[0] = Rational(2);
    CHECK_FALSE(l.conserved());
    CHECK_FALSE(average_degree_certificate(l, Rational(2)));
}
