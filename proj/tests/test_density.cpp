#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "injcol/density.hpp"
#include "injcol/gen.hpp"
#include "support.hpp"

using namespace injcol;

TEST_CASE("mad of small families")
{
    CHECK(mad_exact(gen::fano_minus_vertex()).density == Rational(36, 13));
    CHECK(mad_exact(gen::cycle(8)).density == Rational(2));
    CHECK(mad_exact(gen::complete(4)).density == Rational(3));
    CHECK(mad_exact(gen::star(5)).density == Rational(5, 3));
    CHECK(mad_exact(gen::subdivide(gen::heawood(), 1)).density == Rational(84, 35));
}

TEST_CASE("mad edge cases")
{
    CHECK_THROWS_AS(mad_exact(Graph()), EmptyGraph);
    auto w = mad_exact(Graph(3));
    CHECK(w.density == Rational(0));
    CHECK(w.subset.size() == 3);
    // Densest part is a K4 hanging off a long path.
    Graph g = support::make(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    auto k4 = mad_exact(g);
    CHECK(k4.density == Rational(3));
    CHECK(k4.subset == VertexSet{0, 1, 2, 3});
}

TEST_CASE("brute force oracle")
{
    CHECK(mad_bruteforce(gen::complete(4)) == Rational(3));
    CHECK(mad_bruteforce(gen::path(4)) == Rational(3, 2));
    Graph p = gen::petersen().without({0});
    CHECK(mad_bruteforce(p) == mad_exact(p).density);
    CHECK_THROWS_AS(mad_bruteforce(Graph(21)), TooLarge);
}

TEST_CASE("exact and brute force agree, witnesses reproduce their density")
{
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 150; ++t) {
        Graph g = support::random_graph(1 + t % 14, 0.1 + 0.05 * (t % 9), rng);
        auto w = mad_exact(g);
        CHECK(w.density == mad_bruteforce(g));
        REQUIRE_FALSE(w.subset.empty());
        CHECK(average_degree(g, w.subset) == w.density);
        CHECK(w.density >= Rational(2 * g.edge_count(), g.vertex_count()));
    }
}

TEST_CASE("adding an edge never lowers mad; subdividing lowers it above 2")
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 60; ++t) {
        Graph g = support::random_graph(6 + t % 8, 0.3, rng);
        Rational before = mad_exact(g).density;
        std::vector<Edge> edges = g.edges();
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v)
                if (!g.has_edge(u, v)) {
                    edges.emplace_back(u, v);
                    CHECK(mad_exact(Graph::from_edges(g.vertex_count(), edges)).density >= before);
                    u = g.vertex_count();
                    break;
                }
        if (before > Rational(2))
            CHECK(mad_exact(gen::subdivide(g, 1)).density < before);
    }
}

TEST_CASE("hypothesis check is strict")
{
    CHECK_FALSE(satisfies_hypothesis(gen::fano_minus_vertex(), Rational(36, 13)));
    CHECK(satisfies_hypothesis(gen::fano_minus_vertex(), Rational(14, 5)));
    CHECK(satisfies_hypothesis(gen::cycle(8), Rational(14, 5)));
    CHECK_FALSE(satisfies_hypothesis(gen::complete(4), Rational(14, 5)));
    CHECK_FALSE(satisfies_hypothesis(gen::cycle(5), Rational(2)));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        Graph g = support::random_graph(3 + t % 12, 0.25, rng);
        Rational bound(2 + static_cast<int>(t % 5), 1 + static_cast<int>(t % 3));
        CHECK(satisfies_hypothesis(g, bound) == (mad_exact(g).density < bound));
    }
}
