#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "injcol/density.hpp"
#include "injcol/gen.hpp"
#include "injcol/graph.hpp"
#include "injcol/listcolor.hpp"
#include "injcol/reduce.hpp"
#include "injcol/solver.hpp"

namespace support {

using namespace injcol;

inline Graph make(int n, std::initializer_list<Edge> edges)
{
    std::vector<Edge> e(edges);
    return Graph::from_edges(n, e);
}

/// Direct triple enumeration: some u != v with a common neighbor share a color.
inline bool injective_by_triples(const Graph& g, const std::vector<int>& colors)
{
    const int n = g.vertex_count();
    for (Vertex w = 0; w < n; ++w)
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (g.has_edge(u, w) && g.has_edge(v, w) && colors[u] == colors[v])
                    return false;
    return true;
}

/// Injective chromatic number by enumerating set partitions (restricted
/// growth strings); fine up to about 10 vertices.
inline int chi_i_bruteforce(const Graph& g)
{
    const int n = g.vertex_count();
    if (n == 0)
        return 0;
    std::vector<int> rgs(n, 0);
    int best = n;
    std::function<void(int, int)> go = [&](int i, int used) {
        if (used >= best)
            return;
        if (i == n) {
            std::vector<int> colors(rgs);
            if (injective_by_triples(g, colors))
                best = used;
            return;
        }
        for (int c = 0; c <= used && c < best; ++c) {
            rgs[i] = c;
            go(i + 1, std::max(used, c + 1));
        }
    };
    go(0, 0);
    return best;
}

/// Naive product-space enumeration of list colorings; returns whether one exists.
inline bool list_colorable_bruteforce(const Graph& g, const ListAssignment& lists)
{
    const int n = g.vertex_count();
    std::vector<std::size_t> idx(n, 0);
    for (const auto& l : lists.lists)
        if (l.empty())
            return n == 0;
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (lists.lists[u][idx[u]] == lists.lists[v][idx[v]]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        int i = 0;
        while (i < n && ++idx[i] == lists.lists[i].size())
            idx[i++] = 0;
        if (i == n)
            return false;
    }
}

inline bool proper_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!lists.allows(v, c.colors[v]))
            return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

/// Random lists with |L(v)| = d(v) + extra(v), drawn from 1..universe.
inline ListAssignment random_lists(const Graph& g, int universe, std::mt19937_64& rng, std::vector<int> extra = {})
{
    ListAssignment out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> pool(universe);
        for (int c = 0; c < universe; ++c)
            pool[c] = c + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        int size = g.degree(v) + (extra.empty() ? 0 : extra[v]);
        pool.resize(std::min(universe, std::max(size, 1)));
        std::sort(pool.begin(), pool.end());
        out.lists.push_back(pool);
    }
    return out;
}

/// Erdos-Renyi style random graph.
inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph two_core(Graph g)
{
    while (true) {
        VertexSet drop;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) <= 1)
                drop.push_back(v);
        if (drop.empty())
            return g;
        g = g.without(drop);
    }
}

/// Hypothesis-satisfying graphs with maximum degree exactly `delta`, at most
/// 60 vertices, mixing plain random sparse graphs, partially subdivided
/// 2-cores and (delta 3, 4) full subdivisions of regular graphs.
inline std::vector<Graph> corpus(int delta, int count, std::uint64_t salt = 0)
{
    const Rational bound = hypothesis_bound(delta);
    std::vector<Graph> out;
    for (std::uint64_t s = salt; static_cast<int>(out.size()) < count && s < salt + 100000; ++s) {
        Graph g;
        try {
            switch (s % 4) {
            case 0:
                g = gen::random_sparse(10 + static_cast<int>(s % 47), delta, bound, s);
                break;
            case 1:
            case 2: {
                Graph base = gen::random_sparse(8 + static_cast<int>(s % 20), delta,
                                                delta >= 5 ? Rational(9, 2) : Rational(5), s);
                double p = delta >= 5 ? 0.7 + 0.05 * static_cast<double>(s % 7) : 0.3 + 0.1 * static_cast<double>(s % 8);
                g = two_core(gen::subdivide_random(base, p, s));
                break;
            }
            default:
                if (delta == 3)
                    g = gen::subdivide(gen::random_regular(8 + 2 * static_cast<int>(s % 9), 3, 4, s), 1);
                else if (delta == 4) {
                    int n = 10 + static_cast<int>(s % 11);
                    g = gen::subdivide(gen::random_regular(n, 4, n >= 19 ? 5 : 3 + static_cast<int>(s % 2), s), 1);
                }
                else
                    continue;
            }
        } catch (const gen::GenerationFailed&) {
            continue;
        }
        if (g.empty() || g.vertex_count() > 60 || g.max_degree() != delta || !satisfies_hypothesis(g, bound))
            continue;
        out.push_back(std::move(g));
    }
    return out;
}

/// From a 4-regular girth-5 graph: drop u-a and v-d for an edge uv, add a-d,
/// and subdivide u-b with a new vertex p. Then u is a 3-vertex with 2-neighbor
/// p, 3-neighbor v and a 4-neighbor, and no bounded configuration appears.
struct H2Gadget {
    Graph g;
    Vertex u, v, p;
};

inline H2Gadget h2_gadget()
{
    Graph base = gen::random_regular(20, 4, 5, 1);
    auto key = [](Vertex a, Vertex b) { return Edge{std::min(a, b), std::max(a, b)}; };
    for (auto [u, v] : base.edges()) {
        std::vector<Vertex> nu, nv;
        for (Vertex x : base.neighbors(u))
            if (x != v)
                nu.push_back(x);
        for (Vertex x : base.neighbors(v))
            if (x != u)
                nv.push_back(x);
        Vertex a = nu[0], b = nu[1];
        for (Vertex d : nv) {
            if (a == d || base.has_edge(a, d))
                continue;
            std::vector<Edge> edges;
            for (auto e : base.edges())
                if (e != key(u, a) && e != key(v, d) && e != key(u, b))
                    edges.push_back(e);
            const Vertex p = base.vertex_count();
            edges.emplace_back(a, d);
            edges.emplace_back(u, p);
            edges.emplace_back(p, b);
            return {Graph::from_edges(p + 1, edges), u, v, p};
        }
    }
    throw std::logic_error("no gadget edge");
}

/// Subdivides edges of `base` one at a time in a seeded order, keeping each
/// subdivision only while no bounded configuration of `cs` appears.
inline Graph subdivide_config_free(const Graph& base, CaseSpec cs, std::uint64_t seed, int max_subdivisions)
{
    std::vector<Edge> edges = base.edges();
    std::mt19937_64 rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<Edge> kept = base.edges();
    int n = base.vertex_count(), done = 0;
    Graph g = base;
    for (Edge e : edges) {
        if (done >= max_subdivisions)
            break;
        std::vector<Edge> trial;
        for (Edge f : kept)
            if (f != e)
                trial.push_back(f);
        trial.emplace_back(e.first, n);
        trial.emplace_back(n, e.second);
        Graph t = Graph::from_edges(n + 1, trial);
        if (find_config(t, cs))
            continue;
        kept = std::move(trial);
        g = std::move(t);
        ++n;
        ++done;
    }
    return g;
}

} // namespace support
