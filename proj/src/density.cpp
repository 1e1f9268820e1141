#include "injcol/density.hpp"

#include <bit>
#include <cstdint>

#include "injcol/maxflow.hpp"

namespace injcol {

Rational average_degree(const Graph& g, const VertexSet& subset)
{
    if (subset.empty())
        throw std::invalid_argument("average degree of an empty subset");
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : subset)
        in[v] = 1;
    std::int64_t twice_edges = 0;
    for (Vertex v : subset)
        for (Vertex w : g.neighbors(v))
            twice_edges += in[w];
    return Rational(twice_edges, static_cast<std::int64_t>(subset.size()));
}

namespace {

/// Inclusion-minimal S maximizing scale*e(S) - k*|S| when that maximum is
/// positive, otherwise empty. Goldberg's network, all capacities integral.
VertexSet denser_than(const Graph& g, std::int64_t scale, std::int64_t k)
{
    const int n = g.vertex_count();
    const std::int64_t m = g.edge_count();
    const int source = n, sink = n + 1;
    MaxFlow flow(n + 2);
    for (Vertex v = 0; v < n; ++v) {
        flow.add_edge(source, v, scale * m);
        flow.add_edge(v, sink, scale * m + 2 * k - scale * g.degree(v));
        for (Vertex w : g.neighbors(v))
            if (v < w) {
                flow.add_edge(v, w, scale);
                flow.add_edge(w, v, scale);
            }
    }
    flow.solve(source, sink);
    auto side = flow.source_side(source);
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (side[v])
            out.push_back(v);
    return out;
}

} // namespace

DensityWitness mad_exact(const Graph& g)
{
    const int n = g.vertex_count();
    if (n == 0)
        throw EmptyGraph();
    VertexSet all(n);
    for (Vertex v = 0; v < n; ++v)
        all[v] = v;
    if (g.edge_count() == 0)
        return {all, Rational(0)};

    // Edge density e(S)/|S| lies in (k/N, (k+1)/N] for the largest feasible k.
    const std::int64_t grid = static_cast<std::int64_t>(n) * n;
    std::int64_t lo = 0;                                 // feasible: some edge beats density 0
    std::int64_t hi = static_cast<std::int64_t>(g.max_degree()) * grid; // infeasible
    VertexSet best = denser_than(g, grid, lo);
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        VertexSet s = denser_than(g, grid, mid);
        if (s.empty())
            hi = mid;
        else {
            lo = mid;
            best = std::move(s);
        }
    }
    return {best, average_degree(g, best)};
}

Rational mad_bruteforce(const Graph& g)
{
    const int n = g.vertex_count();
    if (n == 0)
        throw EmptyGraph();
    if (n > 20)
        throw TooLarge("mad_bruteforce supports at most 20 vertices, got " + std::to_string(n));
    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            adj[v] |= 1u << w;
    Rational best(0);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int twice = 0;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            twice += std::popcount(adj[v] & s);
        }
        Rational d(twice, std::popcount(s));
        if (d > best)
            best = d;
    }
    return best;
}

bool satisfies_hypothesis(const Graph& g, const Rational& bound)
{
    const std::int64_t n = g.vertex_count();
    if (n == 0)
        throw EmptyGraph();
    if (bound <= Rational(0))
        return false;
    // Some S has 2q e(S) - p|S| >= 0 exactly when some S has
    // 2q(n+1) e(S) - (p(n+1) - 1)|S| > 0, since |S| <= n.
    const std::int64_t p = bound.num(), q = bound.den();
    return denser_than(g, 2 * q * (n + 1), p * (n + 1) - 1).empty();
}

} // namespace injcol
