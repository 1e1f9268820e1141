#include "injcol/gen.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "injcol/density.hpp"

namespace injcol::gen {

namespace {

void need(bool ok, const std::string& what)
{
    if (!ok)
        throw BadParameter(what);
}

} // namespace

Graph fano_incidence()
{
    std::vector<Edge> edges;
    for (int line = 0; line < 7; ++line)
        for (int offset : {0, 1, 3})
            edges.emplace_back((line + offset) % 7, 7 + line);
    return Graph::from_edges(14, edges);
}

Graph fano_minus_vertex()
{
    return fano_incidence().without({7 + 6});
}

Graph subdivide(const Graph& g, int times_per_edge)
{
    need(times_per_edge >= 0, "subdivision count must be non-negative");
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        Vertex prev = u;
        for (int i = 0; i < times_per_edge; ++i) {
            edges.emplace_back(prev, n);
            prev = n++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::from_edges(n, edges);
}

Graph subdivide_random(const Graph& g, double p, std::uint64_t seed)
{
    need(p >= 0 && p <= 1, "subdivision probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (coin(rng)) {
            edges.emplace_back(u, n);
            edges.emplace_back(n++, v);
        } else {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph cycle(int n)
{
    need(n >= 3, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path(int n)
{
    need(n >= 1, "path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph star(int n)
{
    need(n >= 0, "star needs a non-negative number of leaves");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        edges.emplace_back(0, i);
    return Graph::from_edges(n + 1, edges);
}

Graph complete(int n)
{
    need(n >= 0, "complete graph needs a non-negative order");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph heawood()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 14; ++i) {
        edges.emplace_back(i, (i + 1) % 14);
        if (i % 2 == 0)
            edges.emplace_back(i, (i + 5) % 14);
    }
    Graph g = Graph::from_edges(14, edges);
    if (!is_isomorphic(g, fano_incidence()))
        throw std::logic_error("Heawood construction is not the Fano incidence graph");
    return g;
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

bool is_isomorphic(const Graph& a, const Graph& b)
{
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    auto degrees = [](const Graph& g) {
        std::vector<int> d;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b))
        return false;

    // Map a's vertices in BFS order so each new vertex has a mapped neighbor.
    std::vector<Vertex> order;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> queue{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : a.neighbors(queue[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        order.insert(order.end(), queue.begin(), queue.end());
    }
    std::vector<Vertex> map(n, -1), used(n, 0);
    std::function<bool(int)> go = [&](int i) {
        if (i == n)
            return true;
        Vertex v = order[i];
        for (Vertex c = 0; c < n; ++c) {
            if (used[c] || b.degree(c) != a.degree(v))
                continue;
            bool ok = true;
            for (Vertex w : a.neighbors(v))
                if (map[w] >= 0 && !b.has_edge(c, map[w])) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            map[v] = c;
            used[c] = 1;
            if (go(i + 1))
                return true;
            map[v] = -1;
            used[c] = 0;
        }
        return false;
    };
    return go(0);
}

namespace {

/// Shortest path length between u and v, capped at `cap`.
int distance_capped(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v, int cap)
{
    if (u == v)
        return 0;
    std::vector<int> dist(adj.size(), -1);
    std::vector<Vertex> frontier{u};
    dist[u] = 0;
    for (int d = 1; d <= cap && !frontier.empty(); ++d) {
        std::vector<Vertex> next;
        for (Vertex x : frontier)
            for (Vertex y : adj[x])
                if (dist[y] < 0) {
                    if (y == v)
                        return d;
                    dist[y] = d;
                    next.push_back(y);
                }
        frontier = std::move(next);
    }
    return cap + 1;
}

Graph build(int n, const std::vector<std::vector<Vertex>>& adj)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
            if (u < v)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace

Graph random_sparse(int n, int delta_max, const Rational& mad_bound, std::uint64_t seed)
{
    need(n >= 1, "random_sparse needs at least one vertex");
    need(delta_max >= 1, "random_sparse needs a positive maximum degree");

    // Girth at which planar graphs already meet the bound: 2g/(g-2) < bound.
    int target_girth = 3;
    while (target_girth < n && Rational(2 * target_girth, target_girth - 2) >= mad_bound)
        ++target_girth;

    constexpr int kAttempts = 16;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + attempt);
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        std::shuffle(pairs.begin(), pairs.end(), rng);

        std::vector<std::vector<Vertex>> adj(n);
        auto try_add = [&](Vertex u, Vertex v) {
            if (static_cast<int>(adj[u].size()) >= delta_max || static_cast<int>(adj[v].size()) >= delta_max)
                return;
            if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end())
                return;
            adj[u].push_back(v);
            adj[v].push_back(u);
            if (!satisfies_hypothesis(build(n, adj), mad_bound)) {
                adj[u].pop_back();
                adj[v].pop_back();
            }
        };
        // Long-cycle closers first, then anything the bound still allows.
        for (auto [u, v] : pairs)
            if (distance_capped(adj, u, v, target_girth - 2) > target_girth - 2)
                try_add(u, v);
        for (auto [u, v] : pairs)
            try_add(u, v);

        Graph g = build(n, adj);
        if (g.max_degree() == delta_max)
            return g;
    }
    throw GenerationFailed("no graph on " + std::to_string(n) + " vertices with maximum degree " +
                           std::to_string(delta_max) + " and mad below " + mad_bound.str());
}

Graph random_regular(int n, int d, int min_girth, std::uint64_t seed)
{
    need(n > d && d >= 1 && (n * d) % 2 == 0, "no d-regular graph with these parameters");
    constexpr int kAttempts = 2000;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<std::vector<Vertex>> adj(n);
        bool stuck = false;
        while (!stuck) {
            std::vector<Vertex> open;
            for (Vertex v = 0; v < n; ++v)
                if (static_cast<int>(adj[v].size()) < d)
                    open.push_back(v);
            if (open.empty())
                return build(n, adj);
            // Most constrained vertex first, partner chosen at random.
            std::shuffle(open.begin(), open.end(), rng);
            Vertex u = *std::min_element(open.begin(), open.end(),
                                         [&](Vertex a, Vertex b) { return adj[a].size() > adj[b].size(); });
            std::vector<Vertex> partners;
            for (Vertex v : open)
                if (v != u && std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end() &&
                    distance_capped(adj, u, v, min_girth - 2) > min_girth - 2)
                    partners.push_back(v);
            if (partners.empty()) {
                stuck = true;
                break;
            }
            Vertex v = partners[std::uniform_int_distribution<std::size_t>(0, partners.size() - 1)(rng)];
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    throw GenerationFailed("no " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                           " vertices with girth " + std::to_string(min_girth) + " found");
}

} // namespace injcol::gen
