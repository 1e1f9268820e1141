#include "injcol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace injcol {

Graph::Graph(int vertex_count) : adj_(vertex_count), labels_(vertex_count)
{
    std::iota(labels_.begin(), labels_.end(), 0);
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges)
{
    Graph g(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw GraphError(GraphError::Kind::VertexOutOfRange,
                             "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        if (u == v)
            throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < vertex_count; ++v) {
        auto& list = g.adj_[v];
        std::sort(list.begin(), list.end());
        auto dup = std::adjacent_find(list.begin(), list.end());
        if (dup != list.end())
            throw GraphError(GraphError::Kind::DuplicateEdge,
                             "duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& list : adj_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

void Graph::set_labels(std::vector<Vertex> labels)
{
    if (static_cast<int>(labels.size()) != vertex_count())
        throw std::invalid_argument("label count does not match vertex count");
    labels_ = std::move(labels);
}

Graph Graph::induced(const VertexSet& keep) const
{
    std::vector<int> index(vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        index[keep[i]] = i;
    Graph h(static_cast<int>(keep.size()));
    int twice = 0;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        h.labels_[i] = labels_[keep[i]];
        for (Vertex w : adj_[keep[i]])
            if (index[w] >= 0)
                h.adj_[i].push_back(index[w]);
        std::sort(h.adj_[i].begin(), h.adj_[i].end());
        twice += static_cast<int>(h.adj_[i].size());
    }
    h.edge_count_ = twice / 2;
    return h;
}

Graph Graph::without(const VertexSet& remove) const
{
    std::vector<char> gone(vertex_count(), 0);
    for (Vertex v : remove)
        gone[v] = 1;
    VertexSet keep;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (!gone[v])
            keep.push_back(v);
    return induced(keep);
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    if (u == v)
        return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

Graph GraphBuilder::build(std::vector<Vertex> labels) &&
{
    Graph g(static_cast<int>(adj_.size()));
    int twice = 0;
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        twice += static_cast<int>(list.size());
    }
    g.adj_ = std::move(adj_);
    g.edge_count_ = twice / 2;
    if (!labels.empty())
        g.set_labels(std::move(labels));
    return g;
}

bool Coloring::is_total() const
{
    return std::none_of(colors.begin(), colors.end(), [](int c) { return c == uncolored; });
}

int Coloring::distinct_colors() const
{
    std::set<int> seen;
    for (int c : colors)
        if (c != uncolored)
            seen.insert(c);
    return static_cast<int>(seen.size());
}

int Coloring::max_color() const
{
    int best = 0;
    for (int c : colors)
        best = std::max(best, c);
    return best;
}

Graph neighboring_graph(const Graph& g)
{
    GraphBuilder b(g.vertex_count());
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        auto nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                b.add_edge(nb[i], nb[j]);
    }
    return std::move(b).build(g.labels());
}

namespace {

template <class Drop>
PrunedSquare prune_square(const Graph& g, Drop drop)
{
    Graph square = neighboring_graph(g);
    PrunedSquare out;
    out.square_degree.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out.square_degree[v] = square.degree(v);
        if (drop(v, square.degree(v)))
            out.deleted.push_back(v);
        else
            out.kept.push_back(v);
    }
    out.graph = square.induced(out.kept);
    return out;
}

} // namespace

PrunedSquare pruned_square_hat(const Graph& g)
{
    return prune_square(g, [&](Vertex v, int sq) { return g.degree(v) == 2 && sq <= 5; });
}

PrunedSquare pruned_square_tilde(const Graph& g)
{
    return prune_square(g, [](Vertex, int sq) { return sq <= 6; });
}

std::vector<Block> blocks(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> found;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            found.push_back({});
            found.back().emplace_back(root, root); // marker for an isolated vertex
            continue;
        }
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Vertex v = f.v, p = f.parent;
            stack.pop_back();
            if (p < 0)
                continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                std::vector<Edge> comp;
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    comp.push_back(e);
                    if (e == Edge{p, v})
                        break;
                }
                found.push_back(std::move(comp));
            }
        }
    }

    std::vector<Block> out;
    for (auto& comp : found) {
        Block b;
        std::set<Vertex> vs;
        for (auto [u, v] : comp) {
            vs.insert(u);
            vs.insert(v);
            if (u != v)
                b.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        b.vertices.assign(vs.begin(), vs.end());
        std::sort(b.edges.begin(), b.edges.end());
        b.graph = g.induced(b.vertices);
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    return out;
}

std::optional<InjectiveViolation> verify_injective(const Graph& g, const Coloring& c)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!c.is_colored(v))
            throw UncoloredVertex(v);
    std::optional<InjectiveViolation> best;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        auto nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (c.colors[nb[i]] != c.colors[nb[j]])
                    continue;
                InjectiveViolation cand{nb[i], nb[j], w};
                if (!best || std::tie(cand.u, cand.v, cand.shared_neighbor) <
                                 std::tie(best->u, best->v, best->shared_neighbor))
                    best = cand;
            }
    }
    return best;
}

std::optional<Edge> first_conflict(const Graph& constraint, const Coloring& c)
{
    for (auto [u, v] : constraint.edges())
        if (c.is_colored(u) && c.colors[u] == c.colors[v])
            return Edge{u, v};
    return std::nullopt;
}

bool is_proper(const Graph& constraint, const Coloring& c)
{
    return c.is_total() && !first_conflict(constraint, c);
}

ThreadInfo threads_and_nearby(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    ThreadInfo info;

    auto malformed = [](Vertex v, const char* why) {
        return GraphError(GraphError::Kind::MalformedComponent,
                          std::string(why) + " through vertex " + std::to_string(v));
    };

    // Walk from a 3+-vertex into each adjacent 2-vertex chain.
    for (Vertex s = 0; s < n; ++s) {
        if (g.degree(s) < 3)
            continue;
        for (Vertex first : g.neighbors(s)) {
            if (g.degree(first) != 2 || seen[first])
                continue;
            Thread t{s, -1, {}};
            Vertex prev = s, cur = first;
            while (g.degree(cur) == 2) {
                seen[cur] = 1;
                t.interior.push_back(cur);
                auto nb = g.neighbors(cur);
                Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            if (g.degree(cur) <= 1)
                throw malformed(cur, "chain of 2-vertices ends in a 1-vertex");
            t.second_end = cur;
            for (Vertex x : t.interior) {
                info.nearby.emplace_back(t.first_end, x);
                info.nearby.emplace_back(t.second_end, x);
            }
            info.threads.push_back(std::move(t));
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 2 && !seen[v])
            throw malformed(v, "2-vertices with no 3+-vertex endpoint");
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) == 2)
            throw malformed(v, "1-vertex at the end of a chain of 2-vertices");

    std::sort(info.nearby.begin(), info.nearby.end());
    info.nearby.erase(std::unique(info.nearby.begin(), info.nearby.end()), info.nearby.end());
    return info;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0)
            continue;
        VertexSet members;
        std::vector<Vertex> stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

int girth(const Graph& g)
{
    int best = 0;
    const int n = g.vertex_count();
    for (Vertex s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best)
                        best = len;
                }
            }
        }
    }
    return best;
}

VertexSet closed_two_neighborhood(const Graph& g, Vertex u)
{
    VertexSet out{u};
    for (Vertex w : g.neighbors(u))
        if (g.degree(w) == 2)
            out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace injcol
