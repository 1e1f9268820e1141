#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "injcol/listcolor.hpp"
#include "injcol/reduce.hpp"

namespace injcol {

namespace {

int count_degree(const Graph& g, Vertex v, int d)
{
    int n = 0;
    for (Vertex w : g.neighbors(v))
        n += g.degree(w) == d;
    return n;
}

} // namespace

bool is_v2223(const Graph& g, Vertex v)
{
    return g.degree(v) == 4 && count_degree(g, v, 2) == 3 && count_degree(g, v, 3) == 1;
}

bool is_v2222(const Graph& g, Vertex v)
{
    return g.degree(v) == 4 && count_degree(g, v, 2) == 4;
}

std::vector<std::vector<int>> AuxGraph::components() const
{
    std::vector<int> seen(nodes.size(), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < static_cast<int>(nodes.size()); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int e : incident[v]) {
                int w = other_end(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

AuxGraph build_aux_H(const Graph& g, CaseSpec cs)
{
    if (cs.kind != DeltaCase::D4 && cs.kind != DeltaCase::D5)
        throw CaseMismatch("auxiliary graph is defined for D4 and D5 only");
    if (auto c = find_config(g, cs))
        throw BoundedConfigPresent(to_string(c->tag) + " present at vertex " + std::to_string(c->anchor));

    struct RawEdge {
        Vertex a, b;
        AuxRule rule;
        Vertex via;
    };
    std::vector<RawEdge> raw;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) != 2)
            continue;
        Vertex v = g.neighbors(u)[0], w = g.neighbors(u)[1];
        if (cs.kind == DeltaCase::D5 && g.degree(v) != 4 && g.degree(w) != 4)
            continue;
        raw.push_back({v, w, AuxRule::H1, u});
    }
    if (cs.kind == DeltaCase::D4) {
        std::set<Edge> pairs;
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            if (g.degree(u) != 3 || count_degree(g, u, 2) == 0)
                continue;
            for (Vertex v : g.neighbors(u))
                if (g.degree(v) == 3 && pairs.insert({std::min(u, v), std::max(u, v)}).second)
                    raw.push_back({u, v, AuxRule::H2, -1});
        }
    }

    std::set<Vertex> members;
    std::map<Vertex, int> h_degree;
    for (const auto& e : raw) {
        members.insert(e.a);
        members.insert(e.b);
        ++h_degree[e.a];
        ++h_degree[e.b];
    }

    PrunedSquare sq = cs.kind == DeltaCase::D4 ? pruned_square_hat(g) : pruned_square_tilde(g);
    std::vector<int> pruned_degree(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(sq.kept.size()); ++i)
        pruned_degree[sq.kept[i]] = sq.graph.degree(i);
    const int threshold = cs.kind == DeltaCase::D4 ? 7 : 8;

    AuxGraph h;
    h.kind = cs.kind;
    h.node_of.assign(g.vertex_count(), -1);
    std::set<Vertex> split;
    for (Vertex v : members)
        if (pruned_degree[v] >= threshold)
            split.insert(v);
    for (Vertex v : members)
        if (!split.count(v)) {
            h.node_of[v] = static_cast<int>(h.nodes.size());
            h.nodes.push_back({v, false});
        }
    h.split_vertices.assign(split.begin(), split.end());
    if (cs.kind == DeltaCase::D4)
        for (Vertex v : split)
            if (g.degree(v) != 4 || h_degree[v] != 2)
                h.split_claim_violations.push_back(v);

    auto endpoint = [&](Vertex v) {
        if (!split.count(v))
            return h.node_of[v];
        h.nodes.push_back({v, true});
        return static_cast<int>(h.nodes.size()) - 1;
    };
    for (const auto& e : raw) {
        int a = endpoint(e.a);
        int b = endpoint(e.b);
        h.edges.push_back({a, b, e.rule, e.via});
    }
    h.incident.assign(h.nodes.size(), {});
    for (int i = 0; i < static_cast<int>(h.edges.size()); ++i) {
        h.incident[h.edges[i].a].push_back(i);
        h.incident[h.edges[i].b].push_back(i);
    }
    return h;
}

std::vector<ComponentSurplus> component_surplus(const AuxGraph& h, const Graph& g)
{
    std::vector<ComponentSurplus> out;
    for (auto& comp : h.components()) {
        ComponentSurplus s;
        for (int node : comp) {
            if (h.degree(node) == 1)
                ++s.leaves;
            if (h.nodes[node].split_copy)
                continue;
            Vertex v = h.nodes[node].origin;
            s.v2223 += is_v2223(g, v);
            s.v2222 += is_v2222(g, v);
        }
        s.surplus = Rational(s.leaves - s.v2223 - 2 * s.v2222, 5);
        s.nodes = std::move(comp);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

struct HCycle {
    std::vector<int> nodes;
    std::vector<int> edges;
    std::vector<Vertex> key; ///< origins, rotated and oriented to be lexicographically least
};

std::vector<Vertex> canonical(std::vector<Vertex> seq)
{
    std::vector<Vertex> best;
    const std::size_t n = seq.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Vertex> cand(n);
            for (std::size_t i = 0; i < n; ++i)
                cand[i] = seq[(r + i) % n];
            if (best.empty() || cand < best)
                best = cand;
        }
        std::reverse(seq.begin(), seq.end());
    }
    return best;
}

/// Shortest cycle of the component through per-edge BFS.
std::optional<HCycle> shortest_cycle(const AuxGraph& h, const std::vector<int>& comp)
{
    std::set<int> in_comp(comp.begin(), comp.end());
    std::optional<HCycle> best;
    std::vector<int> edges_in;
    for (int v : comp)
        for (int e : h.incident[v])
            if (h.edges[e].a == v)
                edges_in.push_back(e);
    std::sort(edges_in.begin(), edges_in.end());

    for (int skip : edges_in) {
        int a = h.edges[skip].a, b = h.edges[skip].b;
        std::map<int, int> via_edge;
        std::queue<int> q;
        via_edge[a] = -1;
        q.push(a);
        while (!q.empty() && !via_edge.count(b)) {
            int v = q.front();
            q.pop();
            for (int e : h.incident[v]) {
                if (e == skip)
                    continue;
                int w = h.other_end(e, v);
                if (via_edge.count(w))
                    continue;
                via_edge[w] = e;
                q.push(w);
            }
        }
        if (!via_edge.count(b))
            continue;
        // a -> ... -> b along BFS tree, then back to a over `skip`.
        HCycle c;
        std::vector<int> rev_nodes{b}, rev_edges;
        for (int v = b; v != a;) {
            int e = via_edge[v];
            rev_edges.push_back(e);
            v = h.other_end(e, v);
            rev_nodes.push_back(v);
        }
        c.nodes.assign(rev_nodes.rbegin(), rev_nodes.rend());
        c.edges.assign(rev_edges.rbegin(), rev_edges.rend());
        c.nodes.pop_back(); // b closes back to a through `skip`
        c.nodes.push_back(b);
        c.edges.push_back(skip);
        std::vector<Vertex> origins;
        for (int v : c.nodes)
            origins.push_back(h.nodes[v].origin);
        c.key = canonical(origins);
        if (!best || c.nodes.size() < best->nodes.size() ||
            (c.nodes.size() == best->nodes.size() && c.key < best->key))
            best = std::move(c);
    }
    return best;
}

/// G-vertices strictly between node `from` and the far end of edge `e`.
void lift_edge(const AuxGraph& h, int e, std::vector<Vertex>& out)
{
    if (h.edges[e].rule == AuxRule::H1)
        out.push_back(h.edges[e].via);
}

VertexSet sorted_unique(std::vector<Vertex> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

KSubgraphPlan plan_for(const Graph& g, const AuxGraph& h, const HCycle& cyc, int u_node)
{
    KSubgraphPlan plan;
    plan.cycle_nodes = cyc.nodes;
    plan.cycle_edges = cyc.edges;
    plan.u = h.nodes[u_node].origin;

    const int len = static_cast<int>(cyc.nodes.size());
    for (int i = 0; i < len; ++i) {
        plan.cycle.push_back(h.nodes[cyc.nodes[i]].origin);
        lift_edge(h, cyc.edges[i], plan.cycle);
    }
    if (sorted_unique(plan.cycle).size() != plan.cycle.size())
        throw StructureViolation("lifted cycle repeats a vertex");
    for (std::size_t i = 0; i < plan.cycle.size(); ++i)
        if (!g.has_edge(plan.cycle[i], plan.cycle[(i + 1) % plan.cycle.size()]))
            throw StructureViolation("lifted cycle uses a non-edge");
    if (plan.cycle.size() % 2 != 0)
        throw StructureViolation("lifted cycle C' has odd length " + std::to_string(plan.cycle.size()));

    // Longest cyclic run of H2 edges.
    int run = 0, best = 0;
    for (int i = 0; i < 2 * len; ++i) {
        if (h.edges[cyc.edges[i % len]].rule == AuxRule::H2)
            best = std::max(best, std::min(++run, len));
        else
            run = 0;
    }
    plan.max_h2_run = best;
    if (h.kind == DeltaCase::D4 && best >= 3)
        throw StructureViolation("three successive H2 edges on C");

    std::set<Vertex> on_cycle(plan.cycle.begin(), plan.cycle.end());
    std::vector<Edge> k_edges;
    for (std::size_t i = 0; i < plan.cycle.size(); ++i)
        k_edges.emplace_back(plan.cycle[i], plan.cycle[(i + 1) % plan.cycle.size()]);

    if (on_cycle.count(plan.u)) {
        plan.u_on_cycle = true;
        plan.x = plan.u;
        plan.path = {plan.u};
        for (Vertex w : g.neighbors(plan.u))
            if (g.degree(w) == 2 && !on_cycle.count(w)) {
                plan.extra_two_vertex = w;
                break;
            }
        if (plan.extra_two_vertex < 0)
            throw StructureViolation("u on C' has no spare 2-neighbor");
        k_edges.emplace_back(plan.u, plan.extra_two_vertex);
    } else {
        // Shortest H-path from C to u, lifted into G.
        std::map<int, int> via_edge;
        std::queue<int> q;
        for (int v : cyc.nodes) {
            via_edge[v] = -1;
            q.push(v);
        }
        while (!q.empty() && !via_edge.count(u_node)) {
            int v = q.front();
            q.pop();
            for (int e : h.incident[v]) {
                int w = h.other_end(e, v);
                if (!via_edge.count(w)) {
                    via_edge[w] = e;
                    q.push(w);
                }
            }
        }
        if (!via_edge.count(u_node))
            throw StructureViolation("u is not connected to C in H");
        std::vector<int> nodes{u_node}, edges;
        for (int v = u_node; via_edge[v] >= 0;) {
            int e = via_edge[v];
            edges.push_back(e);
            v = h.other_end(e, v);
            nodes.push_back(v);
        }
        std::reverse(nodes.begin(), nodes.end());
        std::reverse(edges.begin(), edges.end());
        plan.x = h.nodes[nodes.front()].origin;
        plan.path = {plan.x};
        for (std::size_t i = 0; i < edges.size(); ++i) {
            lift_edge(h, edges[i], plan.path);
            plan.path.push_back(h.nodes[nodes[i + 1]].origin);
        }
        for (std::size_t i = 0; i + 1 < plan.path.size(); ++i)
            k_edges.emplace_back(plan.path[i], plan.path[i + 1]);
        if ((plan.path.size() - 1) % 2 != 0)
            throw StructureViolation("path from x to u has odd length " + std::to_string(plan.path.size() - 1));
        for (std::size_t i = 1; i < plan.path.size(); ++i)
            if (on_cycle.count(plan.path[i]))
                throw StructureViolation("path from C' to u re-enters C'");
    }

    std::vector<Vertex> all(plan.cycle.begin(), plan.cycle.end());
    all.insert(all.end(), plan.path.begin(), plan.path.end());
    if (plan.extra_two_vertex >= 0)
        all.push_back(plan.extra_two_vertex);
    plan.k_vertices = sorted_unique(all);
    for (auto& [a, b] : k_edges)
        if (a > b)
            std::swap(a, b);
    plan.k_edges = k_edges;
    std::sort(plan.k_edges.begin(), plan.k_edges.end());
    plan.k_edges.erase(std::unique(plan.k_edges.begin(), plan.k_edges.end()), plan.k_edges.end());

    // K^(2) and its two components.
    std::map<Vertex, int> local;
    for (int i = 0; i < static_cast<int>(plan.k_vertices.size()); ++i)
        local[plan.k_vertices[i]] = i;
    std::vector<Edge> local_edges;
    for (auto [a, b] : plan.k_edges)
        local_edges.emplace_back(local[a], local[b]);
    Graph k = Graph::from_edges(static_cast<int>(plan.k_vertices.size()), local_edges);
    auto comps = connected_components(neighboring_graph(k));
    if (comps.size() != 2)
        throw StructureViolation("K^(2) has " + std::to_string(comps.size()) + " components, expected 2");
    int first = std::binary_search(comps[0].begin(), comps[0].end(), local[plan.x]) ? 0 : 1;
    for (Vertex v : comps[first])
        plan.first_component.push_back(plan.k_vertices[v]);
    for (Vertex v : comps[1 - first])
        plan.second_component.push_back(plan.k_vertices[v]);
    if (!std::binary_search(plan.first_component.begin(), plan.first_component.end(), plan.u))
        throw StructureViolation("u is not in the first component of K^(2)");
    return plan;
}

} // namespace

KSubgraphPlan plan_k_subgraph(const Graph& g, const AuxGraph& h, const std::vector<int>& component)
{
    std::vector<int> specials;
    for (int node : component)
        if (!h.nodes[node].split_copy && (is_v2223(g, h.nodes[node].origin) || is_v2222(g, h.nodes[node].origin)))
            specials.push_back(node);
    if (specials.empty())
        throw StructureViolation("component has no V2223 or V2222 vertex");
    auto cyc = shortest_cycle(h, component);
    if (!cyc)
        throw StructureViolation("component is acyclic");

    // Distance from C in H.
    std::map<int, int> dist;
    std::queue<int> q;
    for (int v : cyc->nodes) {
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : h.incident[v]) {
            int w = h.other_end(e, v);
            if (!dist.count(w)) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    std::sort(specials.begin(), specials.end(), [&](int a, int b) {
        return std::pair(dist[a], h.nodes[a].origin) < std::pair(dist[b], h.nodes[b].origin);
    });

    std::ostringstream failures;
    for (int u : specials) {
        try {
            return plan_for(g, h, *cyc, u);
        } catch (const StructureViolation& e) {
            failures << " [u=" << h.nodes[u].origin << ": " << e.what() << "]";
        }
    }
    throw StructureViolation("no valid K-subgraph plan:" + failures.str());
}

namespace {

/// Square-graph view used while recoloring around K.
struct Region {
    const PrunedSquare& sq;
    std::vector<int> local; ///< g vertex -> square vertex, or -1 if pruned

    explicit Region(const PrunedSquare& s, int n) : sq(s), local(n, -1)
    {
        for (int i = 0; i < static_cast<int>(s.kept.size()); ++i)
            local[s.kept[i]] = i;
    }
    bool kept(Vertex v) const { return local[v] >= 0; }

    /// Smallest color in 1..palette unused by square neighbors, or 0.
    int free_color(Vertex v, const Coloring& c, int palette) const
    {
        std::vector<char> used(palette + 1, 0);
        for (Vertex w : sq.graph.neighbors(local[v])) {
            int col = c.colors[sq.kept[w]];
            if (col != Coloring::uncolored && col <= palette)
                used[col] = 1;
        }
        for (int col = 1; col <= palette; ++col)
            if (!used[col])
                return col;
        return Coloring::uncolored;
    }
};

/// List-colors every uncolored kept vertex, one component of the uncolored
/// part of the square at a time.
void finish_region(const Region& r, Coloring& c, int palette)
{
    const Graph& q = r.sq.graph;
    VertexSet open;
    for (int i = 0; i < q.vertex_count(); ++i)
        if (!c.is_colored(r.sq.kept[i]))
            open.push_back(i);
    Graph sub = q.induced(open);
    for (const auto& comp : connected_components(sub)) {
        Graph piece = sub.induced(comp);
        ListAssignment lists;
        for (Vertex local : comp) {
            Vertex qv = open[local];
            std::vector<char> used(palette + 1, 0);
            for (Vertex w : q.neighbors(qv)) {
                int col = c.colors[r.sq.kept[w]];
                if (col != Coloring::uncolored && col <= palette)
                    used[col] = 1;
            }
            std::vector<int> l;
            for (int col = 1; col <= palette; ++col)
                if (!used[col])
                    l.push_back(col);
            lists.lists.push_back(std::move(l));
        }
        std::optional<Coloring> got;
        try {
            got = degree_choosable_color(piece, lists);
        } catch (const std::exception&) {
            got.reset();
        }
        if (!got)
            got = list_color_exact(piece, lists);
        if (!got)
            throw ExtensionImpossible("K-region component of " + std::to_string(comp.size()) +
                                      " vertices admits no list coloring");
        for (std::size_t i = 0; i < comp.size(); ++i)
            c.colors[r.sq.kept[open[comp[i]]]] = got->colors[i];
    }
}

} // namespace

Coloring color_via_K(const Graph& g, const KSubgraphPlan& plan, const Coloring& partial, CaseSpec cs)
{
    if (cs.kind != DeltaCase::D4 && cs.kind != DeltaCase::D5)
        throw CaseMismatch("K-subgraph extension is defined for D4 and D5 only");
    const int palette = cs.palette();
    PrunedSquare sq = cs.kind == DeltaCase::D4 ? pruned_square_hat(g) : pruned_square_tilde(g);
    Region region(sq, g.vertex_count());

    Coloring c = partial;
    c.palette = palette;
    for (Vertex v : closed_two_neighborhood(g, plan.u))
        c.colors[v] = Coloring::uncolored;
    for (Vertex v : sq.deleted)
        c.colors[v] = Coloring::uncolored;

    std::set<Vertex> in_k(plan.k_vertices.begin(), plan.k_vertices.end());
    if (plan.u_on_cycle) {
        for (Vertex w : closed_two_neighborhood(g, plan.u))
            if (!in_k.count(w) && region.kept(w))
                c.colors[w] = region.free_color(w, c, palette);
        for (Vertex v : plan.k_vertices)
            c.colors[v] = Coloring::uncolored;
    } else {
        for (Vertex v : plan.second_component)
            c.colors[v] = Coloring::uncolored;
        if (cs.kind == DeltaCase::D4) {
            // Recolor the second component's tail away from C', farthest
            // first, keeping the hat (x's neighbor off C') open.
            std::set<Vertex> on_cycle(plan.cycle.begin(), plan.cycle.end());
            Vertex hat = plan.path.size() > 1 ? plan.path[1] : -1;
            std::vector<std::pair<int, Vertex>> tail;
            for (std::size_t i = 2; i < plan.path.size(); ++i) {
                Vertex v = plan.path[i];
                if (v != hat && !on_cycle.count(v) &&
                    std::binary_search(plan.second_component.begin(), plan.second_component.end(), v))
                    tail.emplace_back(static_cast<int>(i), v);
            }
            std::sort(tail.rbegin(), tail.rend());
            for (auto [dist, v] : tail)
                if (region.kept(v))
                    c.colors[v] = region.free_color(v, c, palette);
        }
        for (Vertex v : plan.first_component)
            c.colors[v] = Coloring::uncolored;
    }
    for (Vertex v : sq.deleted)
        c.colors[v] = Coloring::uncolored;

    finish_region(region, c, palette);

    for (Vertex v : sq.deleted) {
        std::vector<char> used(palette + 1, 0);
        for (Vertex w : g.neighbors(v))
            for (Vertex x : g.neighbors(w))
                if (x != v && c.is_colored(x))
                    used[c.colors[x]] = 1;
        int col = 1;
        while (col <= palette && used[col])
            ++col;
        if (col > palette)
            throw ExtensionImpossible("pruned vertex " + std::to_string(g.label(v)) + " has no free color");
        c.colors[v] = col;
    }
    if (auto bad = verify_injective(g, c))
        throw ExtensionImpossible("K-subgraph extension produced a conflict at " + std::to_string(bad->u) + ", " +
                                  std::to_string(bad->v));
    return c;
}

} // namespace injcol
