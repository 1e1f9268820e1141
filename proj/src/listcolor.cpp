#include "injcol/listcolor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace injcol {

ListAssignment::ListAssignment(std::vector<std::vector<int>> l) : lists(std::move(l))
{
    for (auto& list : lists) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

ListAssignment ListAssignment::uniform(int vertex_count, int k)
{
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 1);
    return ListAssignment(std::vector<std::vector<int>>(vertex_count, all));
}

ListAssignment ListAssignment::residual(const Graph& constraint, const Coloring& partial, int palette)
{
    ListAssignment out;
    out.lists.resize(constraint.vertex_count());
    std::vector<char> used(palette + 1);
    for (Vertex v = 0; v < constraint.vertex_count(); ++v) {
        std::fill(used.begin(), used.end(), 0);
        for (Vertex w : constraint.neighbors(v))
            if (partial.is_colored(w) && partial.colors[w] <= palette)
                used[partial.colors[w]] = 1;
        for (int c = 1; c <= palette; ++c)
            if (!used[c])
                out.lists[v].push_back(c);
    }
    return out;
}

bool ListAssignment::allows(Vertex v, int color) const
{
    return std::binary_search(lists[v].begin(), lists[v].end(), color);
}

int ListAssignment::max_color() const
{
    int best = 0;
    for (const auto& l : lists)
        if (!l.empty())
            best = std::max(best, l.back());
    return best;
}

ListAssignment ListAssignment::restricted(const VertexSet& keep) const
{
    ListAssignment out;
    for (Vertex v : keep)
        out.lists.push_back(lists[v]);
    return out;
}

namespace {

int greedy_clique_size(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int best = n > 0 ? 1 : 0;
    for (Vertex start : order) {
        std::vector<Vertex> clique{start};
        for (Vertex cand : order) {
            if (cand == start)
                continue;
            bool all = std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.has_edge(c, cand); });
            if (all)
                clique.push_back(cand);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

class Dsatur {
public:
    Dsatur(const Graph& g, int k) : g_(g), k_(k), color_(g.vertex_count(), 0),
                                    seen_(g.vertex_count(), std::vector<int>(k + 1, 0)),
                                    saturation_(g.vertex_count(), 0)
    {
    }

    bool solve(int colored, int used)
    {
        if (colored == g_.vertex_count())
            return true;
        Vertex v = pick();
        int limit = std::min(k_, used + 1); // a fresh color is interchangeable with any other fresh one
        for (int c = 1; c <= limit; ++c) {
            if (seen_[v][c])
                continue;
            assign(v, c, +1);
            if (solve(colored + 1, std::max(used, c)))
                return true;
            assign(v, c, -1);
        }
        return false;
    }

    const std::vector<int>& colors() const { return color_; }

private:
    Vertex pick() const
    {
        Vertex best = -1;
        int best_sat = -1, best_deg = -1;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (color_[v])
                continue;
            int deg = 0;
            for (Vertex w : g_.neighbors(v))
                deg += color_[w] == 0;
            if (saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
                best = v;
                best_sat = saturation_[v];
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(Vertex v, int c, int delta)
    {
        color_[v] = delta > 0 ? c : 0;
        for (Vertex w : g_.neighbors(v)) {
            int& cnt = seen_[w][c];
            if (delta > 0 && cnt++ == 0)
                ++saturation_[w];
            else if (delta < 0 && --cnt == 0)
                --saturation_[w];
        }
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<std::vector<int>> seen_;
    std::vector<int> saturation_;
};

} // namespace

std::optional<Coloring> chi_exact(const Graph& g, int upper_bound)
{
    if (upper_bound < 1)
        throw std::invalid_argument("chi_exact: upper_bound must be at least 1");
    const int n = g.vertex_count();
    if (n == 0)
        return Coloring(0, 0);
    int lower = std::max(1, greedy_clique_size(g));
    for (int k = lower; k <= upper_bound; ++k) {
        Dsatur search(g, k);
        if (search.solve(0, 0)) {
            Coloring c(n, k);
            c.colors = search.colors();
            return c;
        }
    }
    return std::nullopt;
}

namespace {

class ListSearch {
public:
    ListSearch(const Graph& g, const ListAssignment& lists) : g_(g)
    {
        std::map<int, int> index;
        for (const auto& l : lists.lists)
            for (int c : l)
                index.emplace(c, 0);
        for (auto& [c, i] : index) {
            i = static_cast<int>(palette_.size());
            palette_.push_back(c);
        }
        const int n = g.vertex_count();
        const int k = static_cast<int>(palette_.size());
        blocked_.assign(n, std::vector<int>(k, 1));
        available_.assign(n, 0);
        for (Vertex v = 0; v < n; ++v)
            for (int c : lists.lists[v]) {
                blocked_[v][index[c]] = 0;
                ++available_[v];
            }
        color_.assign(n, -1);
    }

    bool solve(int remaining)
    {
        if (remaining == 0)
            return true;
        Vertex v = pick();
        if (available_[v] == 0)
            return false;
        for (int c = 0; c < static_cast<int>(palette_.size()); ++c) {
            if (blocked_[v][c])
                continue;
            bool wiped = place(v, c, +1);
            if (!wiped && solve(remaining - 1))
                return true;
            place(v, c, -1);
        }
        return false;
    }

    std::vector<int> colors() const
    {
        std::vector<int> out(color_.size());
        for (std::size_t v = 0; v < color_.size(); ++v)
            out[v] = color_[v] < 0 ? Coloring::uncolored : palette_[color_[v]];
        return out;
    }

    int max_color() const { return palette_.empty() ? 0 : palette_.back(); }

private:
    Vertex pick() const
    {
        Vertex best = -1;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (color_[v] >= 0)
                continue;
            if (best < 0 || available_[v] < available_[best] ||
                (available_[v] == available_[best] && g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

    /// Returns true if some uncolored neighbor lost its last color.
    bool place(Vertex v, int c, int delta)
    {
        color_[v] = delta > 0 ? c : -1;
        bool wiped = false;
        for (Vertex w : g_.neighbors(v)) {
            if (color_[w] >= 0 && w != v)
                continue;
            int& b = blocked_[w][c];
            if (delta > 0) {
                if (b++ == 0 && --available_[w] == 0)
                    wiped = true;
            } else if (--b == 0) {
                ++available_[w];
            }
        }
        return wiped;
    }

    const Graph& g_;
    std::vector<int> palette_;
    std::vector<std::vector<int>> blocked_;
    std::vector<int> available_;
    std::vector<int> color_;
};

} // namespace

std::optional<Coloring> list_color_exact(const Graph& g, const ListAssignment& lists)
{
    if (static_cast<int>(lists.lists.size()) != g.vertex_count())
        throw std::invalid_argument("list assignment does not cover the graph");
    ListSearch search(g, lists);
    if (!search.solve(g.vertex_count()))
        return std::nullopt;
    Coloring c(g.vertex_count(), search.max_color());
    c.colors = search.colors();
    return c;
}

bool is_clique_or_odd_cycle(const Graph& block)
{
    const int n = block.vertex_count();
    if (block.edge_count() == n * (n - 1) / 2)
        return true;
    if (n % 2 == 1 && n >= 3) {
        for (Vertex v = 0; v < n; ++v)
            if (block.degree(v) != 2)
                return false;
        return is_connected(block);
    }
    return false;
}

GallaiCheck is_gallai_structure(const Graph& g)
{
    if (!is_connected(g))
        throw GraphError(GraphError::Kind::Disconnected, "graph is not connected");
    GallaiCheck out;
    for (auto& b : blocks(g))
        if (!is_clique_or_odd_cycle(b.graph)) {
            out.violating = std::move(b);
            return out;
        }
    out.gallai = true;
    return out;
}

namespace {

void require_degree_lists(const Graph& g, const ListAssignment& lists)
{
    if (static_cast<int>(lists.lists.size()) != g.vertex_count())
        throw std::invalid_argument("list assignment does not cover the graph");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (lists.size(v) < g.degree(v))
            throw PreconditionViolated(v, "list smaller than degree");
}

int smallest_free(const Graph& g, const std::vector<int>& colors, const std::vector<int>& list, Vertex v)
{
    for (int c : list) {
        bool clash = false;
        for (Vertex w : g.neighbors(v))
            if (colors[w] == c) {
                clash = true;
                break;
            }
        if (!clash)
            return c;
    }
    return Coloring::uncolored;
}

/// Greedy in the given order; returns false if some vertex has no free color.
bool greedy_in_order(const Graph& g, const ListAssignment& lists, const std::vector<Vertex>& order,
                     std::vector<int>& colors)
{
    for (Vertex v : order) {
        int c = smallest_free(g, colors, lists.lists[v], v);
        if (c == Coloring::uncolored)
            return false;
        colors[v] = c;
    }
    return true;
}

/// Vertices outside `sources` by non-increasing BFS distance from them (ties by id).
std::vector<Vertex> farthest_first(const Graph& g, const VertexSet& sources)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    for (Vertex s : sources) {
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (dist[v] > 0)
            order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });
    return order;
}

ListAssignment without_color_near(const Graph& g, const ListAssignment& lists, const VertexSet& colored, int c)
{
    ListAssignment out = lists;
    for (Vertex x : colored)
        for (Vertex w : g.neighbors(x)) {
            auto& l = out.lists[w];
            l.erase(std::remove(l.begin(), l.end(), c), l.end());
        }
    return out;
}

/// Colors `block` (2-connected, not a clique, not an odd cycle) from lists with
/// |L(v)| >= d(v). Writes into colors (indexed by block vertex).
bool color_two_connected(const Graph& block, const ListAssignment& lists, std::vector<int>& colors)
{
    const int n = block.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (lists.size(v) > block.degree(v)) {
            colors = extend_surplus(block, lists, v).colors;
            return true;
        }

    auto color_rest = [&](const VertexSet& fixed, int c, Vertex spare) {
        ListAssignment reduced = without_color_near(block, lists, fixed, c);
        Graph rest = block.without(fixed);
        VertexSet keep;
        for (Vertex v = 0, j = 0; v < n; ++v) {
            if (j < static_cast<int>(fixed.size()) && fixed[j] == v) {
                ++j;
                continue;
            }
            keep.push_back(v);
        }
        Vertex spare_local = static_cast<Vertex>(std::find(keep.begin(), keep.end(), spare) - keep.begin());
        Coloring sub = extend_surplus(rest, reduced.restricted(keep), spare_local);
        for (std::size_t i = 0; i < keep.size(); ++i)
            colors[keep[i]] = sub.colors[i];
        for (Vertex x : fixed)
            colors[x] = c;
    };

    // Adjacent vertices with different lists: give one a color the other lacks.
    for (auto [a, b] : block.edges()) {
        if (lists.lists[a] == lists.lists[b])
            continue;
        Vertex from = a, to = b;
        auto pick_missing = [&](Vertex x, Vertex y) {
            for (int c : lists.lists[x])
                if (!lists.allows(y, c))
                    return c;
            return Coloring::uncolored;
        };
        int c = pick_missing(a, b);
        if (c == Coloring::uncolored) {
            std::swap(from, to);
            c = pick_missing(b, a);
        }
        color_rest({from}, c, to);
        return true;
    }

    // Identical lists of size d(v): the block is regular.
    const int k = block.degree(0);
    const auto& common = lists.lists[0];
    if (k == 2) {
        // Even cycle: alternate the two colors around it.
        Vertex prev = -1, cur = 0;
        for (int step = 0; step < n; ++step) {
            colors[cur] = common[step % 2];
            auto nb = block.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        return true;
    }
    // Two nonadjacent neighbors x, y of z whose removal keeps the block connected.
    for (Vertex z = 0; z < n; ++z) {
        auto nb = block.neighbors(z);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex x = nb[i], y = nb[j];
                if (block.has_edge(x, y))
                    continue;
                if (!is_connected(block.without({x, y})))
                    continue;
                color_rest({x, y}, common.front(), z);
                return true;
            }
    }
    return false;
}

} // namespace

Coloring extend_surplus(const Graph& g, const ListAssignment& lists, Vertex y)
{
    require_degree_lists(g, lists);
    if (y < 0 || y >= g.vertex_count())
        throw std::invalid_argument("extend_surplus: root out of range");
    if (lists.size(y) <= g.degree(y))
        throw PreconditionViolated(y, "root has no spare color");
    if (!is_connected(g))
        throw GraphError(GraphError::Kind::Disconnected, "extend_surplus needs a connected graph");
    std::vector<Vertex> order = farthest_first(g, {y});
    order.push_back(y);
    std::vector<int> colors(g.vertex_count(), Coloring::uncolored);
    if (!greedy_in_order(g, lists, order, colors))
        throw std::logic_error("extend_surplus: greedy ran out of colors");
    Coloring c(g.vertex_count(), lists.max_color());
    c.colors = std::move(colors);
    return c;
}

std::optional<Coloring> degree_choosable_color(const Graph& g, const ListAssignment& lists)
{
    require_degree_lists(g, lists);
    if (!is_connected(g))
        throw GraphError(GraphError::Kind::Disconnected, "degree_choosable_color needs a connected graph");
    const int n = g.vertex_count();
    if (n == 0)
        return Coloring(0, 0);
    for (Vertex v = 0; v < n; ++v)
        if (lists.size(v) > g.degree(v))
            return extend_surplus(g, lists, v);

    GallaiCheck gallai = is_gallai_structure(g);
    if (!gallai.gallai) {
        const Block& b = *gallai.violating;
        std::vector<int> colors(n, Coloring::uncolored);
        // Outside the block, farthest first: each vertex keeps an uncolored
        // neighbor on its way to the block.
        if (!greedy_in_order(g, lists, farthest_first(g, b.vertices), colors))
            throw std::logic_error("degree_choosable_color: greedy outside block failed");
        ListAssignment inner;
        for (Vertex v : b.vertices) {
            std::vector<int> l;
            for (int c : lists.lists[v]) {
                bool clash = false;
                for (Vertex w : g.neighbors(v))
                    clash = clash || colors[w] == c;
                if (!clash)
                    l.push_back(c);
            }
            inner.lists.push_back(std::move(l));
        }
        std::vector<int> block_colors(b.vertices.size(), Coloring::uncolored);
        if (color_two_connected(b.graph, inner, block_colors)) {
            for (std::size_t i = 0; i < b.vertices.size(); ++i)
                colors[b.vertices[i]] = block_colors[i];
            Coloring c(n, lists.max_color());
            c.colors = std::move(colors);
            return c;
        }
        throw std::logic_error("degree_choosable_color: no Brooks triple in a regular block");
    }

    if (n > kDegreeChoosableSearchCap)
        throw FallbackExceeded(n, kDegreeChoosableSearchCap);
    return list_color_exact(g, lists);
}

} // namespace injcol
