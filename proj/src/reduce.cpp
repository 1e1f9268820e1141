#include "injcol/reduce.hpp"

#include <algorithm>

#include "injcol/listcolor.hpp"

namespace injcol {

CaseSpec CaseSpec::for_delta(int delta)
{
    if (delta < 3)
        throw std::invalid_argument("no reducible configurations for maximum degree " + std::to_string(delta));
    DeltaCase kind = delta == 3 ? DeltaCase::D3 : delta == 4 ? DeltaCase::D4 : delta == 5 ? DeltaCase::D5
                                                                                          : DeltaCase::D6Plus;
    return {kind, delta};
}

std::string to_string(DeltaCase c)
{
    switch (c) {
    case DeltaCase::D3: return "D3";
    case DeltaCase::D4: return "D4";
    case DeltaCase::D5: return "D5";
    case DeltaCase::D6Plus: return "D6plus";
    }
    return "?";
}

std::string to_string(ConfigTag t)
{
    switch (t) {
    case ConfigTag::RC1: return "RC1";
    case ConfigTag::RC2: return "RC2";
    case ConfigTag::RC3: return "RC3";
    case ConfigTag::RC4: return "RC4";
    case ConfigTag::RC5: return "RC5";
    case ConfigTag::KSubgraph: return "KSubgraph";
    }
    return "?";
}

namespace {

void check_case(const Graph& g, CaseSpec cs)
{
    bool consistent = (cs.kind == DeltaCase::D3 && cs.delta == 3) || (cs.kind == DeltaCase::D4 && cs.delta == 4) ||
                      (cs.kind == DeltaCase::D5 && cs.delta == 5) || (cs.kind == DeltaCase::D6Plus && cs.delta >= 6);
    if (!consistent)
        throw CaseMismatch("case " + to_string(cs.kind) + " does not fit delta " + std::to_string(cs.delta));
    if (g.max_degree() > cs.delta)
        throw CaseMismatch("maximum degree " + std::to_string(g.max_degree()) + " exceeds case delta " +
                           std::to_string(cs.delta));
}

std::vector<Vertex> two_neighbors(const Graph& g, Vertex v)
{
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
        if (g.degree(w) == 2)
            out.push_back(w);
    return out;
}

Config make(ConfigTag tag, CaseSpec cs, Vertex anchor, VertexSet vs)
{
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Config{tag, cs, anchor, std::move(vs), std::nullopt};
}

/// Adjacent 3-vertices that each see a 2-vertex.
std::optional<Config> adjacent_threes_with_twos(const Graph& g, CaseSpec cs, ConfigTag tag)
{
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        if (g.degree(a) != 3)
            continue;
        auto ta = two_neighbors(g, a);
        if (ta.empty())
            continue;
        for (Vertex b : g.neighbors(a)) {
            if (g.degree(b) != 3)
                continue;
            auto tb = two_neighbors(g, b);
            if (tb.empty())
                continue;
            return make(tag, cs, a, {a, b, ta.front(), tb.front()});
        }
    }
    return std::nullopt;
}

/// A 3-vertex with exactly one 2-neighbor whose other two neighbors pass `others`.
template <class Pred>
std::optional<Config> three_with_one_two(const Graph& g, CaseSpec cs, ConfigTag tag, Pred others)
{
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) != 3)
            continue;
        auto twos = two_neighbors(g, u);
        if (twos.size() != 1)
            continue;
        std::vector<Vertex> rest;
        for (Vertex w : g.neighbors(u))
            if (w != twos.front())
                rest.push_back(w);
        if (others(rest[0], rest[1]))
            return make(tag, cs, u, {u, twos.front()});
    }
    return std::nullopt;
}

} // namespace

std::optional<Config> find_config(const Graph& g, CaseSpec cs)
{
    check_case(g, cs);
    const int n = g.vertex_count();

    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) <= 1)
            return make(ConfigTag::RC1, cs, v, {v});

    for (Vertex u = 0; u < n; ++u)
        if (g.degree(u) == 2)
            for (Vertex v : g.neighbors(u))
                if (g.degree(v) == 2)
                    return make(ConfigTag::RC2, cs, u, {u, v});

    for (Vertex u = 0; u < n; ++u)
        if (g.degree(u) == 3 && two_neighbors(g, u).size() >= 2)
            return make(ConfigTag::RC3, cs, u, closed_two_neighborhood(g, u));

    switch (cs.kind) {
    case DeltaCase::D3:
        return adjacent_threes_with_twos(g, cs, ConfigTag::RC4);
    case DeltaCase::D4:
        if (auto c = three_with_one_two(g, cs, ConfigTag::RC4,
                                        [&](Vertex x, Vertex y) { return g.degree(x) == 3 && g.degree(y) == 3; }))
            return c;
        return adjacent_threes_with_twos(g, cs, ConfigTag::RC5);
    case DeltaCase::D5:
        return three_with_one_two(g, cs, ConfigTag::RC4,
                                  [&](Vertex x, Vertex y) { return g.degree(x) + g.degree(y) <= 7; });
    case DeltaCase::D6Plus: {
        if (auto c = three_with_one_two(g, cs, ConfigTag::RC4, [&](Vertex x, Vertex y) {
                return g.degree(x) + g.degree(y) <= cs.delta + 2;
            }))
            return c;
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) != 4)
                continue;
            auto twos = two_neighbors(g, u);
            if (twos.size() != 4)
                continue;
            for (Vertex t : twos) {
                auto nb = g.neighbors(t);
                Vertex other = nb[0] == u ? nb[1] : nb[0];
                if (g.degree(other) < cs.delta)
                    return make(ConfigTag::RC5, cs, u, closed_two_neighborhood(g, u));
            }
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

std::optional<Config> find_k_reduction(const Graph& g, CaseSpec cs)
{
    if (cs.kind != DeltaCase::D4 && cs.kind != DeltaCase::D5)
        return std::nullopt;
    AuxGraph h = build_aux_H(g, cs);
    for (const auto& comp : component_surplus(h, g)) {
        if (comp.surplus >= Rational(0))
            continue;
        try {
            KSubgraphPlan plan = plan_k_subgraph(g, h, comp.nodes);
            Config c{ConfigTag::KSubgraph, cs, plan.u, closed_two_neighborhood(g, plan.u), std::move(plan)};
            return c;
        } catch (const StructureViolation&) {
            continue;
        }
    }
    return std::nullopt;
}

PeelResult peel(const Graph& g, const Config& cfg)
{
    PeelResult out{g.without(cfg.vertices), ReductionStep{cfg, {}}};
    for (Vertex v : cfg.vertices)
        out.step.removed_labels.push_back(g.label(v));
    std::sort(out.step.removed_labels.begin(), out.step.removed_labels.end());
    return out;
}

Coloring extend(const Graph& g, const ReductionStep& step, const Coloring& partial, int palette)
{
    const Config& cfg = step.config;
    if (static_cast<int>(partial.colors.size()) != g.vertex_count())
        throw std::invalid_argument("extend: coloring does not match graph");
    if (cfg.tag == ConfigTag::KSubgraph)
        return color_via_K(g, *cfg.plan, partial, cfg.cs);

    Coloring c = partial;
    c.palette = palette;
    const VertexSet& s = cfg.vertices;
    for (Vertex v : s)
        c.colors[v] = Coloring::uncolored;

    // Constraint graph on S and residual lists from the colored rest.
    std::vector<int> index(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        index[s[i]] = i;
    GraphBuilder local(static_cast<int>(s.size()));
    ListAssignment lists;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        std::vector<char> forbidden(palette + 1, 0);
        for (Vertex w : g.neighbors(s[i]))
            for (Vertex x : g.neighbors(w)) {
                if (x == s[i])
                    continue;
                if (index[x] >= 0)
                    local.add_edge(i, index[x]);
                else if (c.is_colored(x) && c.colors[x] <= palette)
                    forbidden[c.colors[x]] = 1;
            }
        std::vector<int> l;
        for (int col = 1; col <= palette; ++col)
            if (!forbidden[col])
                l.push_back(col);
        lists.lists.push_back(std::move(l));
    }
    auto found = list_color_exact(std::move(local).build(), lists);
    if (!found)
        throw ExtensionImpossible(to_string(cfg.tag) + " at vertex " + std::to_string(g.label(cfg.anchor)) +
                                  " cannot be extended with " + std::to_string(palette) + " colors");
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        c.colors[s[i]] = found->colors[i];
    return c;
}

} // namespace injcol
