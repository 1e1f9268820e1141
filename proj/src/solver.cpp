#include "injcol/solver.hpp"

#include <algorithm>
#include <chrono>

#include "injcol/density.hpp"
#include "injcol/listcolor.hpp"

namespace injcol {

Rational hypothesis_bound(int delta)
{
    if (delta < 3)
        throw std::invalid_argument("no hypothesis bound below maximum degree 3");
    return delta == 3 ? Rational(36, 13) : Rational(14, 5);
}

namespace {

constexpr int kFallbackCap = 24;

/// Each component of G^(2) is a path or a cycle: two colors, three for odd cycles.
Coloring color_low_degree(const Graph& comp)
{
    Graph sq = neighboring_graph(comp);
    Coloring c(comp.vertex_count(), 0);
    for (const auto& part : connected_components(sq)) {
        Vertex start = part.front();
        for (Vertex v : part)
            if (sq.degree(v) < sq.degree(start))
                start = v;
        Vertex prev = -1, cur = start;
        int step = 0;
        while (cur >= 0 && !c.is_colored(cur)) {
            c.colors[cur] = 1 + step % 2;
            ++step;
            Vertex next = -1;
            for (Vertex w : sq.neighbors(cur))
                if (w != prev && !c.is_colored(w)) {
                    next = w;
                    break;
                }
            prev = cur;
            cur = next;
        }
        if (part.size() > 1 && part.size() % 2 == 1 && sq.degree(start) == 2)
            c.colors[prev] = 3;
    }
    c.palette = std::max(c.max_color(), 0);
    return c;
}

struct Peeled {
    std::vector<ReductionStep> steps; ///< removed_labels hold ids of the component
    Graph rest;                      ///< what was left when peeling stopped
};

Peeled peel_all(const Graph& comp, CaseSpec cs)
{
    Peeled out;
    Graph cur = comp;
    while (!cur.empty()) {
        auto cfg = find_config(cur, cs);
        if (!cfg && (cs.kind == DeltaCase::D4 || cs.kind == DeltaCase::D5))
            cfg = find_k_reduction(cur, cs);
        if (!cfg)
            break;
        PeelResult p = peel(cur, *cfg);
        out.steps.push_back(std::move(p.step));
        cur = std::move(p.rest);
    }
    out.rest = std::move(cur);
    return out;
}

Graph identity_labeled(const Graph& g)
{
    Graph out = g;
    std::vector<Vertex> ids(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        ids[v] = v;
    out.set_labels(std::move(ids));
    return out;
}

} // namespace

SolveResult color_injective(const Graph& input, SolveMode mode)
{
    auto started = std::chrono::steady_clock::now();
    const Graph g = identity_labeled(input);
    SolveResult res;
    res.coloring = Coloring(g.vertex_count(), 0);
    if (!g.empty())
        res.report.mad = mad_exact(g).density;

    for (const auto& part : connected_components(g)) {
        ++res.report.components;
        const Graph comp = g.induced(part); // labels: ids of g
        const int delta = comp.max_degree();
        Coloring local;
        if (delta <= 2) {
            local = color_low_degree(comp);
        } else {
            if (mode == SolveMode::Strict) {
                Rational bound = hypothesis_bound(delta);
                Rational mad = mad_exact(comp).density;
                if (mad >= bound)
                    throw HypothesisViolated(mad, bound);
            }
            const CaseSpec cs = CaseSpec::for_delta(delta);
            const int palette = cs.palette();
            // Peel on a copy labeled by component ids so steps index it directly.
            const Graph base = identity_labeled(comp);
            Peeled peeled = peel_all(base, cs);
            local = Coloring(base.vertex_count(), palette);

            VertexSet alive(peeled.rest.labels().begin(), peeled.rest.labels().end());
            if (!peeled.rest.empty()) {
                const int left = peeled.rest.vertex_count();
                if (mode == SolveMode::Strict || left > kFallbackCap)
                    throw Stalled("no reduction applies to a " + std::to_string(left) + "-vertex remainder");
                auto exact = chi_exact(neighboring_graph(peeled.rest), palette);
                if (!exact)
                    throw Stalled("remainder of " + std::to_string(left) + " vertices needs more than " +
                                  std::to_string(palette) + " colors");
                for (Vertex i = 0; i < left; ++i)
                    local.colors[alive[i]] = exact->colors[i];
                res.report.fallback_vertices += left;
            }

            for (auto it = peeled.steps.rbegin(); it != peeled.steps.rend(); ++it) {
                VertexSet next;
                std::set_union(alive.begin(), alive.end(), it->removed_labels.begin(), it->removed_labels.end(),
                               std::back_inserter(next));
                alive = std::move(next);
                Graph sub = base.induced(alive);
                Coloring partial(sub.vertex_count(), palette);
                for (Vertex i = 0; i < sub.vertex_count(); ++i)
                    partial.colors[i] = local.colors[alive[i]];
                Coloring done = extend(sub, *it, partial, palette);
                for (Vertex i = 0; i < sub.vertex_count(); ++i)
                    local.colors[alive[i]] = done.colors[i];
            }
            for (auto& step : peeled.steps) {
                for (Vertex& v : step.removed_labels)
                    v = comp.label(v);
                res.report.trace.push_back(std::move(step));
            }
            local.palette = palette;
        }
        for (Vertex i = 0; i < comp.vertex_count(); ++i)
            res.coloring.colors[comp.label(i)] = local.colors[i];
        res.report.palette = std::max(res.report.palette, local.palette);
    }
    res.coloring.palette = res.report.palette;

    if (auto bad = verify_injective(g, res.coloring))
        throw std::logic_error("solver produced a non-injective coloring at " + std::to_string(bad->u) + ", " +
                               std::to_string(bad->v));
    res.report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return res;
}

std::vector<ReductionStep> reduction_trace(const Graph& input)
{
    const Graph g = identity_labeled(input);
    std::vector<ReductionStep> trace;
    for (const auto& part : connected_components(g)) {
        const Graph comp = g.induced(part);
        Peeled peeled = peel_all(comp, CaseSpec::for_delta(std::max(3, comp.max_degree())));
        if (!peeled.rest.empty())
            throw Stalled("no reduction applies to a " + std::to_string(peeled.rest.vertex_count()) +
                          "-vertex remainder");
        for (auto& s : peeled.steps)
            trace.push_back(std::move(s));
    }
    return trace;
}

} // namespace injcol
