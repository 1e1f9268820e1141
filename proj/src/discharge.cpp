#include "injcol/discharge.hpp"

#include <algorithm>
#include <set>

namespace injcol {

bool ChargeLedger::conserved() const
{
    Rational a, b = bank;
    for (const auto& r : initial)
        a += r;
    for (const auto& r : final)
        b += r;
    if (a != b)
        return false;
    return std::all_of(log.begin(), log.end(), [](const ChargeTransfer& t) { return t.amount > Rational(0); });
}

Rational ChargeLedger::min_final() const
{
    if (final.empty())
        throw std::invalid_argument("empty ledger has no minimum");
    return *std::min_element(final.begin(), final.end());
}

const ChargeSnapshot* ChargeLedger::snapshot(const std::string& name) const
{
    for (const auto& s : snapshots)
        if (s.name == name)
            return &s;
    return nullptr;
}

bool average_degree_certificate(const ChargeLedger& ledger, const Rational& bound)
{
    if (!ledger.conserved() || ledger.bank < Rational(0))
        return false;
    return std::all_of(ledger.final.begin(), ledger.final.end(), [&](const Rational& r) { return r >= bound; });
}

namespace {

class Accountant {
public:
    Accountant(const Graph& g, Traversal order) : order_(order)
    {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            ledger_.initial.emplace_back(g.degree(v));
        charge_ = ledger_.initial;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            visit_.push_back(v);
        if (order == Traversal::Descending)
            std::reverse(visit_.begin(), visit_.end());
    }

    const std::vector<Vertex>& vertices() const { return visit_; }
    Traversal order() const { return order_; }
    const Rational& charge(Vertex v) const { return charge_[v]; }

    void give(const char* rule, Vertex donor, Vertex recipient, const Rational& amount)
    {
        if (amount <= Rational(0))
            return;
        (donor == kBank ? ledger_.bank : charge_[donor]) -= amount;
        (recipient == kBank ? ledger_.bank : charge_[recipient]) += amount;
        ledger_.log.push_back({rule, donor, recipient, amount});
    }

    void snapshot(const char* name) { ledger_.snapshots.push_back({name, charge_}); }

    ChargeLedger finish()
    {
        ledger_.final = charge_;
        if (!ledger_.conserved())
            throw std::logic_error("discharging ledger is not conserved");
        return std::move(ledger_);
    }

private:
    Traversal order_;
    ChargeLedger ledger_;
    std::vector<Rational> charge_;
    std::vector<Vertex> visit_;
};

template <class Seq>
auto ordered(const Seq& s, Traversal order)
{
    std::vector<Vertex> out(s.begin(), s.end());
    if (order == Traversal::Descending)
        std::reverse(out.begin(), out.end());
    return out;
}

int count_deg(const Graph& g, Vertex v, int d)
{
    int n = 0;
    for (Vertex w : g.neighbors(v))
        n += g.degree(w) == d;
    return n;
}

void require_no_config(const Graph& g, CaseSpec cs)
{
    if (auto c = find_config(g, cs))
        throw ConfigPresent(*c);
}

void assert_bound(const ChargeLedger& l, const Rational& bound, bool negative_surplus)
{
    for (Vertex v = 0; v < static_cast<int>(l.final.size()); ++v)
        if (l.final[v] < bound)
            throw DeficitFound(v, l.final[v], negative_surplus);
}

/// R1.1 of both two-phase systems and R1 of the maximum degree 6+ system.
void give_to_adjacent_twos(const Graph& g, Accountant& acc, const char* rule)
{
    for (Vertex v : acc.vertices())
        if (g.degree(v) >= 3)
            for (Vertex w : ordered(g.neighbors(v), acc.order()))
                if (g.degree(w) == 2)
                    acc.give(rule, v, w, Rational(2, 5));
}

} // namespace

ChargeLedger discharge_thm2(const Graph& g, Traversal order)
{
    if (g.max_degree() != 3)
        throw CaseMismatch("discharge_thm2 needs maximum degree 3, got " + std::to_string(g.max_degree()));
    require_no_config(g, CaseSpec::for_delta(3));

    Accountant acc(g, order);
    for (Vertex v : acc.vertices()) {
        if (g.degree(v) != 3)
            continue;
        for (Vertex w : ordered(g.neighbors(v), order))
            if (g.degree(w) == 2)
                acc.give("R1", v, w, Rational(3, 13));
    }
    for (Vertex v : acc.vertices()) {
        if (g.degree(v) != 3)
            continue;
        // Distance-2 2-vertices, weighted by the number of common neighbors.
        std::vector<int> common(g.vertex_count(), 0);
        for (Vertex w : g.neighbors(v))
            for (Vertex x : g.neighbors(w))
                if (x != v && !g.has_edge(v, x))
                    ++common[x];
        for (Vertex x : acc.vertices())
            if (common[x] > 0 && g.degree(x) == 2)
                acc.give("R2", v, x, Rational(common[x], 13));
    }
    ChargeLedger l = acc.finish();
    assert_bound(l, Rational(36, 13), false);
    return l;
}

ChargeLedger discharge_lemma6(const Graph& g, std::optional<int> delta, Traversal order)
{
    const int d = delta.value_or(g.max_degree());
    if (d < 6 || g.max_degree() > d)
        throw CaseMismatch("discharge_lemma6 needs maximum degree at least 6");
    require_no_config(g, CaseSpec{DeltaCase::D6Plus, d});

    Accountant acc(g, order);
    give_to_adjacent_twos(g, acc, "R1");
    const int big = (d + 3 + 1) / 2;
    for (Vertex v : acc.vertices()) {
        if (g.degree(v) < big)
            continue;
        for (Vertex w : ordered(g.neighbors(v), order))
            if (g.degree(w) == 3 || g.degree(w) == 4)
                acc.give("R2", v, w, Rational(2, 5));
    }
    acc.snapshot("R2");
    std::vector<Rational> mid;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        mid.push_back(acc.charge(v));
    for (Vertex v : acc.vertices()) {
        if (g.degree(v) < 4)
            continue;
        int k = count_deg(g, v, 2);
        Rational excess = mid[v] - Rational(14, 5);
        if (k == 0 || excess <= Rational(0))
            continue;
        for (Vertex u : ordered(g.neighbors(v), order)) {
            if (g.degree(u) != 2)
                continue;
            Vertex other = g.neighbors(u)[0] == v ? g.neighbors(u)[1] : g.neighbors(u)[0];
            acc.give("R3", v, other, excess / Rational(k));
        }
    }
    ChargeLedger l = acc.finish();
    assert_bound(l, Rational(14, 5), false);
    return l;
}

ChargeLedger discharge_two_phase(const Graph& g, const AuxGraph& h, DeltaCase kind, Traversal order)
{
    if (kind != DeltaCase::D4 && kind != DeltaCase::D5)
        throw CaseMismatch("two-phase discharging is defined for D4 and D5 only");
    if (h.kind != kind)
        throw CaseMismatch("auxiliary graph was built for " + to_string(h.kind));
    const int delta = kind == DeltaCase::D4 ? 4 : 5;
    if (g.max_degree() != delta)
        throw CaseMismatch("maximum degree " + std::to_string(g.max_degree()) + " does not match " + to_string(kind));
    require_no_config(g, CaseSpec::for_delta(delta));

    Accountant acc(g, order);
    give_to_adjacent_twos(g, acc, "R1.1");
    for (Vertex u : acc.vertices()) {
        if (g.degree(u) != 3 || count_deg(g, u, 2) == 0)
            continue;
        if (kind == DeltaCase::D5 && count_deg(g, u, 4) != 2)
            continue;
        for (Vertex v : ordered(g.neighbors(u), order))
            if (g.degree(v) == 4)
                acc.give("R1.2", v, u, Rational(1, 5));
    }
    if (kind == DeltaCase::D5) {
        for (Vertex v : acc.vertices()) {
            if (g.degree(v) != 5)
                continue;
            for (Vertex w : ordered(g.neighbors(v), order)) {
                if (g.degree(w) == 3 && count_deg(g, w, 2) > 0)
                    acc.give("R1.3", v, w, Rational(2, 5));
                else if (g.degree(w) == 4)
                    acc.give("R1.3", v, w, Rational(1, 5));
            }
        }
    }
    acc.snapshot("phase1");

    std::vector<int> nodes(h.nodes.size());
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        nodes[i] = i;
    nodes = ordered(nodes, order);
    for (int node : nodes)
        if (h.degree(node) == 1)
            acc.give("R2.1", h.nodes[node].origin, kBank, Rational(1, 5));
    for (int node : nodes) {
        if (h.nodes[node].split_copy)
            continue;
        Vertex v = h.nodes[node].origin;
        if (is_v2223(g, v))
            acc.give("R2.2", kBank, v, Rational(1, 5));
        else if (is_v2222(g, v))
            acc.give("R2.3", kBank, v, Rational(2, 5));
    }
    acc.snapshot("phase2");

    if (kind == DeltaCase::D5) {
        std::vector<Rational> mid;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            mid.push_back(acc.charge(v));
        for (Vertex v : acc.vertices()) {
            if (g.degree(v) != 4 || mid[v] < Rational(3))
                continue;
            std::set<Vertex> targets;
            for (Vertex w : g.neighbors(v))
                if (g.degree(w) == 2)
                    for (Vertex x : g.neighbors(w))
                        if (x != v && g.degree(x) == 5)
                            targets.insert(x);
            for (Vertex x : ordered(targets, order))
                acc.give("R2.4", v, x, Rational(1, 15));
        }
    }

    ChargeLedger l = acc.finish();
    bool negative = false;
    for (const auto& s : component_surplus(h, g))
        negative = negative || s.surplus < Rational(0);
    assert_bound(l, Rational(14, 5), negative);
    return l;
}

} // namespace injcol
