from fractions import Fraction

import pytest

import injcol
from injcol import gen


def test_fano_minus_vertex():
    g = gen.fano_minus_vertex()
    assert (g.n, g.m) == (13, 18)
    assert injcol.mad(g) == Fraction(36, 13)
    chi, colors = injcol.chi_i(g)
    assert chi == 6
    assert injcol.verify_injective(g, colors) is None
    with pytest.raises(injcol.HypothesisViolated):
        injcol.color_injective(g)


def test_subdivided_heawood_gets_five_colors():
    g = gen.subdivide(gen.heawood(), 1)
    r = injcol.color_injective(g)
    assert max(r["colors"]) <= 5
    assert r["mad"] == Fraction(84, 35)
    assert injcol.verify_injective(g, r["colors"]) is None
    assert sum(len(s["removed"]) for s in r["trace"]) == g.n


def test_tampered_coloring_is_reported():
    g = gen.path(3)
    assert injcol.verify_injective(g, [1, 2, 1]) == (0, 2, 1)
    assert injcol.verify_injective(g, [1, 1, 2]) is None


def test_graph_construction_and_errors():
    g = injcol.Graph(3, [(0, 1), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.neighbors(1) == [0, 2]
    assert g == gen.path(3)
    with pytest.raises(injcol.GraphError):
        injcol.Graph(2, [(0, 0)])
    with pytest.raises(injcol.BadParameter):
        gen.cycle(2)


def test_parse_and_emit_round_trip():
    g = injcol.parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == gen.complete(3)
    assert injcol.parse_dimacs(injcol.to_dimacs(gen.petersen())) == gen.petersen()
    assert injcol.parse_edgelist(injcol.to_edgelist(gen.heawood())) == gen.heawood()
    with pytest.raises(injcol.ParseError):
        injcol.parse_dimacs("e 1 2\n")


def test_random_sparse_respects_the_bound():
    g = gen.random_sparse(30, 3, Fraction(36, 13), 1)
    assert g.max_degree == 3
    assert injcol.mad(g) < Fraction(36, 13)
    assert injcol.satisfies_hypothesis(g, "36/13")


def test_reductions_and_discharging():
    trace = injcol.reduction_trace(gen.subdivide(gen.complete(5), 1))
    assert any(s["tag"] == "KSubgraph" for s in trace)
    assert injcol.find_config(gen.heawood()) is None
    assert injcol.find_config(gen.path(4))["tag"] == "RC1"
    ledger = injcol.discharge(gen.heawood())
    assert ledger["conserved"] is True
    assert set(ledger["final"]) == {"3/1"}
    with pytest.raises(injcol.ConfigPresent):
        injcol.discharge(gen.star(3))


def test_force_mode():
    r = injcol.color_injective(gen.petersen(), mode="force")
    assert r["fallback_vertices"] == 10
    assert injcol.verify_injective(gen.petersen(), r["colors"]) is None
    with pytest.raises(injcol.Stalled):
        injcol.color_injective(gen.fano_minus_vertex(), mode="force")
