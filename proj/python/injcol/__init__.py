"""Injective coloring of sparse graphs with at most max degree + 2 colors."""

from ._core import (
    BadParameter,
    CaseMismatch,
    ConfigPresent,
    DeficitFound,
    GenerationFailed,
    Graph,
    GraphError,
    HypothesisViolated,
    ParseError,
    Stalled,
    chi_i,
    color_injective,
    discharge,
    find_config,
    gen,
    girth,
    hypothesis_bound,
    mad,
    mad_witness,
    neighboring_graph,
    parse_dimacs,
    parse_edgelist,
    reduction_trace,
    satisfies_hypothesis,
    to_dimacs,
    to_edgelist,
    verify_injective,
)

__all__ = [name for name in dir() if not name.startswith("_")]
