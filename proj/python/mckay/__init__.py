"""Poincare series for tensor-power multiplicities via representation graphs."""

from ._mckay import (
    McKayError,
    RepGraph,
    bratteli,
    catalog,
    chebyshev_p,
    chebyshev_T,
    chebyshev_U,
    closed_form,
    exceptional_m0,
    graph_from_chartable,
    mckay_graph,
    molien,
    parse_group,
    series,
    verify,
    walk_counts,
)

__all__ = [
    "McKayError",
    "RepGraph",
    "bratteli",
    "catalog",
    "chebyshev_p",
    "chebyshev_T",
    "chebyshev_U",
    "closed_form",
    "exceptional_m0",
    "graph_from_chartable",
    "mckay_graph",
    "molien",
    "parse_group",
    "series",
    "verify",
    "walk_counts",
]
