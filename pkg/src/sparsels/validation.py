"""Input coercion shared by the estimators and the CLI."""
from __future__ import annotations

import numbers
from collections.abc import Iterable

from .errors import InputError
from .graph import Graph
from .properties import FiniteFamily, PropertySpec, RadiusBall, parse_property


def check_graph(G) -> Graph:
    """Accept a :class:`Graph`, an ``(n, edges)`` pair, or a networkx-style graph on ``0..n-1``."""
    if isinstance(G, Graph):
        return G
    if isinstance(G, tuple) and len(G) == 2 and isinstance(G[0], numbers.Integral):
        n, edges = G
        return Graph.from_edges(int(n), [(int(u), int(v)) for u, v in edges])
    if hasattr(G, "number_of_nodes") and hasattr(G, "edges"):
        nodes = sorted(G.nodes())
        if nodes != list(range(len(nodes))):
            raise InputError("graph nodes must be the integers 0..n-1")
        return Graph.from_edges(len(nodes), [(int(u), int(v)) for u, v in G.edges()])
    raise InputError(f"cannot interpret {type(G).__name__} as a graph")


def check_property(spec, max_pattern_size: int = 6) -> PropertySpec:
    if isinstance(spec, (FiniteFamily, RadiusBall)):
        return spec
    if isinstance(spec, str):
        return parse_property(spec, max_pattern_size=max_pattern_size)
    raise InputError(f"cannot interpret {spec!r} as a property")


def check_vertex_set(G: Graph, X: Iterable[int]) -> tuple[int, ...]:
    out = sorted(set(int(v) for v in X))
    bad = [v for v in out if not 0 <= v < G.n]
    if bad:
        raise InputError(f"vertices {bad} out of range [0, {G.n})")
    return tuple(out)


def check_positive_int(name: str, value) -> int:
    if not isinstance(value, numbers.Integral) or value < 1:
        raise InputError(f"{name} must be a positive integer, got {value!r}")
    return int(value)
