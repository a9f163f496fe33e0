"""Deterministic graph generators for the sparse instance corpus."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .graph import Graph

KINDS = ("grid", "path", "cycle", "star", "random-grid-subgraph", "random-k-degenerate", "complete")

_PARAMS = {
    "grid": ("w", "h"),
    "path": ("n",),
    "cycle": ("n",),
    "star": ("k",),
    "random-grid-subgraph": ("w", "h", "p"),
    "random-k-degenerate": ("n", "k"),
    "complete": ("n",),
}


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in _PARAMS:
            raise InputError(f"unknown generator kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        missing = [k for k in _PARAMS[self.kind] if k not in self.params]
        if missing:
            raise InputError(f"{self.kind} needs parameter(s) {', '.join(missing)}")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must be a 64-bit unsigned integer")

    @property
    def label(self) -> str:
        args = ",".join(f"{k}={self.params[k]}" for k in _PARAMS[self.kind])
        return f"{self.kind}({args})#{self.seed}"


def _positive(name: str, value, minimum: int = 1) -> int:
    if int(value) != value or value < minimum:
        raise InputError(f"{name} must be an integer >= {minimum}, got {value}")
    return int(value)


def grid(w: int, h: int) -> Graph:
    """4-neighbour ``w`` x ``h`` lattice; vertex ``(x, y)`` has index ``y * w + x``."""
    w, h = _positive("w", w), _positive("h", h)
    return Graph.from_edges(w * h, _grid_edges(w, h))


def _grid_edges(w: int, h: int) -> list[tuple[int, int]]:
    edges = []
    for y in range(h):
        for x in range(w):
            v = y * w + x
            if x + 1 < w:
                edges.append((v, v + 1))
            if y + 1 < h:
                edges.append((v, v + w))
    return edges


def path(n: int) -> Graph:
    n = _positive("n", n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    n = _positive("n", n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """``K_{1,k}`` with the centre at vertex 0."""
    k = _positive("k", k, 0)
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> Graph:
    n = _positive("n", n)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def random_grid_subgraph(w: int, h: int, p: float, seed: int = 0) -> Graph:
    w, h = _positive("w", w), _positive("h", h)
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge-keep probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    edges = _grid_edges(w, h)
    keep = rng.random(len(edges)) < p
    return Graph.from_edges(w * h, [e for e, k in zip(edges, keep) if k])


def random_k_degenerate(n: int, k: int, seed: int = 0) -> Graph:
    """Each vertex ``i`` joins ``min(k, i)`` distinct earlier vertices chosen uniformly."""
    n, k = _positive("n", n), _positive("k", k, 0)
    rng = np.random.default_rng(seed)
    edges = []
    for i in range(1, n):
        chosen = rng.choice(i, size=min(k, i), replace=False)
        edges.extend((int(u), i) for u in chosen)
    return Graph.from_edges(n, edges)


def generate(spec: GeneratorSpec) -> Graph:
    p = spec.params
    if spec.kind == "grid":
        return grid(p["w"], p["h"])
    if spec.kind == "path":
        return path(p["n"])
    if spec.kind == "cycle":
        return cycle(p["n"])
    if spec.kind == "star":
        return star(p["k"])
    if spec.kind == "complete":
        return complete(p["n"])
    if spec.kind == "random-grid-subgraph":
        return random_grid_subgraph(p["w"], p["h"], float(p["p"]), spec.seed)
    return random_k_degenerate(p["n"], p["k"], spec.seed)
