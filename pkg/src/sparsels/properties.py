"""Properties of vertex sets: occurrences, hitting sets and packings.

Two kinds of property are supported. :class:`FiniteFamily` is satisfied by
``Z`` when ``G[Z]`` is isomorphic to one of a finite list of patterns;
:class:`RadiusBall` is satisfied when ``Z`` is exactly the radius-``r`` ball
around some vertex. Occurrences are sorted vertex tuples and are always
treated as sets: two embeddings onto the same vertices count once.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ConfigurationError, InputError
from .graph import Graph, ball, diameter, induced_subgraph, is_isomorphic

Occurrence = tuple[int, ...]

BUILTIN_EDGES = {
    "K2": (2, [(0, 1)]),
    "K3": (3, [(0, 1), (1, 2), (0, 2)]),
    "P3": (3, [(0, 1), (1, 2)]),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
}


def builtin_pattern(name: str) -> Graph:
    n, edges = BUILTIN_EDGES[name]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class FiniteFamily:
    """``G[Z]`` is isomorphic to a member of ``patterns``."""

    patterns: tuple[Graph, ...]
    max_pattern_size: int = 6
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "patterns", tuple(self.patterns))
        if not self.patterns:
            raise InputError("a finite family needs at least one pattern")
        if any(P.n == 0 for P in self.patterns):
            raise InputError("patterns must have at least one vertex")

    @classmethod
    def of(cls, *names: str, max_pattern_size: int = 6) -> FiniteFamily:
        try:
            patterns = tuple(builtin_pattern(name) for name in names)
        except KeyError as exc:
            raise InputError(f"unknown built-in pattern {exc.args[0]!r}") from None
        return cls(patterns, max_pattern_size, tuple(names))

    @cached_property
    def diameter(self) -> float:
        return max(diameter(P) for P in self.patterns)

    @property
    def label(self) -> str:
        if self.names:
            return "+".join(self.names)
        return "+".join(f"G{P.n}.{P.m}" for P in self.patterns)

    def _check_size(self) -> None:
        too_big = [P.n for P in self.patterns if P.n > self.max_pattern_size]
        if too_big:
            raise ConfigurationError(
                f"pattern with {max(too_big)} vertices exceeds max_pattern_size={self.max_pattern_size}"
            )

    def occurrences(self, G: Graph) -> list[Occurrence]:
        self._check_size()
        found: set[Occurrence] = set()
        for P in self.patterns:
            for image in _embeddings(G, P, frozenset()):
                found.add(tuple(sorted(image)))
        return sorted(found)

    def is_occurrence(self, G: Graph, Z: Iterable[int]) -> bool:
        sub, _ = induced_subgraph(G, Z)
        return sub.n > 0 and any(is_isomorphic(sub, P) for P in self.patterns)

    def is_hitting_set(self, G: Graph, X: Iterable[int]) -> bool:
        # X hits everything iff G - X contains no induced copy of a pattern
        self._check_size()
        excluded = frozenset(X)
        return not any(next(_embeddings(G, P, excluded), None) is not None for P in self.patterns)


@dataclass(frozen=True)
class RadiusBall:
    """``Z`` is the set of vertices within distance ``r`` of some centre."""

    r: int

    def __post_init__(self):
        if int(self.r) != self.r or self.r < 1:
            raise InputError(f"ball radius must be a positive integer, got {self.r}")

    @property
    def diameter(self) -> int:
        # an upper bound; balls can be smaller in a given graph
        return 2 * self.r

    @property
    def label(self) -> str:
        return f"ball{self.r}"

    def occurrences(self, G: Graph) -> list[Occurrence]:
        return sorted({ball(G, z, self.r) for z in range(G.n)})

    def is_occurrence(self, G: Graph, Z: Iterable[int]) -> bool:
        Z = tuple(sorted(set(Z)))
        return any(ball(G, z, self.r) == Z for z in Z)

    def is_hitting_set(self, G: Graph, X: Iterable[int]) -> bool:
        # X hits every ball iff X is r-dominating
        return all(d is not None for d in _multi_source_distances(G, X, self.r))


PropertySpec = FiniteFamily | RadiusBall


def parse_property(text: str, *, max_pattern_size: int = 6) -> PropertySpec:
    """``"K2"``, ``"K2,P3"`` for built-in families, ``"ball:2"`` for radius balls."""
    text = text.strip()
    if text.startswith("ball:"):
        try:
            return RadiusBall(int(text[5:]))
        except ValueError:
            raise InputError(f"bad ball radius in {text!r}") from None
    names = [t.strip() for t in text.split(",") if t.strip()]
    return FiniteFamily.of(*names, max_pattern_size=max_pattern_size)


def _multi_source_distances(G: Graph, sources: Iterable[int], limit: int) -> list[int | None]:
    dist: list[int | None] = [None] * G.n
    frontier = []
    for s in sources:
        if dist[s] is None:
            dist[s] = 0
            frontier.append(s)
    for d in range(1, limit + 1):
        nxt = []
        for v in frontier:
            for u in G.adj[v]:
                if dist[u] is None:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def _pattern_order(P: Graph) -> tuple[list[int], list[int | None]]:
    # BFS order per component, so every non-root vertex has an earlier neighbor
    order: list[int] = []
    parent: list[int | None] = []
    placed = [False] * P.n
    for root in sorted(range(P.n), key=lambda v: (-P.degree(v), v)):
        if placed[root]:
            continue
        placed[root] = True
        queue = [root]
        order.append(root)
        parent.append(None)
        for v in queue:
            for u in P.adj[v]:
                if not placed[u]:
                    placed[u] = True
                    queue.append(u)
                    order.append(u)
                    parent.append(order.index(v))
    return order, parent


def _embeddings(G: Graph, P: Graph, excluded: frozenset[int]) -> Iterator[list[int]]:
    """Induced embeddings of ``P`` into ``G - excluded``, as lists of images."""
    order, parent = _pattern_order(P)
    k = len(order)
    need_deg = [P.degree(v) for v in order]
    pattern_adj = [[P.has_edge(order[i], order[j]) for j in range(k)] for i in range(k)]
    image: list[int] = []
    used: set[int] = set()
    deg = G.degrees()

    def extend(i: int) -> Iterator[list[int]]:
        if i == k:
            yield list(image)
            return
        p = parent[i]
        candidates: Sequence[int] = range(G.n) if p is None else G.adj[image[p]]
        for w in candidates:
            if w in used or w in excluded or deg[w] < need_deg[i]:
                continue
            row = pattern_adj[i]
            if all(row[j] == G.has_edge(w, image[j]) for j in range(i)):
                image.append(w)
                used.add(w)
                yield from extend(i + 1)
                used.discard(w)
                image.pop()

    return extend(0)


def property_diameter(spec: PropertySpec) -> float:
    return spec.diameter


def enumerate_occurrences(G: Graph, spec: PropertySpec) -> list[Occurrence]:
    """All vertex sets satisfying ``spec`` in ``G``, sorted lexicographically."""
    return spec.occurrences(G)


def is_hitting_set(G: Graph, spec: PropertySpec, X: Iterable[int]) -> bool:
    X = list(X)
    for v in X:
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} out of range [0, {G.n})")
    return spec.is_hitting_set(G, X)


@dataclass(frozen=True)
class Packing:
    """Pairwise disjoint occurrences, optionally required to be non-adjacent."""

    elements: tuple[Occurrence, ...] = ()
    induced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(tuple(sorted(e)) for e in self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def vertices(self) -> list[int]:
        return sorted(v for e in self.elements for v in e)

    def labels(self, n: int) -> list[int]:
        """Per-vertex index of the containing element, ``-1`` when uncovered."""
        out = [-1] * n
        for i, e in enumerate(self.elements):
            for v in e:
                out[v] = i
        return out


def _closed_neighborhood(G: Graph, Z: Iterable[int]) -> set[int]:
    out = set(Z)
    for v in list(out):
        out.update(G.adj[v])
    return out


def is_valid_packing(G: Graph, spec: PropertySpec, P: Packing) -> bool:
    seen: set[int] = set()
    for Z in P.elements:
        if not Z or any(not 0 <= v < G.n for v in Z):
            return False
        if not spec.is_occurrence(G, Z):
            return False
        if seen.intersection(Z):
            return False
        seen.update(Z)
    if P.induced:
        owner = {v: i for i, Z in enumerate(P.elements) for v in Z}
        for u, v in G.edges():
            if u in owner and v in owner and owner[u] != owner[v]:
                return False
    return True


def packing_extension(G: Graph, spec: PropertySpec, forbidden: Iterable[int], k: int,
                      induced: bool = False, occurrences: Sequence[Occurrence] | None = None) -> Packing | None:
    """First ``k`` compatible occurrences avoiding ``forbidden``, or ``None``.

    Candidates are scanned in lexicographic order, so the result is the
    lexicographically first ``k``-subset of candidates forming a valid
    (induced) packing. ``occurrences`` may pass a precomputed enumeration.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    forbidden = frozenset(forbidden)
    if occurrences is None:
        occurrences = spec.occurrences(G)
    candidates = [Z for Z in occurrences if forbidden.isdisjoint(Z)]
    if len(candidates) < k:
        return None
    blocks = [frozenset(_closed_neighborhood(G, Z)) if induced else frozenset(Z) for Z in candidates]
    chosen: list[int] = []
    taken: set[int] = set()

    def search(start: int) -> bool:
        if len(chosen) == k:
            return True
        for i in range(start, len(candidates) - (k - len(chosen)) + 1):
            if taken.isdisjoint(candidates[i]):
                if induced and any(not blocks[j].isdisjoint(candidates[i]) for j in chosen):
                    continue
                chosen.append(i)
                taken.update(candidates[i])
                if search(i + 1):
                    return True
                chosen.pop()
                taken.difference_update(candidates[i])
        return False

    if not search(0):
        return None
    return Packing(tuple(candidates[i] for i in chosen), induced)


def is_structural(spec: PropertySpec) -> bool:
    """Whether the property has finite diameter, which the proof tooling requires."""
    return spec.diameter != math.inf


__all__ = [
    "FiniteFamily", "RadiusBall", "PropertySpec", "Occurrence", "Packing",
    "builtin_pattern", "parse_property", "property_diameter", "enumerate_occurrences",
    "is_hitting_set", "is_valid_packing", "packing_extension", "is_structural",
]
