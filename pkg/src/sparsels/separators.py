"""Balanced vertex separators and covers with bounded excess.

A separator ``S`` of an ``n``-vertex graph is balanced when every component
of ``G - S`` has at most ``ceil(2n/3)`` vertices.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import InputError
from .graph import Graph, components, induced_subgraph

EXHAUSTIVE_MAX_N = 12


def balance_bound(n: int) -> int:
    return math.ceil(2 * n / 3)


def _worst_component(H: Graph, S: Iterable[int]) -> int:
    return max((len(c) for c in components(H, S)), default=0)


def is_balanced(H: Graph, S: Iterable[int]) -> bool:
    return _worst_component(H, S) <= balance_bound(H.n)


def _exhaustive_candidates(H: Graph) -> list[list[int]]:
    """Every balanced separator of minimum size."""
    bound = balance_bound(H.n)
    for size in range(H.n + 1):
        found = [list(S) for S in combinations(range(H.n), size) if _worst_component(H, S) <= bound]
        if found:
            return found
    return [list(range(H.n))]


def _bfs_layers(H: Graph, root: int, allowed: set[int]) -> list[list[int]]:
    layers = [[root]]
    seen = {root}
    while True:
        nxt = sorted({u for v in layers[-1] for u in H.adj[v] if u in allowed and u not in seen})
        if not nxt:
            return layers
        seen.update(nxt)
        layers.append(nxt)


def _region_growing(H: Graph, comp: list[int]) -> Iterable[list[int]]:
    """Grow a region from a minimum-degree vertex, always absorbing the boundary vertex with fewest outside neighbours.

    Yields the outer boundary of the region after every step.
    """
    allowed = set(comp)
    start = min(comp, key=lambda v: (H.degree(v), v))
    region = {start}
    while len(region) < len(comp):
        boundary = sorted({u for v in region for u in H.adj[v] if u in allowed and u not in region})
        if not boundary:
            return
        yield boundary
        pick = min(boundary, key=lambda u: (sum(1 for x in H.adj[u] if x in allowed and x not in region), u))
        region.add(pick)


def _heuristic_candidates(H: Graph, seed: int) -> Iterable[list[int]]:
    comps = components(H)
    largest = max(comps, key=len)
    allowed = set(largest)
    rng = np.random.default_rng(seed)
    n_roots = max(1, math.ceil(math.log2(max(H.n, 2))))
    roots = sorted(set(int(x) for x in rng.choice(largest, size=min(n_roots, len(largest)), replace=False)))
    for root in roots:
        for layer in _bfs_layers(H, root, allowed):
            yield layer
    yield from _region_growing(H, largest)


def _minimalize(H: Graph, S: list[int]) -> list[int]:
    S = list(S)
    changed = True
    while changed:
        changed = False
        for v in list(S):
            trial = [x for x in S if x != v]
            if is_balanced(H, trial):
                S = trial
                changed = True
    return sorted(S)


def balanced_candidates(H: Graph, seed: int = 0, keep: int = 8) -> list[list[int]]:
    """Distinct balanced separators, each minimal under single-vertex removal.

    Graphs with at most 12 vertices give all minimum separators. Larger
    graphs give every balanced single vertex plus the ``keep`` best, by
    (size, worst component), among BFS layers from seeded roots and the
    boundaries of a greedily grown region.
    """
    if H.n == 0:
        raise InputError("balanced_separator needs at least one vertex")
    if is_balanced(H, ()):
        return [[]]
    if H.n <= EXHAUSTIVE_MAX_N:
        return _exhaustive_candidates(H)
    bound = balance_bound(H.n)
    out = [[v] for v in range(H.n) if _worst_component(H, [v]) <= bound]
    scored = {}
    for cand in _heuristic_candidates(H, seed):
        if len(cand) > 1 and tuple(cand) not in scored:
            worst = _worst_component(H, cand)
            if worst <= bound:
                scored[tuple(cand)] = (len(cand), worst, cand)
    seen = {tuple(S) for S in out}
    for _, _, cand in sorted(scored.values())[:keep]:
        S = _minimalize(H, cand)
        if tuple(S) not in seen:
            seen.add(tuple(S))
            out.append(S)
    return out or [list(range(H.n))]


def balanced_separator(H: Graph, seed: int = 0) -> list[int]:
    """A balanced separator, minimal under single-vertex removal.

    The best of :func:`balanced_candidates` by size, then the size of the
    worst component, then lexicographically; exact for graphs with at most
    12 vertices.
    """
    return min(balanced_candidates(H, seed), key=lambda S: (len(S), _worst_component(H, S), S))


@dataclass
class Cover:
    """Pieces whose induced subgraphs together give the host graph."""

    pieces: list[tuple[int, ...]] = field(default_factory=list)
    overflow: bool = False

    @property
    def boundaries(self) -> list[tuple[int, ...]]:
        count: dict[int, int] = {}
        for K in self.pieces:
            for v in K:
                count[v] = count.get(v, 0) + 1
        return [tuple(v for v in K if count[v] >= 2) for K in self.pieces]

    @property
    def excess(self) -> int:
        return sum(len(b) for b in self.boundaries)

    @property
    def max_piece(self) -> int:
        return max((len(K) for K in self.pieces), default=0)

    def dumps(self) -> str:
        lines = []
        for i, (K, B) in enumerate(zip(self.pieces, self.boundaries)):
            lines.append(f"piece {i}: {' '.join(map(str, K))} | boundary: {' '.join(map(str, B))}")
        lines.append(f"pieces={len(self.pieces)} max_piece={self.max_piece} excess={self.excess} "
                     f"overflow={int(self.overflow)}")
        return "\n".join(lines) + "\n"


def _pieces_estimate(size: int, cap: int) -> int:
    # a chain of j pieces of size cap spans j*(cap-1)+1 vertices
    return math.ceil(max(size - 1, 0) / (cap - 1)) if cap > 1 else size


def _cover_separator(H: Graph, sub: Graph, names: list[int], separated: set[int], cap: int,
                     seed: int) -> list[int]:
    """Pick among balanced separators of ``sub`` the one whose parts should need the fewest pieces."""
    cands = [S for S in balanced_candidates(sub, seed) if S]
    if not cands:
        return [max(range(sub.n), key=lambda v: (sub.degree(v), -v))]

    def key(S):
        cut = separated | {names[v] for v in S}
        parts = components(sub, S)
        est = 0
        for comp in parts:
            att = {u for v in comp for u in H.adj[names[v]] if u in cut}
            est += _pieces_estimate(len(comp) + len(att), cap)
        return len(S), est, max((len(c) for c in parts), default=0), S

    return min(cands, key=key)


def build_cover(H: Graph, size_cap: int, seed: int = 0) -> Cover:
    """Cover ``H`` by recursive separation.

    Each component ``C`` is charged for the separator vertices found so far
    that neighbour it. If ``C`` plus those vertices fits within ``size_cap``
    it becomes a piece; otherwise a balanced separator of ``G[C]`` is
    removed and the pieces of ``C - S`` pick up the vertices of ``S`` they
    touch. Edges between separator vertices that no piece holds get a piece
    of their own. ``overflow`` is set when some piece exceeds the cap.
    """
    if size_cap < 1:
        raise InputError("size_cap must be positive")
    separated: set[int] = set()
    pieces: list[set[int]] = []
    stack = [list(c) for c in components(H)]
    while stack:
        C = stack.pop()
        attached = {u for v in C for u in H.adj[v] if u in separated}
        if len(C) + len(attached) <= size_cap or len(C) == 1:
            pieces.append(set(C) | attached)
            continue
        sub, names = induced_subgraph(H, C)
        S_local = _cover_separator(H, sub, names, separated, size_cap, seed)
        separated.update(names[v] for v in S_local)
        rest = components(sub, S_local)
        stack.extend([names[v] for v in comp] for comp in reversed(rest))
    held: list[set[int]] = [set() for _ in range(H.n)]
    for i, K in enumerate(pieces):
        for v in K:
            held[v].add(i)
    for v in range(H.n):
        if not held[v]:
            held[v].add(len(pieces))
            pieces.append({v})
    for u, v in H.edges():
        if held[u].isdisjoint(held[v]):
            held[u].add(len(pieces))
            held[v].add(len(pieces))
            pieces.append({u, v})
    out = sorted(tuple(sorted(K)) for K in pieces)
    return Cover(out, any(len(K) > size_cap for K in out))


def cover_check(H: Graph, cover: Cover | Sequence[Iterable[int]]) -> tuple[bool, dict]:
    """Validate a cover and recompute its boundaries and excess from scratch."""
    pieces = [tuple(sorted(set(K))) for K in (cover.pieces if isinstance(cover, Cover) else cover)]
    membership: list[list[int]] = [[] for _ in range(H.n)]
    for i, K in enumerate(pieces):
        for v in K:
            membership[v].append(i)
    uncovered_vertices = [v for v in range(H.n) if not membership[v]]
    uncovered_edges = [(u, v) for u, v in H.edges() if not set(membership[u]) & set(membership[v])]
    boundaries = [[v for v in K if len(membership[v]) > 1] for K in pieces]
    excess = sum(len(b) for b in boundaries)
    report = {
        "pieces": len(pieces),
        "max_piece": max((len(K) for K in pieces), default=0),
        "excess": excess,
        "uncovered_vertices": uncovered_vertices,
        "uncovered_edges": uncovered_edges,
        "boundaries": boundaries,
    }
    ok = not uncovered_vertices and not uncovered_edges
    if isinstance(cover, Cover):
        ok = ok and cover.excess == excess
    return ok, report
