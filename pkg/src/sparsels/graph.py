"""Immutable simple undirected graphs on vertices ``0..n-1`` and basic queries."""
from __future__ import annotations

import math
import warnings
from collections import deque
from collections.abc import Iterable, Sequence
from functools import cached_property

from .errors import InputError


class Graph:
    """Simple undirected graph with dense integer vertices.

    Adjacency lists are sorted tuples. Instances are immutable and hashable,
    so they can be shared freely between searches.
    """

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        if len(adj) != n:
            raise InputError(f"expected {n} adjacency lists, got {len(adj)}")
        rows = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        for v, nbrs in enumerate(rows):
            for i, u in enumerate(nbrs):
                if not 0 <= u < n:
                    raise InputError(f"neighbor {u} of {v} out of range [0, {n})")
                if u == v:
                    raise InputError(f"self-loop at vertex {v}")
                if i and nbrs[i - 1] == u:
                    raise InputError(f"duplicate neighbor {u} of {v}")
        sets = [frozenset(nbrs) for nbrs in rows]
        for v, nbrs in enumerate(rows):
            for u in nbrs:
                if v not in sets[u]:
                    raise InputError(f"asymmetric adjacency: {u} in adj({v}) but not vice versa")
        self.n = n
        self.adj = rows
        self._sets = tuple(sets)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, warn_duplicates: bool = False) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        duplicates = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                duplicates += 1
            nbrs[u].add(v)
            nbrs[v].add(u)
        if duplicates and warn_duplicates:
            warnings.warn(f"{duplicates} duplicate edge(s) collapsed", stacklevel=2)
        return cls(n, nbrs)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [()] * n)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __len__(self) -> int:
        return self.n

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adj]

    def vertices(self) -> range:
        return range(self.n)


def bfs_distances(G: Graph, s: int, *, within: frozenset[int] | set[int] | None = None,
                  limit: int | None = None) -> list[int | None]:
    """Unweighted distances from ``s``; ``None`` marks unreachable vertices.

    ``within`` restricts the search to a vertex subset and ``limit`` stops
    expanding past the given depth (farther vertices report ``None``).
    """
    if not 0 <= s < G.n:
        raise InputError(f"source {s} out of range")
    dist: list[int | None] = [None] * G.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        d = dist[v]
        if limit is not None and d >= limit:
            continue
        for u in G.adj[v]:
            if dist[u] is None and (within is None or u in within):
                dist[u] = d + 1
                queue.append(u)
    return dist


def ball(G: Graph, z: int, r: int) -> tuple[int, ...]:
    """Vertices at distance at most ``r`` from ``z``, sorted."""
    dist = bfs_distances(G, z, limit=r)
    return tuple(v for v, d in enumerate(dist) if d is not None)


def components(G: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``G - removed``, each sorted, ordered by smallest vertex."""
    seen = [False] * G.n
    for v in removed:
        seen[v] = True
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for u in G.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comp.sort()
        out.append(comp)
    return out


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def induced_subgraph(G: Graph, Z: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G[Z]`` together with the map from new vertex index to original vertex."""
    members = sorted(set(Z))
    for v in members:
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} out of range [0, {G.n})")
    index = {v: i for i, v in enumerate(members)}
    adj = [[index[u] for u in G.adj[v] if u in index] for v in members]
    return Graph(len(members), adj), members


def eccentricity(G: Graph, v: int) -> float:
    dist = bfs_distances(G, v)
    if any(d is None for d in dist):
        return math.inf
    return max(dist)


def diameter(G: Graph) -> float:
    """Largest distance between two vertices, ``math.inf`` when disconnected.

    The 0-vertex graph has no defined diameter; it is reported as ``math.inf``
    with a warning so callers can tell it apart from the disconnected case.
    """
    if G.n == 0:
        warnings.warn("diameter of the empty graph is undefined; reporting inf", stacklevel=2)
        return math.inf
    best = 0
    for v in range(G.n):
        e = eccentricity(G, v)
        if e == math.inf:
            return math.inf
        best = max(best, e)
    return best


def radius(G: Graph) -> float:
    if G.n == 0:
        return 0
    return min(eccentricity(G, v) for v in range(G.n))


def _refine_classes(G: Graph) -> list[tuple]:
    # degree plus sorted neighbor degrees; isomorphism-invariant
    deg = G.degrees()
    return [(deg[v], tuple(sorted(deg[u] for u in G.adj[v]))) for v in range(G.n)]


def is_isomorphic(G1: Graph, G2: Graph) -> bool:
    """Exact isomorphism test by degree-profile pruning and backtracking.

    Intended for pattern-sized graphs; the search is exponential in the worst case.
    """
    if G1.n != G2.n or G1.m != G2.m:
        return False
    inv1, inv2 = _refine_classes(G1), _refine_classes(G2)
    if sorted(inv1) != sorted(inv2):
        return False
    n = G1.n
    # map high-degree, constrained vertices first
    order = sorted(range(n), key=lambda v: (-G1.degree(v), v))
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or inv2[w] != inv1[v]:
                continue
            if all(G1.has_edge(v, order[j]) == G2.has_edge(w, mapping[order[j]]) for j in range(i)):
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)
