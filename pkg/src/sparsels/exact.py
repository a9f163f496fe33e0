"""Branch-and-bound oracles for minimum hitting set and maximum packing."""
from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

from .graph import Graph
from .properties import Occurrence, Packing, PropertySpec

DEFAULT_NODE_LIMIT = 2_000_000


class ExactResult(NamedTuple):
    solution: tuple | Packing
    optimal: bool
    nodes: int

    @property
    def size(self) -> int:
        return len(self.solution)


class _Budget(Exception):
    pass


def _disjoint_lower_bound(sets: list[frozenset[int]]) -> int:
    taken: set[int] = set()
    count = 0
    for Z in sorted(sets, key=len):
        if taken.isdisjoint(Z):
            taken.update(Z)
            count += 1
    return count


def exact_min_hitting(G: Graph, spec: PropertySpec, limit: int = DEFAULT_NODE_LIMIT,
                      occurrences: Sequence[Occurrence] | None = None) -> ExactResult:
    """Minimum hitting set of the occurrence hypergraph.

    Branches on the vertices of a smallest unhit occurrence (vertex ``i`` in,
    vertices before it out) and prunes with a greedy disjoint-occurrence
    lower bound. ``optimal`` is False when ``limit`` nodes were exhausted;
    the best solution found so far is returned in that case.
    """
    from .local_search import greedy_hitting_set

    if occurrences is None:
        occurrences = spec.occurrences(G)
    occs = [frozenset(Z) for Z in occurrences]
    if not occs:
        return ExactResult((), True, 0)
    incumbent = greedy_hitting_set(G.n, occurrences)
    for v in sorted(incumbent):
        rest = incumbent - {v}
        if all(not rest.isdisjoint(Z) for Z in occs):
            incumbent = rest
    best = [tuple(sorted(incumbent))]
    nodes = 0

    def search(chosen: frozenset[int], excluded: frozenset[int], unhit: list[frozenset[int]]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _Budget
        if not unhit:
            if len(chosen) < len(best[0]):
                best[0] = tuple(sorted(chosen))
            return
        restricted = [Z - excluded for Z in unhit]
        if any(not Z for Z in restricted):
            return
        if len(chosen) + _disjoint_lower_bound(restricted) >= len(best[0]):
            return
        branch = min(restricted, key=lambda Z: (len(Z), sorted(Z)))
        members = sorted(branch)
        for i, v in enumerate(members):
            search(chosen | {v}, excluded.union(members[:i]), [Z for Z in unhit if v not in Z])

    try:
        search(frozenset(), frozenset(), occs)
        optimal = True
    except _Budget:
        optimal = False
    return ExactResult(best[0], optimal, nodes)


def _mask(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def exact_max_packing(G: Graph, spec: PropertySpec, induced: bool = False, limit: int = DEFAULT_NODE_LIMIT,
                      occurrences: Sequence[Occurrence] | None = None) -> ExactResult:
    """Maximum (induced) packing by branching on the smallest still-usable vertex.

    For that vertex ``v`` either some candidate containing ``v`` is taken or
    ``v`` stays unused. The bound counts distinct smallest vertices among the
    remaining candidates (candidates sharing one pairwise conflict) and free
    vertices divided by the smallest candidate size.
    """
    if occurrences is None:
        occurrences = spec.occurrences(G)
    cands = list(occurrences)
    masks = [_mask(Z) for Z in cands]
    if induced:
        blocks = [_mask(set(Z).union(*(G.adj[v] for v in Z))) for Z in cands]
    else:
        blocks = masks
    lows = [min(Z) for Z in cands]
    best: list[list[int]] = [[]]
    nodes = 0

    def bound(avail: list[int]) -> int:
        if not avail:
            return 0
        union = 0
        smallest = len(cands[avail[0]])
        for i in avail:
            union |= masks[i]
            smallest = min(smallest, len(cands[i]))
        return min(len({lows[i] for i in avail}), union.bit_count() // smallest)

    def search(current: list[int], avail: list[int]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _Budget
        if len(current) > len(best[0]):
            best[0] = list(current)
        if not avail or len(current) + bound(avail) <= len(best[0]):
            return
        v = min(min(cands[i]) for i in avail)
        bit = 1 << v
        with_v = [i for i in avail if masks[i] & bit]
        without_v = [i for i in avail if not masks[i] & bit]
        for i in with_v:
            current.append(i)
            search(current, [j for j in without_v if not (blocks[i] & masks[j])])
            current.pop()
        search(current, without_v)

    try:
        search([], list(range(len(cands))))
        optimal = True
    except _Budget:
        optimal = False
    chosen = sorted(cands[i] for i in best[0])
    return ExactResult(Packing(tuple(chosen), induced), optimal, nodes)
