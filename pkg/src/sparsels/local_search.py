"""c-local search for minimum hitting sets and maximum (induced) packings."""
from __future__ import annotations

import json
import time
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputError
from .graph import Graph
from .properties import Occurrence, Packing, PropertySpec, packing_extension

# how many candidates between wall-clock checks
_CLOCK_EVERY = 256


@dataclass
class SearchTrace:
    problem: str
    n: int
    m: int
    c: int
    iterations: list[tuple[int, int, str]] = field(default_factory=list)
    solution: tuple = ()
    swaps_examined: int = 0
    certified: bool = True

    @property
    def size(self) -> int:
        return len(self.solution)

    def summary(self) -> dict:
        return {
            "problem": self.problem,
            "n": self.n,
            "m": self.m,
            "c": self.c,
            "size": self.size,
            "swaps_examined": self.swaps_examined,
            "certified": self.certified,
        }

    def to_log(self) -> str:
        lines = [f"iter={i} size={s} swap={swap}" for i, s, swap in self.iterations]
        lines.append(json.dumps(self.summary(), sort_keys=False))
        return "\n".join(lines) + "\n"


def _check_c(c: int) -> int:
    if int(c) != c or c < 1:
        raise InputError(f"c must be a positive integer, got {c}")
    return int(c)


def _swap_candidates(n: int, in_x: Sequence[bool], size: int) -> Iterator[tuple[int, ...]]:
    """Sets ``Y`` of the given size with ``|Y & X| > |Y - X|``, in lexicographic order."""
    max_out = (size - 1) // 2
    chosen: list[int] = []

    def rec(start: int, outside: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for v in range(start, n - (size - len(chosen)) + 1):
            o = outside + (not in_x[v])
            if o > max_out:
                continue
            chosen.append(v)
            yield from rec(v + 1, o)
            chosen.pop()

    return rec(0, 0)


class _HitCounter:
    """Tracks ``|Z & X|`` for every occurrence ``Z`` so swaps test in time proportional to their reach."""

    def __init__(self, n: int, occurrences: Sequence[Occurrence], X: set[int]):
        self.sets = [frozenset(Z) for Z in occurrences]
        self.containing: list[list[int]] = [[] for _ in range(n)]
        for i, Z in enumerate(occurrences):
            for v in Z:
                self.containing[v].append(i)
        self.hits = [len(Z & X) for Z in self.sets]

    def allows(self, removed: Sequence[int], added: Sequence[int]) -> bool:
        seen = set()
        for r in removed:
            for i in self.containing[r]:
                if i in seen:
                    continue
                seen.add(i)
                Z = self.sets[i]
                lost = sum(1 for v in removed if v in Z)
                if self.hits[i] - lost + sum(1 for v in added if v in Z) <= 0:
                    return False
        return True

    def apply(self, removed: Sequence[int], added: Sequence[int]) -> None:
        for r in removed:
            for i in self.containing[r]:
                self.hits[i] -= 1
        for a in added:
            for i in self.containing[a]:
                self.hits[i] += 1


def greedy_hitting_set(n: int, occurrences: Sequence[Occurrence]) -> set[int]:
    """Repeatedly take the vertex in most unhit occurrences (smallest index on ties)."""
    unhit = [set(Z) for Z in occurrences]
    X: set[int] = set()
    while unhit:
        counts = [0] * n
        for Z in unhit:
            for v in Z:
                counts[v] += 1
        best = max(range(n), key=lambda v: (counts[v], -v))
        X.add(best)
        unhit = [Z for Z in unhit if best not in Z]
    return X


def local_search_hitting(G: Graph, spec: PropertySpec, c: int, *, greedy_init: bool = False,
                         time_budget: float | None = None,
                         occurrences: Sequence[Occurrence] | None = None) -> tuple[tuple[int, ...], SearchTrace]:
    """Shrink a hitting set by swaps ``X -> X ^ Y`` with ``|Y| <= c`` until none improves.

    Starts from ``X = V(G)`` (or a greedy solution when ``greedy_init``).
    Candidates ``Y`` are scanned by size, then lexicographically; the first
    improving swap is taken and the scan restarts. When ``time_budget``
    seconds elapse the current solution is returned with
    ``trace.certified = False``.
    """
    c = _check_c(c)
    if occurrences is None:
        occurrences = spec.occurrences(G)
    n = G.n
    X = greedy_hitting_set(n, occurrences) if greedy_init else set(range(n))
    counter = _HitCounter(n, occurrences, X)
    trace = SearchTrace("hitting", n, G.m, c)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    step = 0
    while True:
        in_x = [v in X for v in range(n)]
        accepted = None
        for size in range(1, c + 1):
            for Y in _swap_candidates(n, in_x, size):
                trace.swaps_examined += 1
                if deadline is not None and trace.swaps_examined % _CLOCK_EVERY == 0 \
                        and time.monotonic() > deadline:
                    trace.certified = False
                    break
                removed = [v for v in Y if in_x[v]]
                added = [v for v in Y if not in_x[v]]
                # every single removal already failed and hitting is upward-closed
                if size > 1 and not added:
                    continue
                if counter.allows(removed, added):
                    accepted = (Y, removed, added)
                    break
            if accepted or not trace.certified:
                break
        if accepted is None:
            break
        Y, removed, added = accepted
        counter.apply(removed, added)
        X.difference_update(removed)
        X.update(added)
        step += 1
        trace.iterations.append((step, len(X), json.dumps(list(Y), separators=(",", ":"))))
    trace.solution = tuple(sorted(X))
    return trace.solution, trace


def _forbidden_for(G: Graph, kept: Sequence[Occurrence], induced: bool) -> set[int]:
    out = {v for Z in kept for v in Z}
    if induced:
        for v in list(out):
            out.update(G.adj[v])
    return out


def local_search_packing(G: Graph, spec: PropertySpec, c: int, induced: bool = False, *,
                         time_budget: float | None = None,
                         occurrences: Sequence[Occurrence] | None = None) -> tuple[Packing, SearchTrace]:
    """Grow a packing by removing ``Y``, ``|Y| < c``, and adding ``|Y| + 1`` new elements.

    Starts from the empty packing; subsets ``Y`` of the current packing are
    tried by size, then lexicographically by element index (elements kept
    sorted), and the first successful extension is accepted.
    """
    c = _check_c(c)
    if occurrences is None:
        occurrences = spec.occurrences(G)
    P: list[Occurrence] = []
    trace = SearchTrace("packing-induced" if induced else "packing", G.n, G.m, c)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    step = 0
    while True:
        accepted = None
        for y in range(0, min(c - 1, len(P)) + 1):
            for Y in combinations(range(len(P)), y):
                trace.swaps_examined += 1
                if deadline is not None and time.monotonic() > deadline:
                    trace.certified = False
                    break
                kept = [Z for i, Z in enumerate(P) if i not in Y]
                ext = packing_extension(G, spec, _forbidden_for(G, kept, induced), y + 1, induced,
                                        occurrences=occurrences)
                if ext is not None:
                    accepted = (Y, kept, ext)
                    break
            if accepted or not trace.certified:
                break
        if accepted is None:
            break
        Y, kept, ext = accepted
        removed = [list(P[i]) for i in Y]
        P = sorted(kept + list(ext.elements))
        step += 1
        swap = json.dumps(removed, separators=(",", ":")) + " add=" + \
            json.dumps([list(Z) for Z in ext.elements], separators=(",", ":"))
        trace.iterations.append((step, len(P), swap))
    packing = Packing(tuple(P), induced)
    trace.solution = packing.elements
    return packing, trace


def hitting_swap_exists(G: Graph, spec: PropertySpec, X: Sequence[int], c: int) -> tuple[int, ...] | None:
    """One full sweep over all ``Y`` with ``|Y| <= c``; returns an improving ``Y`` if any.

    Uses :meth:`is_hitting_set` directly, independent of the incremental
    counters in :func:`local_search_hitting`.
    """
    X = set(X)
    in_x = [v in X for v in range(G.n)]
    for size in range(1, c + 1):
        for Y in _swap_candidates(G.n, in_x, size):
            if spec.is_hitting_set(G, X.symmetric_difference(Y)):
                return Y
    return None


def packing_swap_exists(G: Graph, spec: PropertySpec, P: Packing, c: int) -> tuple[int, ...] | None:
    """One full sweep of the packing step; returns a removable ``Y`` that admits growth."""
    elements = list(P.elements)
    for y in range(0, min(c - 1, len(elements)) + 1):
        for Y in combinations(range(len(elements)), y):
            kept = [Z for i, Z in enumerate(elements) if i not in Y]
            if packing_extension(G, spec, _forbidden_for(G, kept, P.induced), y + 1, P.induced) is not None:
                return Y
    return None
