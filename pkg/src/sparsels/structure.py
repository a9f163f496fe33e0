"""Orderings, weak reachability and shallow collections.

For a linear ordering of the vertices, ``u`` is weakly ``r``-reachable from
``v`` when ``u <= v`` and some path of length at most ``r`` from ``v`` to
``u`` uses only vertices greater than ``u`` (apart from ``u`` itself).
``L(v)`` collects the vertices weakly reachable from ``v`` and ``R(u)`` the
vertices from which ``u`` is weakly reachable.
"""
from __future__ import annotations

import heapq
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .errors import InputError, ShallownessError
from .graph import Graph, eccentricity, induced_subgraph, is_connected
from .graph import diameter as graph_diameter

WCOL_EXACT_MAX_N = 9


@dataclass(frozen=True)
class VertexOrdering:
    """``position[v]`` is the rank of ``v``; smaller rank means smaller in the order."""

    position: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "position", tuple(self.position))
        if sorted(self.position) != list(range(len(self.position))):
            raise InputError("ordering positions must be a permutation of 0..n-1")

    @classmethod
    def from_sequence(cls, order: Sequence[int]) -> VertexOrdering:
        """Build from vertices listed smallest first."""
        position = [0] * len(order)
        for rank, v in enumerate(order):
            position[v] = rank
        return cls(tuple(position))

    @classmethod
    def natural(cls, n: int) -> VertexOrdering:
        return cls(tuple(range(n)))

    @property
    def order(self) -> list[int]:
        out = [0] * len(self.position)
        for v, rank in enumerate(self.position):
            out[rank] = v
        return out

    def reversed(self) -> VertexOrdering:
        n = len(self.position)
        return VertexOrdering(tuple(n - 1 - p for p in self.position))

    def __len__(self) -> int:
        return len(self.position)


def _check_ordering(G: Graph, ordering: VertexOrdering) -> None:
    if len(ordering) != G.n:
        raise InputError(f"ordering covers {len(ordering)} vertices, graph has {G.n}")


def degeneracy_ordering(G: Graph, reverse: bool = False) -> VertexOrdering:
    """Peel minimum-degree vertices; the vertex removed last gets the largest rank.

    Ties on current degree go to the smaller original degree, then the
    smaller index. ``reverse`` flips the result so the last-peeled vertex
    comes first.
    """
    original = G.degrees()
    current = list(original)
    removed = [False] * G.n
    heap = [(current[v], original[v], v) for v in range(G.n)]
    heapq.heapify(heap)
    order = []
    while heap:
        d, _, v = heapq.heappop(heap)
        if removed[v] or d != current[v]:
            continue
        removed[v] = True
        order.append(v)
        for u in G.adj[v]:
            if not removed[u]:
                current[u] -= 1
                heapq.heappush(heap, (current[u], original[u], u))
    ordering = VertexOrdering.from_sequence(order)
    return ordering.reversed() if reverse else ordering


def weak_reachable(G: Graph, ordering: VertexOrdering, r: int, v: int) -> tuple[int, ...]:
    """``L(v)``, computed by a search over paths from ``v`` that tracks the path minimum.

    A state is (vertex, smallest rank seen so far on the path). A vertex
    reached with a rank below that minimum is weakly reachable. States are
    expanded breadth-first, so each is kept at its smallest depth.
    """
    _check_ordering(G, ordering)
    if r < 0:
        raise InputError("r must be non-negative")
    pos = ordering.position
    found = {v}
    seen = {(v, pos[v])}
    frontier = [(v, pos[v])]
    for _ in range(r):
        nxt = []
        for w, low in frontier:
            for u in G.adj[w]:
                if pos[u] < low:
                    found.add(u)
                    state = (u, pos[u])
                else:
                    state = (u, low)
                if state not in seen:
                    seen.add(state)
                    nxt.append(state)
        frontier = nxt
    return tuple(sorted(found))


def reach_sets(G: Graph, ordering: VertexOrdering, r: int) -> list[tuple[int, ...]]:
    """``R(u)`` for every ``u``: BFS from ``u`` through vertices ranked above ``u``, depth ``r``."""
    _check_ordering(G, ordering)
    pos = ordering.position
    out = []
    for u in range(G.n):
        dist = {u: 0}
        frontier = [u]
        for d in range(1, r + 1):
            nxt = []
            for w in frontier:
                for x in G.adj[w]:
                    if x not in dist and pos[x] > pos[u]:
                        dist[x] = d
                        nxt.append(x)
            frontier = nxt
        out.append(tuple(sorted(dist)))
    return out


def all_weak_reachable(G: Graph, ordering: VertexOrdering, r: int,
                       R: Sequence[Sequence[int]] | None = None) -> list[tuple[int, ...]]:
    """Every ``L(v)``, by inverting the ``R`` sets."""
    if R is None:
        R = reach_sets(G, ordering, r)
    L: list[list[int]] = [[] for _ in range(G.n)]
    for u, members in enumerate(R):
        for v in members:
            L[v].append(u)
    return [tuple(sorted(x)) for x in L]


def wcol_of_ordering(G: Graph, ordering: VertexOrdering, r: int) -> int:
    if G.n == 0:
        return 0
    return max(len(x) for x in all_weak_reachable(G, ordering, r))


def wcol_exact(G: Graph, r: int) -> tuple[int, VertexOrdering]:
    """Minimum weak ``r``-colouring number over all orderings.

    Orderings are built smallest-first: once the vertices before ``u`` are
    fixed, ``R(u)`` is determined (BFS through the unplaced vertices), so
    the ``|L|`` counts grow monotonically and branches are cut as soon as a
    count reaches the incumbent.
    """
    if G.n > WCOL_EXACT_MAX_N:
        raise InputError(f"wcol_exact supports n <= {WCOL_EXACT_MAX_N}, got {G.n}")
    if G.n == 0:
        return 0, VertexOrdering(())
    start = min((degeneracy_ordering(G), degeneracy_ordering(G, reverse=True), VertexOrdering.natural(G.n)),
                key=lambda o: wcol_of_ordering(G, o, r))
    best_value = wcol_of_ordering(G, start, r)
    best_order = start.order
    n = G.n
    counts = [0] * n
    placed = [False] * n
    prefix: list[int] = []

    def reach(u: int) -> list[int]:
        found = [u]
        seen = {u}
        frontier = [u]
        for _ in range(r):
            nxt = []
            for w in frontier:
                for x in G.adj[w]:
                    if x not in seen and not placed[x]:
                        seen.add(x)
                        nxt.append(x)
                        found.append(x)
            frontier = nxt
        return found

    def search() -> None:
        nonlocal best_value, best_order
        if len(prefix) == n:
            value = max(counts)
            if value < best_value:
                best_value, best_order = value, list(prefix)
            return
        for u in range(n):
            if placed[u]:
                continue
            members = reach(u)
            if any(counts[x] + 1 >= best_value for x in members):
                continue
            for x in members:
                counts[x] += 1
            placed[u] = True
            prefix.append(u)
            search()
            prefix.pop()
            placed[u] = False
            for x in members:
                counts[x] -= 1

    search()
    return best_value, VertexOrdering.from_sequence(best_order)


def wcol_bruteforce(G: Graph, r: int) -> int:
    """Minimum over all ``n!`` orderings; only for tiny graphs."""
    if G.n == 0:
        return 0
    return min(wcol_of_ordering(G, VertexOrdering(p), r) for p in permutations(range(G.n)))


def _rich_from(R: Sequence[Sequence[int]], m: int, O: Iterable[int]) -> list[int]:
    O = set(O)
    return [v for v, members in enumerate(R) if sum(1 for u in members if u in O) >= m]


def rich_vertices(G: Graph, ordering: VertexOrdering, r: int, m: int, O: Iterable[int]) -> tuple[int, ...]:
    """Vertices ``v`` with ``|R(v) & O| >= m``."""
    O = _vertex_set(G, O)
    return tuple(_rich_from(reach_sets(G, ordering, r), m, O))


def _vertex_set(G: Graph, X: Iterable[int]) -> list[int]:
    X = sorted(set(X))
    for v in X:
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} out of range [0, {G.n})")
    return X


@dataclass
class ShallowCollection:
    """Owner-indexed vertex sets together with the claimed ``(omega, t)``."""

    sets: dict[int, tuple[int, ...]] = field(default_factory=dict)
    omega: int = 0
    t: int = 0

    @property
    def owners(self) -> list[int]:
        return sorted(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def dumps(self) -> str:
        return "".join(f"{v}: {' '.join(map(str, self.sets[v]))}\n" for v in self.owners)

    @classmethod
    def loads(cls, text: str, omega: int = 0, t: int = 0) -> ShallowCollection:
        sets = {}
        for line in text.splitlines():
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            owner, _, rest = line.partition(":")
            sets[int(owner)] = tuple(sorted(int(x) for x in rest.split()))
        return cls(sets, omega, t)


def build_shallow_collection(G: Graph, ordering: VertexOrdering, r: int, m: int,
                             O: Iterable[int], A: Iterable[int]) -> ShallowCollection:
    """The collection indexed by ``A | O | O'`` where ``O'`` are the rich vertices.

    ``C_v = R(v)`` for rich ``v``; ``C_v`` is the union of ``R(x)`` over
    ``x`` in ``L(v)`` minus the rich vertices for the other members of ``O``;
    and ``C_v = {v}`` for the remaining members of ``A``. The claimed
    parameters are ``(b*m + 1, 2r)`` with ``b`` the weak colouring number of
    the ordering.
    """
    O, A = _vertex_set(G, O), _vertex_set(G, A)
    R = reach_sets(G, ordering, r)
    L = all_weak_reachable(G, ordering, r, R)
    b = 0 if G.n == 0 else max(len(x) for x in L)
    rich = set(_rich_from(R, m, O))
    sets: dict[int, tuple[int, ...]] = {}
    for v in rich:
        sets[v] = R[v]
    for v in O:
        if v not in rich:
            sets[v] = tuple(sorted(set().union(*(R[x] for x in L[v] if x not in rich))))
    for v in A:
        if v not in sets:
            sets[v] = (v,)
    return ShallowCollection(dict(sorted(sets.items())), b * m + 1, 2 * r)


def check_shallow(G: Graph, coll: ShallowCollection) -> tuple[int, int]:
    """Measured ``(omega, t)``: maximum multiplicity and maximum radius of ``G[C]``.

    Raises :class:`ShallownessError` naming the owner of a set that induces
    a disconnected (or empty) subgraph.
    """
    multiplicity = [0] * G.n
    t = 0
    for owner in coll.owners:
        members = coll.sets[owner]
        sub, _ = induced_subgraph(G, members)
        if sub.n == 0 or not is_connected(sub):
            raise ShallownessError(owner, members)
        for v in members:
            multiplicity[v] += 1
        t = max(t, min(eccentricity(sub, x) for x in range(sub.n)))
    return max(multiplicity, default=0), int(t)


def packing_graph(G: Graph, coll: ShallowCollection) -> tuple[Graph, list[int]]:
    """Graph on the collection's members; two members are adjacent when they share or join by an edge."""
    owners = coll.owners
    closed = [set(coll.sets[o]).union(*(G.adj[v] for v in coll.sets[o])) for o in owners]
    edges = []
    for i in range(len(owners)):
        for j in range(i + 1, len(owners)):
            if not closed[i].isdisjoint(coll.sets[owners[j]]):
                edges.append((i, j))
    return Graph.from_edges(len(owners), edges), owners


def density(G: Graph) -> Fraction:
    if G.n == 0:
        raise InputError("density is undefined for the empty graph")
    return Fraction(G.m, G.n)


def lemma_main_certificate(G: Graph, ordering: VertexOrdering, r: int, m: int, O: Iterable[int],
                           A: Iterable[int], Z: Iterable[int],
                           coll: ShallowCollection | None = None) -> int | None:
    """A vertex ``u`` of ``Z`` in ``O | O'`` whose set touches ``C_v`` for every ``v`` in ``Z & A - (O | O')``.

    ``Z`` must induce a subgraph of diameter at most ``r`` and meet ``O``.
    The smallest valid ``u`` is returned; ``None`` means no witness exists.
    """
    O, A, Z = _vertex_set(G, O), _vertex_set(G, A), _vertex_set(G, Z)
    if not set(Z) & set(O):
        raise InputError("Z must intersect O")
    sub, _ = induced_subgraph(G, Z)
    if graph_diameter(sub) > r:
        raise InputError(f"G[Z] has diameter greater than r={r}")
    if coll is None:
        coll = build_shallow_collection(G, ordering, r, m, O, A)
    heavy = set(O) | set(rich_vertices(G, ordering, r, m, O))
    return _witness(Z, heavy, set(A), *packing_graph(G, coll))


def _witness(Z: Sequence[int], heavy: set[int], A: set[int], H: Graph, owners: list[int]) -> int | None:
    index = {o: i for i, o in enumerate(owners)}
    targets = [v for v in Z if v in A and v not in heavy]
    for u in Z:
        if u in heavy and all(H.has_edge(index[u], index[v]) for v in targets):
            return u
    return None


def lemma_trial(G: Graph, ordering: VertexOrdering, r: int, m: int, O: Iterable[int], A: Iterable[int],
                occurrences: Iterable[Sequence[int]] = ()) -> dict:
    """Check the rich-vertex bound, the shallowness claim and the certificate on one instance.

    Returns a diagnostic row; ``bound_ok`` is True when every check passed.
    Occurrences whose induced diameter exceeds ``r`` or that miss ``O`` are
    skipped for the certificate check.
    """
    O, A = _vertex_set(G, O), _vertex_set(G, A)
    b = wcol_of_ordering(G, ordering, r)
    rich = rich_vertices(G, ordering, r, m, O)
    coll = build_shallow_collection(G, ordering, r, m, O, A)
    omega, t = check_shallow(G, coll)
    rich_ok = m * len(rich) <= b * len(O)
    shallow_ok = omega <= b * m + 1 and t <= 2 * r
    checked = failures = 0
    Oset = set(O)
    heavy = Oset | set(rich)
    H, owners = packing_graph(G, coll)
    for Z in occurrences:
        if Oset.isdisjoint(Z):
            continue
        sub, _ = induced_subgraph(G, Z)
        if graph_diameter(sub) > r:
            continue
        checked += 1
        if _witness(sorted(Z), heavy, set(A), H, owners) is None:
            failures += 1
    return {
        "n": G.n,
        "m_edges": G.m,
        "r": r,
        "m": m,
        "b": b,
        "O": len(O),
        "O_rich": len(rich),
        "omega_actual": omega,
        "t_actual": t,
        "certificates": checked,
        "certificate_failures": failures,
        "bound_ok": rich_ok and shallow_ok and failures == 0,
    }


__all__ = [
    "VertexOrdering", "ShallowCollection", "degeneracy_ordering", "weak_reachable", "reach_sets",
    "all_weak_reachable", "wcol_of_ordering", "wcol_exact", "wcol_bruteforce", "rich_vertices",
    "build_shallow_collection", "check_shallow", "packing_graph", "density",
    "lemma_main_certificate", "lemma_trial",
]
