"""Edge-list text format and pattern-family files.

An edge list starts with a header ``n m`` followed by ``m`` lines ``u v``
(0-based). Lines starting with ``#`` are comments, blank lines are ignored.
"""
from __future__ import annotations

import os
import warnings

from .errors import ParseError
from .graph import Graph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(line: str, lineno: int, expected: int) -> list[int]:
    parts = line.split()
    if len(parts) != expected:
        raise ParseError(f"expected {expected} integers, got {line!r}", lineno)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {line!r}", lineno) from None
    if any(v < 0 for v in values):
        raise ParseError(f"negative value in {line!r}", lineno)
    return values


def load_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Duplicate edges collapse to one (with a warning); self-loops and
    out-of-range endpoints raise :class:`ParseError` naming the line.
    """
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header line", 1) from None
    n, m = _ints(header, lineno, 2)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    count = duplicates = 0
    for lineno, line in lines:
        u, v = _ints(line, lineno, 2)
        if u >= n or v >= n:
            raise ParseError(f"vertex index {max(u, v)} >= declared n={n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if v in nbrs[u]:
            duplicates += 1
        nbrs[u].add(v)
        nbrs[v].add(u)
        count += 1
    if count != m:
        warnings.warn(f"header declares {m} edges but {count} were listed", stacklevel=2)
    if duplicates:
        warnings.warn(f"{duplicates} duplicate edge(s) collapsed", stacklevel=2)
    return Graph(n, nbrs)


def dump_graph(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


def write_graph(G: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_graph(G))


def load_family(text: str) -> list[Graph]:
    """Parse a pattern-family document.

    Blocks are separated by blank lines. A block is either the name of a
    built-in pattern (``K2``, ``K3``, ``P3``, ``P4``, ``C4``, ``claw``) or an
    edge-list graph.
    """
    from .properties import builtin_pattern

    blocks: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        if not line.startswith("#"):
            blocks[-1].append((lineno, line))
    patterns = []
    for block in blocks:
        if not block:
            continue
        first_line, first = block[0]
        if len(block) == 1 and len(first.split()) == 1:
            try:
                patterns.append(builtin_pattern(first))
            except KeyError:
                raise ParseError(f"unknown built-in pattern {first!r}", first_line) from None
            continue
        # pad with comment lines so parse errors report file line numbers
        body = dict(block)
        doc = "\n".join(body.get(i, "#") for i in range(1, block[-1][0] + 1))
        patterns.append(load_graph(doc))
    if not patterns:
        raise ParseError("pattern family is empty", 1)
    return patterns


def read_family(path: str | os.PathLike) -> list[Graph]:
    with open(path, encoding="utf-8") as fh:
        return load_family(fh.read())
