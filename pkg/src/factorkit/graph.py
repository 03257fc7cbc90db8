"""Simple undirected graphs with stable edge ids, parsing, and generators.

Graphs are immutable after construction and safe to share across threads.
Vertices are dense integers 0..n-1. Every edge carries an integer id equal
to its position in the construction order; both adjacency entries of an
edge reference the same id, which lets higher layers traverse edge
sequences that may revisit vertices but never repeat an edge.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence


class EdgeListError(ValueError):
    """Raised for malformed edge-list input; message carries the line number."""


class Graph:
    """Finite simple undirected graph.

    ``edges[i]`` is the endpoint pair (u, v) with u < v of the edge with id
    ``i``. ``adj[v]`` lists ``(neighbor, edge_id)`` sorted ascending by
    neighbor, which fixes the iteration order used by every deterministic
    search in this package.
    """

    __slots__ = ("n", "edges", "adj", "_ids")

    def __init__(self, n: int, edge_pairs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        edges: list[tuple[int, int]] = []
        ids: dict[tuple[int, int], int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u, v in edge_pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex index out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in ids:
                raise ValueError(f"duplicate edge ({pair[0]}, {pair[1]})")
            eid = len(edges)
            ids[pair] = eid
            edges.append(pair)
            adj[pair[0]].append((pair[1], eid))
            adj[pair[1]].append((pair[0], eid))
        for lst in adj:
            lst.sort()
        self.edges = tuple(edges)
        self.adj = tuple(tuple(lst) for lst in adj)
        self._ids = ids

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def edge_id(self, u: int, v: int) -> int | None:
        """Id of the edge joining u and v, or None when absent."""
        return self._ids.get((u, v) if u < v else (v, u))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list interchange format.

    First content line is the vertex count n; each later non-empty line is
    "u v" with 0 <= u, v < n. Lines starting with '#' are comments. Every
    rejection names the offending line.
    """
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise EdgeListError("line 1: missing vertex count header") from None
    try:
        n = int(header)
    except ValueError:
        raise EdgeListError(f"line {lineno}: vertex count must be an integer, got {header!r}") from None
    if n < 0:
        raise EdgeListError(f"line {lineno}: vertex count must be nonnegative")

    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: vertices must be integers, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: vertex index out of range 0..{n - 1}")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at vertex {u}")
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise EdgeListError(f"line {lineno}: duplicate edge ({pair[0]}, {pair[1]})")
        seen.add(pair)
        pairs.append(pair)
    return Graph(n, pairs)


def emit_edge_list(g: Graph) -> str:
    """Canonical edge-list text: header then edges sorted by endpoint pair."""
    lines = [str(g.n)]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def _fig1_pairs() -> list[tuple[int, int]]:
    # 16 vertices, 21 edges: two paths (0..10 and 11..14), seven chords,
    # vertex 15 attached to 1 and 12. Bundled worked example used by the
    # golden tests.
    pairs = [(i, i + 1) for i in range(10)]          # 0-1-2-...-10
    pairs += [(11, 12), (12, 13), (13, 14)]          # 11-12-13-14
    pairs += [(0, 4), (3, 7), (5, 8), (4, 11)]
    pairs += [(1, 15), (2, 13), (12, 15)]
    pairs.append((10, 14))
    return pairs


def gen_named(family: str, *params: int) -> Graph:
    """Deterministic graph of a named family.

    Families: path(n), cycle(n>=3), complete(n), star(leaves),
    complete_bipartite(a, b), petersen, fig1.
    """

    def need(count: int) -> tuple[int, ...]:
        if len(params) != count:
            raise ValueError(f"family {family!r} takes {count} parameter(s), got {len(params)}")
        return params

    if family == "path":
        (n,) = need(1)
        if n < 1:
            raise ValueError("path needs n >= 1")
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        (n,) = need(1)
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        (n,) = need(1)
        if n < 1:
            raise ValueError("complete needs n >= 1")
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "star":
        (k,) = need(1)
        if k < 1:
            raise ValueError("star needs at least 1 leaf")
        return Graph(k + 1, [(0, i) for i in range(1, k + 1)])
    if family == "complete_bipartite":
        a, b = need(2)
        if a < 1 or b < 1:
            raise ValueError("complete_bipartite needs both sides >= 1")
        return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if family == "petersen":
        need(0)
        pairs = [(i, (i + 1) % 5) for i in range(5)]
        pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        pairs += [(i, i + 5) for i in range(5)]
        return Graph(10, pairs)
    if family == "fig1":
        need(0)
        return Graph(16, _fig1_pairs())
    raise ValueError(f"unknown family {family!r}")


def gen_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p) sample, reproducible across runs and platforms.

    Pinned algorithm: a Mersenne-Twister stream from ``random.Random(seed)``
    is consumed once per vertex pair (i, j), i < j in ascending order; the
    edge is included iff the draw is < p.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = random.Random(seed)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                pairs.append((i, j))
    return Graph(n, pairs)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Isomorphic copy with vertex u renamed to perm[u]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of 0..n-1")
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
