"""[0,2]-factors: spanning subgraphs with every degree in {0, 1, 2}.

Such a subgraph is a disjoint union of cycles, paths, and isolated
vertices covering all vertices. Its deficiency (the characteristic
number) is sum(2 - deg(v)) = 2n - 2|edges|; it is even, and half of it
counts the path and isolated-vertex components. A factor with deficiency
zero is a 2-factor: a spanning set of disjoint cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, parse_edge_list


class FactorError(ValueError):
    """Raised when an edge set is not a valid [0,2]-factor."""


class FactorSubgraph:
    """Value type for a [0,2]-factor of a host graph.

    Instances are never mutated; operations that change a factor return a
    new one. ``deficiency`` is cached by constructors and maintained
    incrementally by chain application; ``validate_factor`` recomputes it
    from scratch and is the authority.
    """

    __slots__ = ("graph", "edge_ids", "degrees", "deficiency")

    def __init__(self, graph: Graph, edge_ids: frozenset[int],
                 degrees: tuple[int, ...], deficiency: int):
        self.graph = graph
        self.edge_ids = edge_ids
        self.degrees = degrees
        self.deficiency = deficiency

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactorSubgraph):
            return NotImplemented
        return self.graph == other.graph and self.edge_ids == other.edge_ids

    def __hash__(self) -> int:
        return hash((self.graph, self.edge_ids))

    def __repr__(self) -> str:
        return (f"FactorSubgraph(edges={len(self.edge_ids)}, "
                f"deficiency={self.deficiency})")


@dataclass(frozen=True)
class FactorDecomposition:
    """Component view of a factor: vertex-disjoint cycles, paths, isolated."""

    cycles: tuple[tuple[int, ...], ...]
    paths: tuple[tuple[int, ...], ...]
    isolated: tuple[int, ...]


def null_factor(g: Graph) -> FactorSubgraph:
    """The edgeless factor; deficiency 2n."""
    return FactorSubgraph(g, frozenset(), (0,) * g.n, 2 * g.n)


def validate_factor(g: Graph, edge_ids: Iterable[int]) -> FactorSubgraph:
    """Check an edge-id set and return the factor, recomputing everything.

    Raises FactorError naming the bad edge id or the first vertex whose
    degree exceeds 2.
    """
    ids = frozenset(edge_ids)
    deg = [0] * g.n
    for eid in sorted(ids):
        if not 0 <= eid < g.edge_count:
            raise FactorError(f"edge id {eid} not in graph")
        u, v = g.endpoints(eid)
        deg[u] += 1
        deg[v] += 1
    for v, d in enumerate(deg):
        if d > 2:
            raise FactorError(f"vertex {v} has degree {d} in factor (max 2)")
    deficiency = 2 * g.n - 2 * len(ids)
    return FactorSubgraph(g, ids, tuple(deg), deficiency)


def characteristic_number(r: FactorSubgraph) -> int:
    """Deficiency sum(2 - deg(v)); even, equal to 2n - 2|edges|."""
    return r.deficiency


def greedy_factor(g: Graph) -> FactorSubgraph:
    """Warm-start factor: add edges in ascending id order while degrees permit."""
    deg = [0] * g.n
    ids = []
    for eid, (u, v) in enumerate(g.edges):
        if deg[u] < 2 and deg[v] < 2:
            deg[u] += 1
            deg[v] += 1
            ids.append(eid)
    return FactorSubgraph(g, frozenset(ids), tuple(deg), 2 * g.n - 2 * len(ids))


def _factor_adjacency(r: FactorSubgraph) -> list[list[int]]:
    fadj: list[list[int]] = [[] for _ in range(r.graph.n)]
    for eid in r.edge_ids:
        u, v = r.graph.endpoints(eid)
        fadj[u].append(v)
        fadj[v].append(u)
    for lst in fadj:
        lst.sort()
    return fadj


def decompose(r: FactorSubgraph) -> FactorDecomposition:
    """Split a factor into its cycle, path, and isolated-vertex components.

    Deterministic: components are listed by their smallest vertex; a path
    is walked from its smaller endpoint; a cycle starts at its smallest
    vertex and proceeds toward that vertex's smaller neighbor.
    """
    fadj = _factor_adjacency(r)
    n = r.graph.n
    visited = [False] * n
    cycles: list[tuple[int, ...]] = []
    paths: list[tuple[int, ...]] = []
    isolated: list[int] = []

    for v in range(n):
        if visited[v]:
            continue
        if not fadj[v]:
            visited[v] = True
            isolated.append(v)
            continue
        comp = [v]
        visited[v] = True
        stack = [v]
        while stack:
            x = stack.pop()
            for y in fadj[x]:
                if not visited[y]:
                    visited[y] = True
                    comp.append(y)
                    stack.append(y)
        ends = sorted(x for x in comp if len(fadj[x]) == 1)
        if ends:
            walk = [ends[0]]
            prev = -1
            cur = ends[0]
            while True:
                nxt = [y for y in fadj[cur] if y != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                walk.append(cur)
            paths.append(tuple(walk))
        else:
            start = min(comp)
            nxt = min(fadj[start])
            walk = [start, nxt]
            prev, cur = start, nxt
            while True:
                step = fadj[cur][0] if fadj[cur][0] != prev else fadj[cur][1]
                if step == start:
                    break
                walk.append(step)
                prev, cur = cur, step
            cycles.append(tuple(walk))

    return FactorDecomposition(tuple(cycles), tuple(paths), tuple(isolated))


def extract_two_factor(r: FactorSubgraph) -> list[tuple[int, ...]]:
    """Cycle list of a deficiency-zero factor; raises FactorError otherwise."""
    if r.deficiency != 0:
        raise FactorError(f"not a 2-factor: deficiency is {r.deficiency}")
    dec = decompose(r)
    return list(dec.cycles)


def emit_factor(r: FactorSubgraph) -> str:
    """Factor in the edge-list format: host vertex count, then factor edges."""
    lines = [str(r.graph.n)]
    for u, v in sorted(r.graph.endpoints(eid) for eid in r.edge_ids):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_factor(g: Graph, text: str) -> FactorSubgraph:
    """Read a factor of g from edge-list text; every edge must exist in g."""
    sub = parse_edge_list(text)
    if sub.n != g.n:
        raise FactorError(f"factor header says {sub.n} vertices, graph has {g.n}")
    ids = []
    for u, v in sub.edges:
        eid = g.edge_id(u, v)
        if eid is None:
            raise FactorError(f"factor edge ({u}, {v}) is not an edge of the graph")
        ids.append(eid)
    return validate_factor(g, ids)
