"""Augmenting chains for [0,2]-factors and the searches that find them.

A chain here is a sequence of adjacent edges with no repeated edge
(vertices may repeat) that alternates between non-factor and factor
edges, starts and ends on non-factor edges, and terminates at deficient
vertices: both endpoints of factor-degree <= 1 when open, or a single
factor-degree-0 vertex when closed. Applying such a chain to the factor
by symmetric difference yields another valid factor whose deficiency is
exactly 2 lower. A single non-factor edge joining two deficient vertices
is the degenerate case.

Two searches are provided. ``find_pchain_dfs`` is the fast edge-marking
walk: it marks every edge it touches and never unmarks, so each edge is
inspected a bounded number of times per call, but the search may miss
chains a complete search would find. ``find_pchain_exhaustive`` is the
complete backtracking reference: it unmarks on backtrack and enumerates
every alternating distinct-edge walk, so it returns a chain iff one
exists.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .factor import FactorSubgraph
from .graph import Graph


class PChainError(ValueError):
    """Raised when applying a chain that fails validation."""


@dataclass(frozen=True)
class PChain:
    """Oriented chain: vertices x1..x(k+1) and the k edge ids joining them."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @classmethod
    def from_vertices(cls, g: Graph, vertices: tuple[int, ...] | list[int]) -> "PChain":
        """Resolve consecutive vertex pairs to edge ids (unambiguous in a simple graph)."""
        verts = tuple(vertices)
        if len(verts) < 2:
            raise ValueError("a chain needs at least two vertices")
        ids = []
        for a, b in zip(verts, verts[1:]):
            eid = g.edge_id(a, b)
            if eid is None:
                raise ValueError(f"({a}, {b}) is not an edge of the graph")
            ids.append(eid)
        return cls(verts, tuple(ids))


def validate_pchain(g: Graph, r: FactorSubgraph, chain: PChain) -> list[str]:
    """Check every chain invariant; returns a list of violations, empty if valid."""
    verts = chain.vertices
    eids = chain.edge_ids
    problems: list[str] = []

    if not eids or len(verts) != len(eids) + 1:
        return ["malformed chain: need k >= 1 edges and k + 1 vertices"]
    for eid in eids:
        if not 0 <= eid < g.edge_count:
            return [f"edge id {eid} not in graph"]

    k = len(eids)
    if k % 2 == 0:
        problems.append(f"edge count {k} is even; it must be odd")

    dups = sorted(eid for eid, c in Counter(eids).items() if c > 1)
    if dups:
        problems.append(f"repeated edge id(s): {dups}")

    for i, eid in enumerate(eids):
        if set(g.endpoints(eid)) != {verts[i], verts[i + 1]}:
            problems.append(
                f"edge {eid} does not join vertices {verts[i]} and {verts[i + 1]}")
        in_factor = eid in r.edge_ids
        if i % 2 == 0 and in_factor:
            problems.append(f"edge {eid} at position {i + 1} must lie outside the factor")
        if i % 2 == 1 and not in_factor:
            problems.append(f"edge {eid} at position {i + 1} must lie inside the factor")

    first, last = verts[0], verts[-1]
    if first == last:
        if r.degrees[first] != 0:
            problems.append(
                f"closed chain endpoint {first} has factor degree "
                f"{r.degrees[first]}, needs 0")
    else:
        if r.degrees[first] > 1:
            problems.append(
                f"open chain endpoint {first} has factor degree "
                f"{r.degrees[first]}, needs <= 1")
        if r.degrees[last] > 1:
            problems.append(
                f"open chain endpoint {last} has factor degree "
                f"{r.degrees[last]}, needs <= 1")

    counts = Counter(verts)
    for w in sorted(set(verts[1:-1])):
        if counts[w] > 2:
            problems.append(f"inner vertex {w} appears {counts[w]} times (max 2)")

    return problems


def apply_pchain(r: FactorSubgraph, chain: PChain) -> FactorSubgraph:
    """Symmetric difference of the factor with a valid chain.

    The result is a valid factor with deficiency exactly 2 lower; degrees
    change only at the chain endpoints. Raises PChainError when the chain
    does not validate.
    """
    g = r.graph
    problems = validate_pchain(g, r, chain)
    if problems:
        raise PChainError("; ".join(problems))
    ids = set(r.edge_ids)
    deg = list(r.degrees)
    for eid in chain.edge_ids:
        u, v = g.endpoints(eid)
        if eid in ids:
            ids.discard(eid)
            deg[u] -= 1
            deg[v] -= 1
        else:
            ids.add(eid)
            deg[u] += 1
            deg[v] += 1
    return FactorSubgraph(g, frozenset(ids), tuple(deg), r.deficiency - 2)


def _factor_incidence(g: Graph, r: FactorSubgraph) -> list[list[int]]:
    # Per-vertex factor edge ids in ascending id order (the tie-break used
    # when a walk must leave an inner vertex along a factor edge).
    inc: list[list[int]] = [[] for _ in range(g.n)]
    for eid in sorted(r.edge_ids):
        u, v = g.endpoints(eid)
        inc[u].append(eid)
        inc[v].append(eid)
    return inc


def find_pchain_dfs(g: Graph, r: FactorSubgraph, start: int) -> PChain | None:
    """Edge-marking alternating walk from one deficient start vertex.

    Odd positions take the first unmarked non-factor edge (ascending
    neighbor), even positions the lowest-id unmarked factor edge. Marks
    persist through backtracking for the whole call and are reset between
    calls. A walk is accepted as soon as a non-factor edge reaches a
    vertex y with factor degree 1 (y != start) or factor degree 0, which
    covers the closed case y == start. Returns None once the first
    position has no unmarked candidate left. Sound but not necessarily
    complete: the persistent marks can hide chains.
    """
    if r.degrees[start] > 1:
        raise ValueError(
            f"start vertex {start} has factor degree {r.degrees[start]}, needs <= 1")
    marked = bytearray(g.edge_count)
    in_factor = r.edge_ids
    finc = _factor_incidence(g, r)

    frames: list[list[int]] = [[start, 0]]  # [current vertex, resume index]
    path_verts = [start]
    path_edges: list[int] = []

    while frames:
        frame = frames[-1]
        v = frame[0]
        if len(frames) % 2 == 1:  # odd position: unmarked non-factor edge
            adj = g.adj[v]
            idx = frame[1]
            chosen = None
            while idx < len(adj):
                u, eid = adj[idx]
                idx += 1
                if not marked[eid] and eid not in in_factor:
                    chosen = (u, eid)
                    break
            frame[1] = idx
            if chosen is None:
                frames.pop()
                if frames:
                    path_edges.pop()
                    path_verts.pop()
                continue
            u, eid = chosen
            marked[eid] = 1
            du = r.degrees[u]
            if (du == 1 and u != start) or du == 0:
                return PChain(tuple(path_verts + [u]), tuple(path_edges + [eid]))
            frames.append([u, 0])
            path_verts.append(u)
            path_edges.append(eid)
        else:  # even position: unmarked factor edge
            cands = finc[v]
            idx = frame[1]
            chosen = None
            while idx < len(cands):
                eid = cands[idx]
                idx += 1
                if not marked[eid]:
                    chosen = eid
                    break
            frame[1] = idx
            if chosen is None:
                frames.pop()
                if frames:
                    path_edges.pop()
                    path_verts.pop()
                continue
            marked[chosen] = 1
            a, b = g.endpoints(chosen)
            u = b if a == v else a
            frames.append([u, 0])
            path_verts.append(u)
            path_edges.append(chosen)
    return None


def find_pchain_exhaustive(g: Graph, r: FactorSubgraph) -> PChain | None:
    """Complete backtracking search over alternating distinct-edge walks.

    Tries every vertex with factor degree <= 1 in ascending order and,
    unlike the marking walk, releases edges on backtrack, so it returns a
    chain iff one exists. Walks are bounded by |E| edges since no edge
    repeats. Worst case exponential; intended for desk-scale instances.
    """
    in_factor = r.edge_ids
    finc = _factor_incidence(g, r)
    degrees = r.degrees

    def search(start: int) -> PChain | None:
        used: set[int] = set()
        verts = [start]
        eids: list[int] = []

        def odd_step(v: int) -> bool:
            for u, eid in g.adj[v]:
                if eid in in_factor or eid in used:
                    continue
                du = degrees[u]
                if (u != start and du <= 1) or (u == start and du == 0):
                    verts.append(u)
                    eids.append(eid)
                    return True
                used.add(eid)
                verts.append(u)
                eids.append(eid)
                if even_step(u):
                    return True
                used.discard(eid)
                verts.pop()
                eids.pop()
            return False

        def even_step(v: int) -> bool:
            for eid in finc[v]:
                if eid in used:
                    continue
                a, b = g.endpoints(eid)
                u = b if a == v else a
                used.add(eid)
                verts.append(u)
                eids.append(eid)
                if odd_step(u):
                    return True
                used.discard(eid)
                verts.pop()
                eids.pop()
            return False

        if odd_step(start):
            return PChain(tuple(verts), tuple(eids))
        return None

    for start in range(g.n):
        if degrees[start] <= 1:
            chain = search(start)
            if chain is not None:
                return chain
    return None
