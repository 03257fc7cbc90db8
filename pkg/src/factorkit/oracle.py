"""Independent ground truth and claim-auditing machinery.

``brute_force_char_number`` finds a maximum simple 2-matching (largest
edge set with all degrees <= 2) by branch and bound over edge subsets,
deliberately sharing nothing with the chain search it cross-checks.

``decompose_symdiff`` partitions the symmetric difference of two factors
into alternating chains bounded by end-edges, the structure that explains
why a non-maximum factor always admits an augmenting chain: whenever the
second factor has fewer deficiencies, counting forces at least one chain
whose both end-edges come from the second factor, and that chain is a
valid augmenting chain for the first.

``mine_counterexamples`` samples random graphs, runs the fast solver, and
compares against the brute-force optimum, recording completeness gaps as
findings and auditing every run for soundness violations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .factor import FactorError, FactorSubgraph, null_factor, validate_factor
from .graph import Graph, emit_edge_list, gen_random
from .pchain import apply_pchain, validate_pchain
from .solver import SolveReport, maximize_factor

ORACLE_EDGE_LIMIT = 60

FORM_AUGMENTING = "augmenting"    # both end-edges exclusive to the second factor
FORM_DIMINISHING = "diminishing"  # both end-edges exclusive to the first factor
FORM_NEUTRAL = "neutral"          # one end-edge from each side
FORM_CLOSED = "closed"            # balanced closed trail, no end-edges


class OracleSizeError(ValueError):
    """Instance exceeds the enumeration guard."""


class DecompositionError(RuntimeError):
    """The symmetric-difference pairing hit a state it proves impossible."""


@dataclass(frozen=True)
class OracleResult:
    max_edges: int
    min_ts: int
    witness: FactorSubgraph


def brute_force_char_number(g: Graph) -> OracleResult:
    """Exact maximum over all edge subsets with every degree <= 2.

    Include-first depth-first branch and bound; the bound combines the
    number of unprocessed edges with the global cap of n edges (each edge
    consumes 2 of the 2n degree slots). Guarded at |E| <= 60; worst case
    is still exponential, so this is a desk-scale reference only.
    """
    m = g.edge_count
    if m > ORACLE_EDGE_LIMIT:
        raise OracleSizeError(
            f"graph has {m} edges; brute-force oracle is guarded at {ORACLE_EDGE_LIMIT}")
    n = g.n
    edges = g.edges
    deg = [0] * n
    cur: list[int] = []
    best_count = -1
    best_ids: tuple[int, ...] = ()
    cap = min(n, m)

    def rec(i: int, count: int) -> None:
        nonlocal best_count, best_ids
        if count > best_count:
            best_count = count
            best_ids = tuple(cur)
        if i == m or best_count == cap:
            return
        if min(count + (m - i), n) <= best_count:
            return
        u, v = edges[i]
        if deg[u] < 2 and deg[v] < 2:
            deg[u] += 1
            deg[v] += 1
            cur.append(i)
            rec(i + 1, count + 1)
            deg[u] -= 1
            deg[v] -= 1
            cur.pop()
        rec(i + 1, count)

    rec(0, 0)
    witness = validate_factor(g, best_ids)
    return OracleResult(best_count, 2 * n - 2 * best_count, witness)


@dataclass(frozen=True)
class AlternatingChain:
    """Chain in a symmetric difference, alternating between the two
    factors' exclusive edge sets. ``form`` is one of the FORM_* tags."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    form: str

    @property
    def length(self) -> int:
        return len(self.edge_ids)


def _derive_form(r: FactorSubgraph, r2: FactorSubgraph,
                 vertices: Sequence[int], edge_ids: Sequence[int]) -> str:
    first_in_r = edge_ids[0] in r.edge_ids
    last_in_r = edge_ids[-1] in r.edge_ids
    if vertices[0] == vertices[-1] and len(edge_ids) % 2 == 0:
        # A closed even trail alternates all the way around; whether its
        # two ends also touch deficient vertices does not change its
        # balanced edge counts, so classify by end-edge presence.
        first_end = r2.degrees[vertices[0]] <= 1 if first_in_r else r.degrees[vertices[0]] <= 1
        last_end = r2.degrees[vertices[-1]] <= 1 if last_in_r else r.degrees[vertices[-1]] <= 1
        return FORM_NEUTRAL if (first_end and last_end) else FORM_CLOSED
    if first_in_r and last_in_r:
        return FORM_DIMINISHING
    if not first_in_r and not last_in_r:
        return FORM_AUGMENTING
    return FORM_NEUTRAL


def decompose_symdiff(r: FactorSubgraph, r2: FactorSubgraph) -> list[AlternatingChain]:
    """Partition the edges of E(r) xor E(r2) into alternating chains.

    Construction: at every vertex, each edge-end that is not an end-edge
    there is paired with an edge-end of the opposite class; following the
    pairing yields the chains, so every symmetric-difference edge lands in
    exactly one chain. Ends left unpaired are exactly the end-edges, which
    guarantees that every chain tagged ``augmenting`` validates as an
    augmenting chain for ``r``. Balanced components with no end-edges come
    out as closed trails tagged ``closed``.

    Deterministic: pairing and chain starts always prefer the lowest
    vertex id, then the lowest edge id.
    """
    if r.graph != r2.graph:
        raise ValueError("factors live on different graphs")
    g = r.graph
    sym = sorted(r.edge_ids ^ r2.edge_ids)
    in_r = r.edge_ids

    def is_end(eid: int, v: int) -> bool:
        # An end exclusive to r ends a chain where r2 is deficient, and
        # vice versa.
        if eid in in_r:
            return r2.degrees[v] <= 1
        return r.degrees[v] <= 1

    ends_at: dict[int, list[int]] = {}
    for eid in sym:
        u, v = g.endpoints(eid)
        ends_at.setdefault(u, []).append(eid)
        ends_at.setdefault(v, []).append(eid)

    partner: dict[tuple[int, int], int] = {}
    unpaired: list[tuple[int, int]] = []  # (vertex, eid), both-end unpaired ends
    for v in sorted(ends_at):
        r_non, r_end, r2_non, r2_end = [], [], [], []
        for eid in ends_at[v]:
            if eid in in_r:
                (r_end if is_end(eid, v) else r_non).append(eid)
            else:
                (r2_end if is_end(eid, v) else r2_non).append(eid)
        # Every non-end must pair with the opposite class; ends pair only
        # when needed as partners. Matching their counts is what makes the
        # leftover ends the true chain boundaries.
        a = r_non + r_end[: max(0, len(r2_non) - len(r_non))]
        b = r2_non + r2_end[: max(0, len(r_non) - len(r2_non))]
        if len(a) < len(r_non) + max(0, len(r2_non) - len(r_non)) or \
           len(b) < len(r2_non) + max(0, len(r_non) - len(r2_non)):
            raise DecompositionError(
                f"vertex {v}: not enough opposite-class ends to absorb non-end edges")
        for ea, eb in zip(a, b):
            partner[(v, ea)] = eb
            partner[(v, eb)] = ea
        for eid in r_end[max(0, len(r2_non) - len(r_non)):]:
            unpaired.append((v, eid))
        for eid in r2_end[max(0, len(r_non) - len(r2_non)):]:
            unpaired.append((v, eid))

    consumed: set[int] = set()
    chains: list[AlternatingChain] = []

    def walk(v: int, eid: int) -> tuple[list[int], list[int]]:
        verts = [v]
        eids = []
        while True:
            a, b = g.endpoints(eid)
            u = b if a == v else a
            eids.append(eid)
            consumed.add(eid)
            verts.append(u)
            nxt = partner.get((u, eid))
            if nxt is None or nxt in consumed:
                return verts, eids
            v, eid = u, nxt

    for v, eid in sorted(unpaired):
        if eid in consumed:
            continue
        verts, eids = walk(v, eid)
        chains.append(AlternatingChain(tuple(verts), tuple(eids),
                                       _derive_form(r, r2, verts, eids)))

    for eid in sym:
        if eid in consumed:
            continue
        v = min(g.endpoints(eid))
        verts, eids = walk(v, eid)
        if verts[0] != verts[-1]:
            raise DecompositionError(
                f"leftover trail starting at edge {eid} did not close")
        chains.append(AlternatingChain(tuple(verts), tuple(eids),
                                       _derive_form(r, r2, verts, eids)))

    return chains


def classify_chain(chain: AlternatingChain, r: FactorSubgraph,
                   r2: FactorSubgraph) -> str:
    """Recompute a chain's form tag, verifying its structural invariants.

    Raises ValueError on malformed chains (broken adjacency, repeated or
    shared edges, failed alternation, or count/parity inconsistencies).
    """
    g = r.graph
    verts, eids = chain.vertices, chain.edge_ids
    if not eids or len(verts) != len(eids) + 1:
        raise ValueError("malformed chain: need k >= 1 edges and k + 1 vertices")
    if len(set(eids)) != len(eids):
        raise ValueError("malformed chain: repeated edge id")
    prev_in_r: bool | None = None
    n_r = n_r2 = 0
    for i, eid in enumerate(eids):
        if set(g.endpoints(eid)) != {verts[i], verts[i + 1]}:
            raise ValueError(f"edge {eid} does not join vertices {verts[i]} and {verts[i + 1]}")
        in_first = eid in r.edge_ids
        in_second = eid in r2.edge_ids
        if in_first == in_second:
            raise ValueError(f"edge {eid} is not exclusive to one factor")
        if prev_in_r is not None and in_first == prev_in_r:
            raise ValueError(f"edges {eids[i - 1]} and {eid} do not alternate")
        prev_in_r = in_first
        n_r += in_first
        n_r2 += in_second

    form = _derive_form(r, r2, verts, eids)
    k = len(eids)
    if form == FORM_AUGMENTING and not (k % 2 == 1 and n_r < n_r2):
        raise ValueError("augmenting chain must be odd with more second-factor edges")
    if form == FORM_DIMINISHING and not (k % 2 == 1 and n_r > n_r2):
        raise ValueError("diminishing chain must be odd with more first-factor edges")
    if form in (FORM_NEUTRAL, FORM_CLOSED) and not (k % 2 == 0 and n_r == n_r2):
        raise ValueError("balanced chain must be even with equal edge counts")
    return form


def audit_solve(g: Graph, report: SolveReport,
                initial: FactorSubgraph | None = None) -> list[str]:
    """Independently replay a solve trace; returns discrepancies (empty = sound)."""
    problems: list[str] = []
    r = null_factor(g) if initial is None else validate_factor(g, initial.edge_ids)
    for step, (before, chain, after) in enumerate(report.trace):
        if before != r.deficiency:
            problems.append(f"step {step}: trace says deficiency {before}, replay has {r.deficiency}")
        violations = validate_pchain(g, r, chain)
        if violations:
            problems.append(f"step {step}: invalid chain: " + "; ".join(violations))
            return problems
        r = apply_pchain(r, chain)
        if after != r.deficiency:
            problems.append(f"step {step}: trace says deficiency {after}, replay has {r.deficiency}")
    if r.edge_ids != report.final_factor.edge_ids:
        problems.append("final factor does not match the replayed trace")
    try:
        checked = validate_factor(g, report.final_factor.edge_ids)
    except FactorError as exc:
        problems.append(f"final factor invalid: {exc}")
        return problems
    if checked.deficiency != report.char_number:
        problems.append(
            f"reported char_number {report.char_number} != recomputed {checked.deficiency}")
    if report.is_two_factor != (checked.deficiency == 0):
        problems.append("is_two_factor flag inconsistent with deficiency")
    if report.iterations != len(report.trace):
        problems.append("iterations does not match trace length")
    return problems


@dataclass(frozen=True)
class MiningRecord:
    n: int
    p: float
    seed: int
    solver_ts: int
    oracle_ts: int
    gap: bool
    sound: bool


@dataclass
class MiningReport:
    strategy: str
    records: list[MiningRecord] = field(default_factory=list)

    @property
    def instances(self) -> int:
        return len(self.records)

    @property
    def gap_count(self) -> int:
        return sum(rec.gap for rec in self.records)

    @property
    def gap_rate(self) -> float:
        return self.gap_count / self.instances if self.records else 0.0

    @property
    def soundness_violations(self) -> int:
        return sum(not rec.sound for rec in self.records)

    def structured(self) -> str:
        lines = []
        for rec in self.records:
            lines.append(
                f"record n={rec.n} p={rec.p} seed={rec.seed} "
                f"{self.strategy}_ts={rec.solver_ts} oracle_ts={rec.oracle_ts} "
                f"gap={int(rec.gap)} sound={int(rec.sound)}")
        lines.append(
            f"summary strategy={self.strategy} instances={self.instances} "
            f"gap_count={self.gap_count} gap_rate={self.gap_rate:.6f} "
            f"soundness_violations={self.soundness_violations}")
        return "\n".join(lines) + "\n"


def mine_counterexamples(ns: Iterable[int], ps: Iterable[float],
                         seeds: Iterable[int], out_dir: str | Path | None = None,
                         strategy: str = "dfs") -> MiningReport:
    """Sweep G(n, p) samples, comparing the solver against the oracle.

    A gap (solver deficiency above the brute-force minimum) is a finding,
    not a failure: the run records it and keeps going. Any soundness
    problem (invalid chain or factor, inconsistent trace, or a solver
    value below the optimum) is flagged on the record. When ``out_dir``
    is given, every gap or unsound instance is written there in edge-list
    format for replay.
    """
    out_path = Path(out_dir) if out_dir is not None else None
    if out_path is not None:
        out_path.mkdir(parents=True, exist_ok=True)
    report = MiningReport(strategy=strategy)
    for n in ns:
        for p in ps:
            for seed in seeds:
                g = gen_random(n, p, seed)
                solve = maximize_factor(g, strategy)
                problems = audit_solve(g, solve)
                oracle = brute_force_char_number(g)
                if solve.char_number < oracle.min_ts:
                    problems.append("solver reported a deficiency below the brute-force optimum")
                gap = solve.char_number > oracle.min_ts
                rec = MiningRecord(n, p, seed, solve.char_number, oracle.min_ts,
                                   gap, not problems)
                report.records.append(rec)
                if out_path is not None and (gap or problems):
                    name = f"gap_n{n}_p{p}_seed{seed}.txt"
                    (out_path / name).write_text(emit_edge_list(g), encoding="utf-8")
    return report
