"""Driver loop: augment a factor chain by chain until none is found.

Each applied chain lowers the deficiency by exactly 2, so the loop makes
at most n iterations from the null factor. With the complete
``exhaustive`` search the final factor is maximum (its deficiency is the
graph's characteristic number, and it is a 2-factor iff that number is
zero). With the fast ``dfs`` search the run may stop early; the reported
number is an upper bound on the true characteristic number, never below
it. Reports always name the strategy that produced them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .factor import (FactorSubgraph, decompose, extract_two_factor,
                     null_factor, validate_factor)
from .graph import Graph
from .pchain import PChain, apply_pchain, find_pchain_dfs, find_pchain_exhaustive

STRATEGIES = ("dfs", "exhaustive")


@dataclass
class SolveReport:
    """Full trace of one run: ts values strictly drop by 2 per step."""

    final_factor: FactorSubgraph
    char_number: int
    is_two_factor: bool
    trace: list[tuple[int, PChain, int]] = field(default_factory=list)
    strategy: str = "exhaustive"
    iterations: int = 0
    elapsed: float = 0.0


def _find_chain(g: Graph, r: FactorSubgraph, strategy: str) -> PChain | None:
    if strategy == "dfs":
        # Sweep every deficient start in ascending order; first hit wins.
        for start in range(g.n):
            if r.degrees[start] <= 1:
                chain = find_pchain_dfs(g, r, start)
                if chain is not None:
                    return chain
        return None
    if strategy == "exhaustive":
        return find_pchain_exhaustive(g, r)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def maximize_factor(g: Graph, strategy: str = "exhaustive",
                    initial: FactorSubgraph | None = None) -> SolveReport:
    """Iterate find-and-apply from ``initial`` (default: the null factor).

    Stops when the deficiency reaches 0 (a 2-factor) or no chain is found
    (a maximal factor under the chosen search). A supplied initial factor
    is revalidated against g before use.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if initial is None:
        r = null_factor(g)
    else:
        r = validate_factor(g, initial.edge_ids)

    t0 = time.perf_counter()
    trace: list[tuple[int, PChain, int]] = []
    while r.deficiency > 0:
        chain = _find_chain(g, r, strategy)
        if chain is None:
            break
        before = r.deficiency
        r = apply_pchain(r, chain)
        trace.append((before, chain, r.deficiency))
    elapsed = time.perf_counter() - t0

    return SolveReport(
        final_factor=r,
        char_number=r.deficiency,
        is_two_factor=r.deficiency == 0,
        trace=trace,
        strategy=strategy,
        iterations=len(trace),
        elapsed=elapsed,
    )


def char_number(g: Graph, strategy: str = "exhaustive") -> int:
    """Deficiency of the factor the chosen strategy converges to.

    Under ``exhaustive`` this is the graph's characteristic number (a graph
    invariant; zero iff a 2-factor exists).
    """
    return maximize_factor(g, strategy).char_number


@dataclass(frozen=True)
class TwoFactorResult:
    """Either a spanning cycle cover or the achieved deficiency certificate.

    The certificate is authoritative only under the ``exhaustive`` strategy.
    """

    cycles: tuple[tuple[int, ...], ...] | None
    char_number: int
    report: SolveReport


def two_factor(g: Graph, strategy: str = "exhaustive") -> TwoFactorResult:
    """Find a 2-factor, or report the deficiency the run got stuck at."""
    report = maximize_factor(g, strategy)
    if report.is_two_factor:
        cycles = tuple(extract_two_factor(report.final_factor))
        return TwoFactorResult(cycles, 0, report)
    return TwoFactorResult(None, report.char_number, report)


def structured_report(report: SolveReport, include_trace: bool = False) -> str:
    """Machine-parseable key=value lines (0-based labels)."""
    g = report.final_factor.graph
    initial = report.trace[0][0] if report.trace else report.char_number
    lines = [
        f"strategy={report.strategy}",
        f"n={g.n}",
        f"edges={g.edge_count}",
        f"initial_deficiency={initial}",
        f"char_number={report.char_number}",
        f"is_two_factor={'true' if report.is_two_factor else 'false'}",
        f"iterations={report.iterations}",
        f"elapsed_ms={report.elapsed * 1000.0:.3f}",
    ]
    pairs = sorted(g.endpoints(eid) for eid in report.final_factor.edge_ids)
    lines.append("factor_edges=" + " ".join(f"{u}-{v}" for u, v in pairs))
    if report.is_two_factor:
        for cyc in extract_two_factor(report.final_factor):
            lines.append("cycle=" + " ".join(str(v) for v in cyc))
    if include_trace:
        for before, chain, after in report.trace:
            verts = ",".join(str(v) for v in chain.vertices)
            lines.append(f"step={before}:{after}:{verts}")
    return "\n".join(lines) + "\n"


def text_report(report: SolveReport, include_trace: bool = False) -> str:
    """Human-readable report; vertex labels are printed 1-based."""
    lines = [
        f"strategy: {report.strategy}",
        f"characteristic number: {report.char_number}",
    ]
    if report.is_two_factor:
        lines.append("2-factor: yes")
        for cyc in extract_two_factor(report.final_factor):
            lines.append("  cycle: " + " ".join(str(v + 1) for v in cyc))
    else:
        dec = decompose(report.final_factor)
        lines.append(f"2-factor: no (deficiency {report.char_number})")
        lines.append(
            f"final factor: {len(dec.cycles)} cycle(s), {len(dec.paths)} path(s), "
            f"{len(dec.isolated)} isolated vertex/vertices")
    lines.append(f"iterations: {report.iterations}")
    lines.append(f"elapsed: {report.elapsed * 1000.0:.3f} ms")
    if include_trace:
        for before, chain, after in report.trace:
            verts = " ".join(str(v + 1) for v in chain.vertices)
            lines.append(f"  deficiency {before} -> {after} via chain {verts}")
    return "\n".join(lines) + "\n"
