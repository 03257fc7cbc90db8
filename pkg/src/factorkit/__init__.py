"""factorkit: maximum [0,2]-factors, characteristic numbers, and 2-factors.

A [0,2]-factor of a simple graph is a spanning subgraph with every degree
in {0, 1, 2}; its deficiency sum(2 - deg(v)) counts path and isolated
components twice. The minimum deficiency over all factors is a graph
invariant, zero exactly when the graph has a 2-factor (a spanning union
of disjoint cycles), which makes it a polynomial-time necessary condition
for Hamiltonicity. Factors are improved by applying alternating chains
through symmetric difference; each application lowers the deficiency by
exactly 2. The package pairs the fast edge-marking search with a complete
backtracking search, an independent brute-force oracle, and a
counterexample miner that audits the fast search's completeness.
"""

from .factor import (FactorDecomposition, FactorError, FactorSubgraph,
                     characteristic_number, decompose, emit_factor,
                     extract_two_factor, greedy_factor, null_factor,
                     parse_factor, validate_factor)
from .graph import (EdgeListError, Graph, emit_edge_list, gen_named,
                    gen_random, parse_edge_list, relabel)
from .oracle import (FORM_AUGMENTING, FORM_CLOSED, FORM_DIMINISHING,
                     FORM_NEUTRAL, ORACLE_EDGE_LIMIT, AlternatingChain,
                     DecompositionError, MiningRecord, MiningReport,
                     OracleResult, OracleSizeError, audit_solve,
                     brute_force_char_number, classify_chain,
                     decompose_symdiff, mine_counterexamples)
from .pchain import (PChain, PChainError, apply_pchain, find_pchain_dfs,
                     find_pchain_exhaustive, validate_pchain)
from .solver import (SolveReport, TwoFactorResult, char_number,
                     maximize_factor, structured_report, text_report,
                     two_factor)

__all__ = [
    "AlternatingChain", "DecompositionError", "EdgeListError",
    "FactorDecomposition", "FactorError", "FactorSubgraph",
    "FORM_AUGMENTING", "FORM_CLOSED", "FORM_DIMINISHING", "FORM_NEUTRAL",
    "Graph", "MiningRecord", "MiningReport", "ORACLE_EDGE_LIMIT",
    "OracleResult", "OracleSizeError", "PChain", "PChainError",
    "SolveReport", "TwoFactorResult", "apply_pchain", "audit_solve",
    "brute_force_char_number", "char_number", "characteristic_number",
    "classify_chain", "decompose", "decompose_symdiff", "emit_edge_list",
    "emit_factor", "extract_two_factor", "find_pchain_dfs",
    "find_pchain_exhaustive", "gen_named", "gen_random", "greedy_factor",
    "maximize_factor", "mine_counterexamples", "null_factor",
    "parse_edge_list", "parse_factor", "relabel", "structured_report",
    "text_report", "two_factor", "validate_factor", "validate_pchain",
]

__version__ = "0.1.0"
