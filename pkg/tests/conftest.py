from __future__ import annotations

import random

import pytest

from factorkit import FactorSubgraph, Graph, PChain, gen_named, validate_factor

# 0-based labels throughout; the worked example's figures are 1-based.
WORKED_L1 = (0, 4, 3, 7, 8, 5, 4, 11)
WORKED_DEGENERATE = (10, 14)
WORKED_L2 = (15, 1, 2, 13, 12, 15)


@pytest.fixture
def fig1() -> Graph:
    return gen_named("fig1")


@pytest.fixture
def fig1_factor(fig1: Graph) -> FactorSubgraph:
    # The two spanning paths 0..10 and 11..14 with vertex 15 isolated.
    return validate_factor(fig1, range(13))


def chain_from(g: Graph, vertices) -> PChain:
    return PChain.from_vertices(g, vertices)


def random_factor(g: Graph, rng: random.Random, keep: float = 0.7) -> FactorSubgraph:
    """Random valid factor: shuffled greedy insertion with a skip probability."""
    deg = [0] * g.n
    ids = []
    order = list(range(g.edge_count))
    rng.shuffle(order)
    for eid in order:
        u, v = g.endpoints(eid)
        if rng.random() < keep and deg[u] < 2 and deg[v] < 2:
            deg[u] += 1
            deg[v] += 1
            ids.append(eid)
    return validate_factor(g, ids)
