from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factorkit import (FactorError, Graph, characteristic_number, decompose,
                       emit_factor, extract_two_factor, gen_named, gen_random,
                       greedy_factor, null_factor, parse_factor,
                       validate_factor)

from .conftest import random_factor


def test_null_factor_deficiencies():
    assert null_factor(gen_named("cycle", 5)).deficiency == 10
    assert null_factor(Graph(0, [])).deficiency == 0
    assert null_factor(gen_named("fig1")).deficiency == 32


def test_worked_example_factor(fig1, fig1_factor):
    assert fig1_factor.deficiency == 6
    assert characteristic_number(fig1_factor) == 6
    dec = decompose(fig1_factor)
    assert len(dec.paths) == 2 and len(dec.cycles) == 0
    assert dec.isolated == (15,)
    assert len(dec.paths) + len(dec.isolated) == fig1_factor.deficiency // 2


def test_validate_rejects_degree_three():
    star = gen_named("star", 3)
    with pytest.raises(FactorError, match="vertex 0 has degree 3"):
        validate_factor(star, [0, 1, 2])


def test_validate_rejects_unknown_edge_id():
    g = gen_named("path", 3)
    with pytest.raises(FactorError, match="edge id 9"):
        validate_factor(g, [9])


def test_full_cycle_is_two_factor():
    c5 = gen_named("cycle", 5)
    r = validate_factor(c5, range(5))
    assert r.deficiency == 0
    cycles = extract_two_factor(r)
    assert len(cycles) == 1 and len(cycles[0]) == 5


def test_single_edge_factor_deficiency():
    g = gen_named("path", 4)
    r = validate_factor(g, [0])
    assert r.deficiency == 6  # 2*4 - 2*1


def test_decompose_null_factor():
    g = gen_named("path", 4)
    dec = decompose(null_factor(g))
    assert dec.cycles == () and dec.paths == ()
    assert dec.isolated == (0, 1, 2, 3)


def test_worked_example_final_two_factor(fig1):
    # Final factor of the worked sequence: cycles (0,4,11,12,15,1) and
    # (2,13,14,10,9,8,5,6,7,3), built here directly from its edge pairs.
    c1 = [(0, 4), (4, 11), (11, 12), (12, 15), (15, 1), (1, 0)]
    c2 = [(2, 13), (13, 14), (14, 10), (10, 9), (9, 8), (8, 5), (5, 6),
          (6, 7), (7, 3), (3, 2)]
    ids = [fig1.edge_id(u, v) for u, v in c1 + c2]
    assert None not in ids
    r = validate_factor(fig1, ids)
    assert r.deficiency == 0
    dec = decompose(r)
    assert len(dec.cycles) == 2 and not dec.paths and not dec.isolated
    assert sorted(len(c) for c in dec.cycles) == [6, 10]


def test_extract_two_factor_requires_zero_deficiency(fig1_factor):
    with pytest.raises(FactorError, match="deficiency is 6"):
        extract_two_factor(fig1_factor)


def test_single_cycle_spanning_all_vertices_has_zero_deficiency():
    c7 = gen_named("cycle", 7)
    r = validate_factor(c7, range(7))
    dec = decompose(r)
    assert len(dec.cycles) == 1 and len(dec.cycles[0]) == 7
    assert r.deficiency == 0


def test_spanning_path_has_deficiency_two():
    # A connected graph whose factor is one spanning path: the path is
    # Hamiltonian and the deficiency is exactly 2.
    p6 = gen_named("path", 6)
    r = validate_factor(p6, range(5))
    assert r.deficiency == 2
    dec = decompose(r)
    assert len(dec.paths) == 1 and len(dec.paths[0]) == 6


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=2**30), st.integers(min_value=2, max_value=9))
def test_factor_invariants_on_random_factors(seed, n):
    rng = random.Random(seed)
    g = gen_random(n, rng.choice([0.2, 0.5, 0.8]), seed)
    r = random_factor(g, rng, rng.choice([0.4, 0.8]))
    assert all(d in (0, 1, 2) for d in r.degrees)
    ts = characteristic_number(r)
    assert ts % 2 == 0
    assert ts == 2 * g.n - 2 * len(r.edge_ids)
    assert ts == sum(2 - d for d in r.degrees)
    dec = decompose(r)
    assert len(dec.paths) + len(dec.isolated) == ts // 2
    covered = sorted(v for comp in (*dec.cycles, *dec.paths) for v in comp)
    covered += list(dec.isolated)
    assert sorted(covered) == list(range(g.n))


def test_greedy_factor_is_valid():
    g = gen_random(10, 0.6, 5)
    r = greedy_factor(g)
    check = validate_factor(g, r.edge_ids)
    assert check.deficiency == r.deficiency
    assert r.deficiency <= null_factor(g).deficiency


def test_factor_serialization_round_trip(fig1, fig1_factor):
    text = emit_factor(fig1_factor)
    assert text.startswith("16\n")
    back = parse_factor(fig1, text)
    assert back.edge_ids == fig1_factor.edge_ids


def test_parse_factor_rejects_foreign_edge():
    g = gen_named("path", 4)
    with pytest.raises(FactorError, match="not an edge"):
        parse_factor(g, "4\n0 2\n")
    with pytest.raises(FactorError, match="header"):
        parse_factor(g, "5\n0 1\n")
