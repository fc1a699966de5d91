from fractions import Fraction as F
from itertools import product

import numpy as np
import pytest
from scipy.optimize import linprog

from weylgroupoid import catalog
from weylgroupoid.arrangement import (
    RootSet,
    chamber_basis,
    enumerate_chambers,
    seed_chamber,
    seed_point,
    strictly_feasible,
    validate_root_set,
    walls_of_chamber,
)
from weylgroupoid.errors import EmptyChamber, EmptyInput, NotSimplicial, NotSpanning, ParallelRoots
from weylgroupoid.exact_geometry import dot, solve_linear

from conftest import graph, roots, zaslavsky_count


def lp_margin(rows, equalities=()):
    """Float LP oracle: max t with row.v >= t, |v_k| <= 1, t <= 1."""
    rows = np.array([[float(x) for x in r] for r in rows], dtype=float)
    r = rows.shape[1]
    c = np.zeros(r + 1)
    c[-1] = -1
    a_ub = np.hstack([-rows, np.ones((len(rows), 1))])
    a_eq = None
    b_eq = None
    if equalities:
        a_eq = np.array([[float(x) for x in e] + [0.0] for e in equalities])
        b_eq = np.zeros(len(equalities))
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(len(rows)), A_eq=a_eq, b_eq=b_eq,
                  bounds=[(-1, 1)] * r + [(None, 1)])
    return -res.fun


def brute_force_chambers(R):
    """Every sign vector whose open cone is nonempty, decided by LP."""
    out = set()
    for signs in product((1, -1), repeat=R.n):
        rows = [[s * x for x in root] for s, root in zip(signs, R.positive_roots)]
        if lp_margin(rows) > 1e-9:
            out.add(signs)
    return out


def lp_walls(R, signs):
    rows = [[s * x for x in root] for s, root in zip(signs, R.positive_roots)]
    walls = []
    for k in range(R.n):
        if lp_margin(rows[:k] + rows[k + 1:], equalities=[R.positive_roots[k]]) > 1e-9:
            walls.append(k)
    return tuple(walls)


def test_validate_root_set_examples():
    R = validate_root_set(2, [(1, 0), (0, 1), (1, 1)])
    assert R.n == 3 and R.rank == 2
    with pytest.raises(ParallelRoots):
        validate_root_set(2, [(1, 0), (2, 0)])
    with pytest.raises(ParallelRoots):
        validate_root_set(2, [(1, 1), (-1, -1), (0, 1)])
    with pytest.raises(NotSpanning):
        validate_root_set(3, [(1, 0, 0), (0, 1, 0)])
    with pytest.raises(EmptyInput):
        validate_root_set(2, [])
    with pytest.raises(EmptyInput):
        validate_root_set(2, [(1, 0, 0)])


def test_json_round_trip():
    R = validate_root_set(2, [(1, 0), ("1/2", 3)])
    data = R.to_json()
    assert data == {"rank": 2, "positive_roots": [[1, 0], ["1/2", 3]]}
    assert RootSet.from_json(data) == R
    with pytest.raises(EmptyInput):
        RootSet.from_json({"rank": 2})


def test_seed_chamber_examples():
    c = seed_chamber(validate_root_set(1, [(1,)]))
    assert c.signs == (1,)
    a2 = roots("A2")
    c = seed_chamber(a2)
    # seed point (1, 1) is positive on every A2 root
    assert c.signs == (1, 1, 1)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B3", "G2", "bad_2_1", "generic4"])
def test_seed_signs_nonzero(name):
    R = roots(name)
    p = seed_point(R)
    assert all(dot(x, p) != 0 for x in R.positive_roots)


def test_walls_examples():
    assert walls_of_chamber(validate_root_set(1, [(1,)]), (1,)) == (0,)
    a2 = roots("A2")
    assert walls_of_chamber(a2, (1, 1, 1)) == (0, 1)
    assert lp_walls(a2, (1, 1, 1)) == (0, 1)
    with pytest.raises(EmptyChamber):
        walls_of_chamber(a2, (1, 1, -1))


@pytest.mark.parametrize("name", ["A2", "A3", "B3", "G2", "bad_2_1", "generic4"])
def test_walls_agree_with_lp(name):
    R = roots(name)
    g = enumerate_chambers(R, require_simplicial=False)
    for c in g.chambers:
        assert c.walls == lp_walls(R, c.signs)


def test_b3_every_chamber_has_three_walls():
    assert all(len(c.walls) == 3 for c in graph("B3").chambers)


def test_rank_one():
    g = enumerate_chambers(validate_root_set(1, [(1,)]))
    assert len(g) == 2
    assert g.edges == [(0, 1, 0)]


def test_a2_hexagon():
    g = graph("A2")
    assert len(g) == 6 and len(g.edges) == 6
    degree = {c.id: 0 for c in g.chambers}
    for a, b, _ in g.edges:
        degree[a] += 1
        degree[b] += 1
    assert set(degree.values()) == {2}


@pytest.mark.parametrize("name", ["A2", "A3", "B3", "G2", "bad_2_1"])
def test_chambers_match_brute_force(name):
    R = roots(name)
    assert {c.signs for c in graph(name).chambers} == brute_force_chambers(R)


@pytest.mark.parametrize("name", [e.name for e in catalog.all_entries()])
def test_chamber_count_matches_zaslavsky(name):
    R = roots(name)
    g = enumerate_chambers(R, require_simplicial=False)
    assert len(g) == zaslavsky_count(R.positive_roots)


def test_chamber_basis_examples():
    g = graph("A2")
    c = g.by_sign((1, 1, 1))
    assert chamber_basis(c) == ((1, 0), (0, 1))
    across = g.neighbour(c, 0)
    assert set(chamber_basis(across)) == {(-1, 0), (1, 1)}


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "bad_2_1"])
def test_chamber_invariants(name):
    R = roots(name)
    g = graph(name)
    assert len(g) % 2 == 0
    signs = {c.signs for c in g.chambers}
    assert {tuple(-s for s in c.signs) for c in g.chambers} == signs
    assert len(g) <= 2 ** R.n
    degree = {c.id: 0 for c in g.chambers}
    for a, b, _ in g.edges:
        degree[a] += 1
        degree[b] += 1
    assert set(degree.values()) == {R.rank}
    for c in g.chambers:
        # interior point is strictly inside every inward wall half-space
        assert all(dot(b, c.interior_point) > 0 for b in c.basis)
        # pos_cone: coordinates of every root are uniformly signed
        for x in R.positive_roots:
            co = solve_linear(c.basis, x)
            assert all(v >= 0 for v in co) or all(v <= 0 for v in co)


def test_non_simplicial_raises():
    with pytest.raises(NotSimplicial) as info:
        enumerate_chambers(roots("generic4"))
    assert len(info.value.walls) == 4
    assert len(info.value.witnesses) == 6


def test_rank_two_always_simplicial():
    for e in catalog.negative_examples():
        if e.rank == 2:
            enumerate_chambers(e.positive_roots)


def test_strictly_feasible_small_systems():
    assert strictly_feasible([(F(1), F(0)), (F(0), F(1))])
    assert not strictly_feasible([(F(1), F(0)), (F(-1), F(0))])
    assert not strictly_feasible([(F(1), F(1)), (F(-1), F(0)), (F(0), F(-1))])
    assert strictly_feasible([])


def test_graph_json():
    data = graph("A2").to_json()
    assert data["chambers"][0]["sign"] == "+++"
    assert data["chambers"][0]["basis"] == [1, 2]
    assert len(data["edges"]) == 6
