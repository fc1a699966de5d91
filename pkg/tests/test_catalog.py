import pytest

from weylgroupoid import catalog
from weylgroupoid.arrangement import enumerate_chambers
from weylgroupoid.axioms import check_additive, check_crystallographic
from weylgroupoid.errors import NotSimplicial, UnsupportedRank

from conftest import WEYL, graph, roots, zaslavsky_count


def segments(r):
    """Positive roots of A_r: sums of consecutive simple roots."""
    return {
        tuple(int(i <= k <= j) for k in range(r)) for i in range(r) for j in range(i, r)
    }


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_type_a_matches_segments(r):
    R = catalog.weyl_roots("A", r)
    assert set(R.positive_roots) == segments(r)


def test_b3_and_c3_tables():
    b3 = {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1),
          (0, 1, 2), (1, 1, 2), (1, 2, 2)}
    c3 = {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1),
          (0, 2, 1), (1, 2, 1), (2, 2, 1)}
    assert set(catalog.weyl_roots("B", 3).positive_roots) == b3
    assert set(catalog.weyl_roots("C", 3).positive_roots) == c3


def test_g2_roots():
    R = catalog.weyl_roots("G2")
    assert R.n == 6
    assert set(R.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


@pytest.mark.parametrize("family, rank", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("G2", 3), ("E", 6)])
def test_unsupported(family, rank):
    with pytest.raises(UnsupportedRank):
        catalog.weyl_roots(family, rank)


def test_b_rank_counts():
    for r in (2, 3, 4):
        assert catalog.weyl_roots("B", r).n == r * r
        assert catalog.weyl_roots("C", r).n == r * r
    assert catalog.weyl_roots("D", 3).n == 6
    assert catalog.weyl_roots("D", 4).n == 12


@pytest.mark.parametrize("name", WEYL)
def test_weyl_entries(name):
    entry = catalog.get(name)
    R = entry.positive_roots
    assert R.n == entry.n_positive_roots
    assert len(graph(name)) == entry.n_chambers == zaslavsky_count(R.positive_roots)
    assert check_crystallographic(R, graph(name)).passed
    assert check_additive(R, graph(name)).passed


def test_frozen_chamber_counts():
    counts = {name: len(graph(name)) for name in ("A2", "A3", "B3", "G2")}
    assert counts == {"A2": 6, "A3": 24, "B3": 48, "G2": 12}


def test_negative_examples():
    entries = {e.name: e for e in catalog.negative_examples()}
    assert not check_crystallographic(entries["bad_2_1"].positive_roots).passed
    for e in entries.values():
        if e.rank == 2:
            assert len(enumerate_chambers(e.positive_roots)) == e.n_chambers
    with pytest.raises(NotSimplicial):
        enumerate_chambers(entries["generic4"].positive_roots)
    g = enumerate_chambers(entries["generic4"].positive_roots, require_simplicial=False)
    assert len(g) == entries["generic4"].n_chambers


def test_lookup():
    assert catalog.get("a2").name == "A2"
    with pytest.raises(KeyError):
        catalog.get("E8")


@pytest.mark.parametrize("entry", catalog.groupoid_entries(), ids=lambda e: e.name)
def test_groupoid_entries(entry):
    from weylgroupoid.cartan_scheme import build_scheme

    R = entry.positive_roots
    g = enumerate_chambers(R)
    assert len(g) == entry.n_chambers == zaslavsky_count(R.positive_roots)
    assert check_crystallographic(R, g).passed and check_additive(R, g).passed
    # not a Weyl group: Cartan matrices differ between objects
    assert len({o.cartan for o in build_scheme(R, graph=g).objects}) > 1
