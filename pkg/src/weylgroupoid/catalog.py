"""Built-in root sets: Weyl arrangements and a few engineered counterexamples.

Weyl positive roots are generated by closing the simple roots under the
simple reflections ``s_i(v) = v - (sum_j c_ij v_j) alpha_i`` of the family's
Cartan matrix, so they come out in simple-root coordinates.
"""

from dataclasses import dataclass

from .arrangement import validate_root_set
from .errors import UnsupportedRank


def cartan_matrix(family, rank):
    """Cartan matrix ``c[i][j] = 2(alpha_i, alpha_j) / (alpha_i, alpha_i)``, so that
    ``s_i(alpha_j) = alpha_j - c[i][j] alpha_i``.

    For B the last simple root is short, for C it is long; for G2 the first
    simple root is short.
    """
    family = family.upper()
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3, "G2": 2}
    if family not in minimum:
        raise UnsupportedRank(f"unknown family {family!r}")
    if rank < minimum[family] or (family == "G2" and rank != 2):
        raise UnsupportedRank(f"{family} is not defined in rank {rank}")
    if family == "G2":
        return [[2, -3], [-1, 2]]
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if family == "D":
        # chain 1-2-...-(r-2) with r-1 and r both attached to r-2
        for i in range(rank - 2):
            c[i][i + 1] = c[i + 1][i] = -1
        c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1
        return c
    for i in range(rank - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    if family == "B":
        c[rank - 1][rank - 2] = -2
    elif family == "C":
        c[rank - 2][rank - 1] = -2
    return c


def positive_roots_from_cartan(c):
    """Positive roots of the finite root system of Cartan matrix ``c``."""
    r = len(c)
    simple = [tuple(int(k == j) for k in range(r)) for j in range(r)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(r):
                pairing = sum(c[i][j] * v[j] for j in range(r))
                w = tuple(v[k] - (pairing if k == i else 0) for k in range(r))
                if all(x >= 0 for x in w) and w not in found:
                    found.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(found, key=lambda v: (sum(v), tuple(-x for x in v)))


def weyl_roots(family, rank=None):
    """Positive roots of a Weyl arrangement, e.g. ``weyl_roots("B", 3)``."""
    if family.upper() == "G2" and rank is None:
        rank = 2
    c = cartan_matrix(family, rank)
    return validate_root_set(rank, positive_roots_from_cartan(c))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    rank: int
    positive_roots: object  # RootSet
    n_positive_roots: int
    n_chambers: int = None
    crystallographic: bool = None  # None when the arrangement is not simplicial
    simplicial: bool = True


WEYL_ENTRIES = [
    # name, family, rank, |R_+|, |W|
    ("A1", "A", 1, 1, 2),
    ("A2", "A", 2, 3, 6),
    ("A3", "A", 3, 6, 24),
    ("B2", "B", 2, 4, 8),
    ("B3", "B", 3, 9, 48),
    ("C3", "C", 3, 9, 48),
    ("D4", "D", 4, 12, 192),
    ("G2", "G2", 2, 6, 12),
]


def weyl_entries():
    return [
        CatalogEntry(name, rank, weyl_roots(fam, rank), npos, nch, True)
        for name, fam, rank, npos, nch in WEYL_ENTRIES
    ]


def groupoid_entries():
    """Crystallographic arrangements that do not come from a Weyl group:
    their Cartan matrices vary from object to object."""
    return [
        CatalogEntry(
            "rank2_n5",
            2,
            validate_root_set(2, [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1)]),
            5,
            10,
            True,
        ),
        CatalogEntry(
            "rank3_n7",
            3,
            validate_root_set(
                3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1), (1, 2, 1)]
            ),
            7,
            32,
            True,
        ),
    ]


def negative_examples():
    return [
        CatalogEntry(
            "bad_2_1",
            2,
            validate_root_set(2, [(1, 0), (0, 1), (2, 1)]),
            3,
            6,
            False,
        ),
        CatalogEntry(
            "bad_3_1",
            2,
            validate_root_set(2, [(1, 0), (0, 1), (1, 1), (3, 1)]),
            4,
            8,
            False,
        ),
        CatalogEntry(
            "generic4",
            3,
            validate_root_set(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]),
            4,
            14,
            None,
            simplicial=False,
        ),
    ]


def all_entries():
    return weyl_entries() + groupoid_entries() + negative_examples()


def get(name):
    """Look up a catalog entry by name (case-insensitive)."""
    for entry in all_entries():
        if entry.name.lower() == name.lower():
            return entry
    raise KeyError(f"no catalog entry named {name!r}")
