"""Central hyperplane arrangements given by a set of root covectors.

A chamber is identified by its sign vector over the positive roots.  Chambers
are found by a breadth-first walk across walls starting from a generic seed
point; walls are decided exactly with Fourier-Motzkin elimination.
"""

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import exact_geometry as eg
from .errors import EmptyChamber, EmptyInput, NotSimplicial, NotSpanning, ParallelRoots


@dataclass(frozen=True)
class RootSet:
    """Positive representatives ``x_1, ..., x_n`` of ``R = {±x_1, ..., ±x_n}``."""

    rank: int
    positive_roots: tuple

    @property
    def n(self):
        return len(self.positive_roots)

    def all_roots(self):
        return self.positive_roots + tuple(eg.neg(x) for x in self.positive_roots)

    def to_json(self):
        return {
            "rank": self.rank,
            "positive_roots": [eg.vector_to_json(x) for x in self.positive_roots],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        try:
            rank, roots = data["rank"], data["positive_roots"]
        except (KeyError, TypeError) as exc:
            raise EmptyInput(f"root set JSON needs 'rank' and 'positive_roots': {exc}")
        return validate_root_set(rank, roots)


def _parallel(u, v):
    # u, v nonzero; parallel iff every 2x2 minor vanishes
    r = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(r) for j in range(i + 1, r))


def validate_root_set(rank, roots):
    """Check and normalise raw input into a :class:`RootSet`.

    Raises EmptyInput, ParallelRoots or NotSpanning.
    """
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise EmptyInput(f"rank must be a positive integer, got {rank!r}")
    roots = [eg.vec(x) for x in roots]
    if not roots:
        raise EmptyInput("no roots given")
    for i, x in enumerate(roots):
        if len(x) != rank:
            raise EmptyInput(f"root {i} has {len(x)} coordinates, expected {rank}")
        if not any(x):
            raise EmptyInput(f"root {i} is zero")
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if _parallel(roots[i], roots[j]):
                raise ParallelRoots(i, j)
    if eg.rank(roots) < rank:
        raise NotSpanning(f"roots span a subspace of dimension {eg.rank(roots)} < {rank}")
    return RootSet(rank, tuple(roots))


# -- Fourier-Motzkin --------------------------------------------------------


def _primitive_int(row):
    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return None
    return tuple(x // g for x in ints)


def strictly_feasible(rows):
    """Decide whether ``{v : row . v > 0 for every row}`` is nonempty.

    Exact Fourier-Motzkin elimination on a homogeneous strict system.  Rows
    are normalised to primitive integer vectors and deduplicated after every
    step; a row that collapses to zero makes the system infeasible.
    """
    current = set()
    for row in rows:
        p = _primitive_int(row)
        if p is None:
            return False
        current.add(p)
    if not current:
        return True
    nvars = len(next(iter(current)))
    alive = list(range(nvars))
    while current and alive:
        # eliminate the column producing the fewest combinations
        def cost(c):
            pos = sum(1 for r in current if r[c] > 0)
            return pos * (sum(1 for r in current if r[c] < 0))

        col = min(alive, key=cost)
        alive.remove(col)
        pos = [r for r in current if r[col] > 0]
        negs = [r for r in current if r[col] < 0]
        nxt = {r for r in current if r[col] == 0}
        if pos and negs:
            for p in pos:
                for q in negs:
                    a, b = -q[col], p[col]
                    combo = tuple(a * x + b * y for x, y in zip(p, q))
                    g = 0
                    for x in combo:
                        g = gcd(g, x)
                    if g == 0:
                        return False
                    nxt.add(tuple(x // g for x in combo))
        current = nxt
    # with every column eliminated, any surviving row would be zero
    return not current


def _restrict(rows, normal):
    """Express rows as linear forms on the hyperplane ``normal = 0``."""
    p = next(i for i, x in enumerate(normal) if x != 0)
    out = []
    for row in rows:
        f = row[p] / normal[p]
        out.append(tuple(a - f * b for i, (a, b) in enumerate(zip(row, normal)) if i != p))
    return out


# -- chambers ---------------------------------------------------------------


def sign_string(signs):
    return "".join("+" if s > 0 else "-" for s in signs)


def signed_roots(R, signs):
    return [eg.scale(Fraction(s), x) for s, x in zip(signs, R.positive_roots)]


@dataclass(frozen=True)
class Chamber:
    """One chamber: sign vector, wall indices and inward wall normals.

    ``basis`` lists the inward-signed wall roots in increasing root-index
    order; ``basis_indices`` holds the same as 1-based signed indices.
    ``basis`` is ``None`` for a chamber that is not simplicial.
    """

    id: int
    signs: tuple
    walls: tuple
    basis: tuple = None
    interior_point: tuple = None

    @property
    def sign(self):
        return sign_string(self.signs)

    @property
    def basis_indices(self):
        return tuple(self.signs[k] * (k + 1) for k in self.walls)

    @property
    def simplicial(self):
        return self.basis is not None


def seed_point(R):
    """Moment-curve point ``(1, t, ..., t^(r-1))`` with the least positive integer ``t``
    at which no root vanishes."""
    t = 1
    while True:
        p = tuple(Fraction(t) ** k for k in range(R.rank))
        if all(eg.dot(x, p) != 0 for x in R.positive_roots):
            return p
        t += 1


def seed_chamber(R):
    p = seed_point(R)
    signs = tuple(1 if eg.dot(x, p) > 0 else -1 for x in R.positive_roots)
    return _make_chamber(R, 0, signs)


def walls_of_chamber(R, signs):
    """Indices of the roots whose hyperplanes support a facet of the chamber."""
    rows = signed_roots(R, signs)
    if not strictly_feasible(rows):
        raise EmptyChamber(f"sign vector {sign_string(signs)} is not realised by a chamber")
    walls = []
    for k, x in enumerate(R.positive_roots):
        others = rows[:k] + rows[k + 1:]
        if strictly_feasible(_restrict(others, x)):
            walls.append(k)
    return tuple(walls)


def _make_chamber(R, cid, signs):
    walls = walls_of_chamber(R, signs)
    basis = None
    interior = None
    if len(walls) == R.rank:
        candidate = tuple(eg.scale(Fraction(signs[k]), R.positive_roots[k]) for k in walls)
        if eg.rank(candidate) == R.rank:
            interior = tuple(sum(col) for col in zip(*eg.dual_basis(candidate)))
            values = [s * eg.dot(x, interior) for s, x in zip(signs, R.positive_roots)]
            assert all(v > 0 for v in values), "interior point left the chamber"
            basis = candidate
    return Chamber(cid, tuple(signs), walls, basis, interior)


def chamber_basis(chamber):
    return chamber.basis


@dataclass
class ChamberGraph:
    roots: RootSet
    chambers: list
    edges: list  # (id_a, id_b, root index) with id_a < id_b
    index: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.chambers)

    def by_sign(self, signs):
        return self.chambers[self.index[tuple(signs)]]

    def neighbour(self, chamber, k):
        """Chamber across the wall ``x_k = 0`` of ``chamber``."""
        if k not in chamber.walls:
            raise ValueError(f"root {k} is not a wall of chamber {chamber.id}")
        flipped = list(chamber.signs)
        flipped[k] = -flipped[k]
        return self.chambers[self.index[tuple(flipped)]]

    def wall_index(self, chamber, covector):
        """Root index of a wall given by its (signed) covector."""
        for k in chamber.walls:
            x = self.roots.positive_roots[k]
            if covector == x or covector == eg.neg(x):
                return k
        raise ValueError(f"{covector} is not a wall normal of chamber {chamber.id}")

    def to_json(self):
        return {
            **self.roots.to_json(),
            "chambers": [
                {
                    "id": c.id,
                    "sign": c.sign,
                    "walls": [k + 1 for k in c.walls],
                    "basis": list(c.basis_indices) if c.simplicial else None,
                }
                for c in self.chambers
            ],
            "edges": [[a, b, k + 1] for a, b, k in self.edges],
        }


def enumerate_chambers(R, require_simplicial=True):
    """All chambers of the arrangement, by wall-crossing BFS from the seed chamber.

    With ``require_simplicial`` (the default) a :class:`NotSimplicial` error is
    raised naming the first chamber found with a number of walls other than
    the rank or with dependent wall normals; ``err.witnesses`` lists all of them.
    """
    start = seed_chamber(R)
    chambers = [start]
    index = {start.signs: 0}
    edges = set()
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for k in c.walls:
            flipped = list(c.signs)
            flipped[k] = -flipped[k]
            flipped = tuple(flipped)
            if flipped not in index:
                new = _make_chamber(R, len(chambers), flipped)
                index[flipped] = new.id
                chambers.append(new)
                queue.append(new)
            other = index[flipped]
            edges.add((min(c.id, other), max(c.id, other), k))
    graph = ChamberGraph(R, chambers, sorted(edges), index)
    if require_simplicial:
        bad = [c for c in chambers if not c.simplicial]
        if bad:
            err = NotSimplicial(bad[0].sign, bad[0].walls)
            err.witnesses = [(c.sign, c.walls) for c in bad]
            raise err
    return graph
