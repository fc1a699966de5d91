"""The crystallographic axiom (I), the additive axiom (A) and equivalence of arrangements."""

from dataclasses import dataclass, field
from itertools import permutations

from . import exact_geometry as eg
from .arrangement import enumerate_chambers
from .errors import PosConeViolation


@dataclass
class AxiomReport:
    """Outcome of checking one axiom over every chamber.

    Each witness is a dict carrying the chamber id and sign string, so a
    failure can be reproduced from the report alone.
    """

    axiom: str
    witnesses: list = field(default_factory=list)
    chambers_checked: int = 0

    @property
    def passed(self):
        return not self.witnesses

    def to_json(self):
        return {
            "axiom": self.axiom,
            "passed": self.passed,
            "chambers_checked": self.chambers_checked,
            "witnesses": self.witnesses,
        }


def root_coordinates(chamber, R):
    """Coordinates of every positive-root representative in the basis of ``chamber``."""
    return [eg.solve_linear(chamber.basis, x) for x in R.positive_roots]


def positive_system(R, chamber):
    """``R^K_+``: each root signed so its chamber-basis coordinates are all nonnegative."""
    out = []
    for k, x in enumerate(R.positive_roots):
        c = eg.solve_linear(chamber.basis, x)
        if all(v >= 0 for v in c):
            out.append(x)
        elif all(v <= 0 for v in c):
            out.append(eg.neg(x))
        else:
            raise PosConeViolation(
                f"root {k + 1} has mixed-sign coordinates {eg.vector_to_json(c)} "
                f"in chamber {chamber.sign}"
            )
    return out


def _graph(R, graph):
    return graph if graph is not None else enumerate_chambers(R)


def check_crystallographic(R, graph=None):
    """Axiom (I): every root is an integral combination of every chamber basis."""
    graph = _graph(R, graph)
    report = AxiomReport("I", chambers_checked=len(graph))
    for chamber in graph.chambers:
        for k, x in enumerate(R.positive_roots):
            c = eg.solve_linear(chamber.basis, x)
            if not eg.is_integer_vector(c):
                report.witnesses.append(
                    {
                        "chamber": chamber.id,
                        "sign": chamber.sign,
                        "basis": list(chamber.basis_indices),
                        "root": k + 1,
                        "coefficients": eg.vector_to_json(c),
                    }
                )
    return report


def check_additive(R, graph=None):
    """Axiom (A): each non-simple positive root is a sum of two positive roots."""
    graph = _graph(R, graph)
    report = AxiomReport("A", chambers_checked=len(graph))
    for chamber in graph.chambers:
        pos = positive_system(R, chamber)
        posset = set(pos)
        simple = set(chamber.basis)
        for alpha in pos:
            if alpha in simple:
                continue
            # alpha = beta + gamma with gamma = alpha - beta
            if not any(eg.sub(alpha, beta) in posset for beta in pos):
                report.witnesses.append(
                    {
                        "chamber": chamber.id,
                        "sign": chamber.sign,
                        "basis": list(chamber.basis_indices),
                        "root": eg.vector_to_json(alpha),
                        "decomposition": None,
                    }
                )
    return report


def _positive_coordinates(R, chamber):
    return frozenset(eg.solve_linear(chamber.basis, x) for x in positive_system(R, chamber))


def _invariant(coords):
    # unchanged by reordering the basis
    return sorted(tuple(sorted(c)) for c in coords)


def arrangement_equivalence(R1, R2, graph1=None, graph2=None):
    """Find ``psi`` in Aut(V*) with ``psi(R1) = R2``, or return ``None``.

    Any such ``psi`` sends a chamber basis of ``R1`` to some chamber basis of
    ``R2``, so it suffices to fix one basis of ``R1`` and try every ordered
    basis of ``R2``.  The result is the matrix of ``psi`` acting on coordinate
    columns of covectors.
    """
    if R1.rank != R2.rank or R1.n != R2.n:
        return None
    g1, g2 = _graph(R1, graph1), _graph(R2, graph2)
    if len(g1) != len(g2):
        return None
    anchor = g1.chambers[0]
    target = _positive_coordinates(R1, anchor)
    target_inv = _invariant(target)
    for chamber in g2.chambers:
        coords = _positive_coordinates(R2, chamber)
        if _invariant(coords) != target_inv:
            continue
        for perm in permutations(range(R1.rank)):
            # R2 coordinates in the basis reordered by perm
            if frozenset(tuple(c[p] for p in perm) for c in coords) == target:
                ordered = [chamber.basis[p] for p in perm]
                # psi maps anchor.basis[i] to ordered[i]
                b1 = eg.transpose(anchor.basis)
                b2 = eg.transpose(ordered)
                return eg.matmul(b2, eg.inverse(b1))
    return None


def apply_map(psi, R):
    """Image of the positive roots of ``R`` under ``psi``."""
    return [eg.matvec(psi, x) for x in R.positive_roots]


def same_root_set(xs, R):
    """True when the covectors ``xs`` and ``R`` agree as sets of ``±`` pairs."""
    full = set(R.all_roots())
    return len(xs) == R.n and all(x in full for x in xs) and len(
        {frozenset((x, eg.neg(x))) for x in xs}
    ) == R.n
