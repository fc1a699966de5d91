"""Cartan schemes, Weyl groupoids and root systems of crystallographic arrangements.

Objects of the scheme are labelled chambers: a chamber ``K`` together with an
ordered basis ``(beta_1, ..., beta_r)`` of ``B^K`` reached from the base
chamber by composing wall-crossing maps.  Two walks give the same object
exactly when they give the same labelling, i.e. the same linear map
``pi(a)`` sending the base basis to the labelled basis; objects are keyed by
the matrix of ``pi(a)``.

Index conventions: root and generator indices are 0-based in the library and
1-based in JSON output.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import exact_geometry as eg
from .arrangement import enumerate_chambers, validate_root_set
from .axioms import check_crystallographic
from .errors import IntegralityViolation


# -- integer matrices ---------------------------------------------------------


def _imatmul(a, b):
    n, m = len(a), len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(m)) for i in range(n)
    )


def _imatvec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def _iidentity(r):
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def _as_int(v):
    return tuple(int(x) for x in v)


# -- wall crossing --------------------------------------------------------------


def wall_crossing_map(graph, chamber, alpha):
    """The bijection ``B^K -> B^K'`` across the wall ``alpha^perp``.

    Returns ``(K', images, coefficients)`` where ``images[beta]`` is the image
    of each ``beta`` in ``B^K`` and ``coefficients[beta]`` the nonnegative
    integer ``c`` with ``images[beta] = c * alpha + beta`` (``alpha`` itself
    maps to ``-alpha`` and has no coefficient).
    """
    alpha = tuple(alpha)
    if alpha not in chamber.basis:
        raise ValueError(f"{alpha} is not an inward wall normal of chamber {chamber.id}")
    k = graph.wall_index(chamber, alpha)
    other = graph.neighbour(chamber, k)
    minus = eg.neg(alpha)
    targets = [g for g in other.basis if g != minus]
    images = {alpha: minus}
    coefficients = {}
    for beta in chamber.basis:
        if beta == alpha:
            continue
        found = []
        for gamma in targets:
            d = eg.sub(gamma, beta)
            # d must be a nonnegative integer multiple of alpha
            p = next(i for i, x in enumerate(alpha) if x != 0)
            c = d[p] / alpha[p]
            if eg.scale(c, alpha) == d and c >= 0 and c.denominator == 1:
                found.append((gamma, int(c)))
        if len(found) != 1:
            raise IntegralityViolation(
                f"crossing wall {k + 1} of chamber {chamber.sign}: no unique "
                f"nonnegative integer c with c*alpha + beta in the new basis for beta={eg.vector_to_json(beta)}"
            )
        images[beta], coefficients[beta] = found[0]
    if len(set(images.values())) != len(images) or set(images.values()) != set(other.basis):
        raise IntegralityViolation(f"wall crossing at chamber {chamber.sign} is not a bijection")
    return other, images, coefficients


def reflection_matrix(graph, chamber, alpha):
    """Linear extension of the wall-crossing map, acting on covector columns."""
    _, images, _ = wall_crossing_map(graph, chamber, alpha)
    src = eg.transpose(chamber.basis)
    dst = eg.transpose([images[b] for b in chamber.basis])
    return eg.matmul(dst, eg.inverse(src))


def cross_labelled(graph, chamber, labels, i):
    """Move a labelled basis across the wall of its ``i``-th label.

    Returns ``(K', new labels, row i of the Cartan matrix)``.
    """
    alpha = labels[i]
    other, images, coeffs = wall_crossing_map(graph, chamber, alpha)
    new = tuple(images[b] for b in labels)
    row = tuple(2 if j == i else -coeffs[b] for j, b in enumerate(labels))
    return other, new, row


def cartan_matrix_of_labels(graph, chamber, labels):
    return tuple(cross_labelled(graph, chamber, labels, i)[2] for i in range(len(labels)))


# -- data -------------------------------------------------------------------------


@dataclass(frozen=True)
class SchemeObject:
    id: int
    chamber: int
    labels: tuple  # phi_a(alpha_1), ..., phi_a(alpha_r) as covectors
    labeling: tuple  # matrix of pi(a) in the base basis, columns = labels
    cartan: tuple
    roots: frozenset  # R^a, integer coordinate vectors

    @property
    def positive_roots(self):
        return sorted(v for v in self.roots if all(x >= 0 for x in v))


@dataclass
class Morphism:
    source: int
    target: int
    word: tuple  # generator indices, applied left to right
    matrix: tuple

    def then(self, other):
        """Composite ``other . self``."""
        if other.source != self.target:
            raise ValueError("morphisms are not composable")
        return Morphism(
            self.source, other.target, self.word + other.word, _imatmul(other.matrix, self.matrix)
        )


@dataclass
class CartanScheme:
    rank: int
    objects: list
    reflections: list  # reflections[i][a] = rho_i(a)
    graph: object = None
    base_chamber: int = 0
    base_labels: tuple = ()

    def rho(self, i, a):
        return self.reflections[i][a]

    def cartan(self, a):
        return self.objects[a].cartan

    def to_json(self, verified=None):
        out = {
            "rank": self.rank,
            "base_chamber": self.base_chamber,
            "objects": [
                {
                    "id": o.id,
                    "chamber": o.chamber,
                    "cartan": [list(row) for row in o.cartan],
                    "roots": [list(v) for v in sorted(o.roots)],
                }
                for o in self.objects
            ],
            "reflections": {str(i + 1): list(p) for i, p in enumerate(self.reflections)},
        }
        if verified is not None:
            out["verified"] = verified
        return out


# -- construction ---------------------------------------------------------------


def default_labels(chamber, ordering=None):
    """Base basis sorted lexicographically, optionally permuted by ``ordering``."""
    labels = sorted(chamber.basis)
    if ordering is not None:
        if sorted(ordering) != list(range(len(labels))):
            raise ValueError(f"ordering {ordering} is not a permutation of 0..{len(labels) - 1}")
        labels = [labels[p] for p in ordering]
    return tuple(labels)


def _labeling_matrix(base, labels):
    cols = [eg.solve_linear(base, b) for b in labels]
    return eg.transpose(cols)


def _root_coordinates(R, labels):
    out = set()
    for x in R.positive_roots:
        c = eg.solve_linear(labels, x)
        if not eg.is_integer_vector(c):
            raise IntegralityViolation(f"root {eg.vector_to_json(x)} is not integral in {labels}")
        c = _as_int(c)
        out.add(c)
        out.add(tuple(-v for v in c))
    return frozenset(out)


def follow_word(graph, chamber, labels, word):
    """Walk the gallery given by ``word``; returns the final chamber and labels."""
    for i in word:
        chamber, labels, _ = cross_labelled(graph, chamber, labels, i)
    return chamber, labels


def build_scheme(R, chamber=0, ordering=None, graph=None):
    """Cartan scheme of a crystallographic arrangement at base chamber ``chamber``.

    Raises :class:`IntegralityViolation` if axiom (I) fails.
    """
    graph = graph if graph is not None else enumerate_chambers(R)
    report = check_crystallographic(R, graph)
    if not report.passed:
        raise IntegralityViolation(f"axiom (I) fails: {report.witnesses[0]}")
    r = R.rank
    k0 = graph.chambers[chamber]
    base = default_labels(k0, ordering)

    objects = []
    index = {}
    moves = []

    def add(ch, labels):
        key = _labeling_matrix(base, labels)
        if key not in index:
            index[key] = len(objects)
            objects.append((ch, labels, key))
            moves.append([None] * r)
            queue.append(index[key])
        return index[key]

    queue = deque()
    add(k0, base)
    cartans = {}
    while queue:
        a = queue.popleft()
        ch, labels, _ = objects[a]
        rows = []
        for i in range(r):
            other, new, row = cross_labelled(graph, ch, labels, i)
            rows.append(row)
            moves[a][i] = add(other, new)
        cartans[a] = tuple(rows)

    limit = len(graph) * _factorial(r)
    assert len(objects) <= limit, "more objects than labelled chambers"
    built = [
        SchemeObject(a, ch.id, labels, key, cartans[a], _root_coordinates(R, labels))
        for a, (ch, labels, key) in enumerate(objects)
    ]
    reflections = [tuple(moves[a][i] for a in range(len(objects))) for i in range(r)]
    return CartanScheme(r, built, reflections, graph, k0.id, base)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def cartan_matrix_at(S, word):
    """Cartan matrix at the object reached from the base object along ``word``,
    computed directly from the wall crossings of the arrangement."""
    graph = S.graph
    ch, labels = follow_word(graph, graph.chambers[S.base_chamber], S.base_labels, word)
    return cartan_matrix_of_labels(graph, ch, labels)


def object_at(S, word, start=0):
    a = start
    for i in word:
        a = S.rho(i, a)
    return a


# -- Weyl groupoid ------------------------------------------------------------------


def generator_matrix(S, a, i):
    """The morphism ``s_i^a : a -> rho_i(a)`` with ``s_i(alpha_j) = alpha_j - c_ij alpha_i``."""
    c = S.cartan(a)
    r = S.rank
    m = tuple(
        tuple((1 if k == j else 0) - (c[i][j] if k == i else 0) for j in range(r)) for k in range(r)
    )
    return Morphism(a, S.rho(i, a), (i,), m)


def morphism(S, a, word):
    """Composite of generators along ``word`` (applied left to right) starting at ``a``."""
    m = Morphism(a, a, (), _iidentity(S.rank))
    for i in word:
        m = m.then(generator_matrix(S, m.target, i))
    return m


def m_ij(S, a, i, j):
    """``|R^a ∩ (N_0 alpha_i + N_0 alpha_j)|``."""
    if i == j:
        raise ValueError("m_ij needs i != j")
    others = [k for k in range(S.rank) if k not in (i, j)]
    return sum(
        1
        for v in S.objects[a].roots
        if v[i] >= 0 and v[j] >= 0 and all(v[k] == 0 for k in others)
    )


def alternating_gallery(S, a, i, j, limit=None):
    """Walk ``i, j, i, j, ...`` from ``a`` until the object repeats.

    Returns ``(steps, composite morphism)``; ``steps`` counts single
    generator applications, so ``(rho_j rho_i)^(steps/2)`` fixes ``a``.
    """
    limit = limit or 2 * len(S.objects) + 2
    m = Morphism(a, a, (), _iidentity(S.rank))
    for step in range(1, limit + 1):
        m = m.then(generator_matrix(S, m.target, i if step % 2 else j))
        if m.target == a:
            return step, m
    return None, m


# -- verification --------------------------------------------------------------------


@dataclass
class VerificationReport:
    """Map from check name to the list of failures found (empty means pass)."""

    checks: dict = field(default_factory=dict)

    def record(self, name, failures=()):
        self.checks.setdefault(name, []).extend(failures)

    @property
    def passed(self):
        return all(not v for v in self.checks.values())

    def flags(self):
        return {k: not v for k, v in self.checks.items()}

    def to_json(self):
        return {"passed": self.passed, "checks": {k: v for k, v in self.checks.items()}}

    def merge(self, other):
        for k, v in other.checks.items():
            self.record(k, v)
        return self


def verify_scheme_axioms(S):
    """(M1), (M2) per object; (C1), (C2) per object and index."""
    rep = VerificationReport()
    m1, m2, c1, c2 = [], [], [], []
    r = S.rank
    for o in S.objects:
        c = o.cartan
        for i in range(r):
            for j in range(r):
                if i == j and c[i][j] != 2:
                    m1.append({"object": o.id, "entry": [i + 1, j + 1], "value": c[i][j]})
                elif i != j and c[i][j] > 0:
                    m1.append({"object": o.id, "entry": [i + 1, j + 1], "value": c[i][j]})
                if i != j and c[i][j] == 0 and c[j][i] != 0:
                    m2.append({"object": o.id, "entry": [i + 1, j + 1]})
        for i in range(r):
            b = S.rho(i, o.id)
            if S.rho(i, b) != o.id:
                c1.append({"object": o.id, "index": i + 1})
            if S.cartan(b)[i] != c[i]:
                c2.append({"object": o.id, "index": i + 1, "image": b})
    rep.record("M1", m1)
    rep.record("M2", m2)
    rep.record("C1", c1)
    rep.record("C2", c2)
    return rep


def real_roots(S):
    """Real roots ``{id_a s_i1 ... s_ik (alpha_j)}`` at every object, computed from the
    generator matrices alone by closing the simple roots under all morphisms."""
    r = S.rank
    simple = [tuple(int(k == j) for k in range(r)) for j in range(r)]
    found = [set(simple) for _ in S.objects]
    queue = deque((b, v) for b in range(len(S.objects)) for v in simple)
    gens = {}
    while queue:
        b, v = queue.popleft()
        for i in range(r):
            if (b, i) not in gens:
                gens[b, i] = generator_matrix(S, b, i)
            g = gens[b, i]
            w = _imatvec(g.matrix, v)
            if w not in found[g.target]:
                found[g.target].add(w)
                queue.append((g.target, w))
    return [frozenset(f) for f in found]


def verify_root_system(S):
    """(R1)-(R4) for the root sets attached to ``S``, plus two cross-checks:
    ``real_roots`` agrees with the stored sets, and every non-simple positive
    root is a sum of two positive roots."""
    rep = VerificationReport()
    r = S.rank
    r1, r2, r3, r4 = [], [], [], []
    for o in S.objects:
        for v in o.roots:
            if not (all(x >= 0 for x in v) or all(x <= 0 for x in v)):
                r1.append({"object": o.id, "root": list(v)})
            if tuple(-x for x in v) not in o.roots:
                r1.append({"object": o.id, "root": list(v), "missing_negative": True})
        for i in range(r):
            on_axis = {v for v in o.roots if all(v[k] == 0 for k in range(r) if k != i)}
            e = tuple(int(k == i) for k in range(r))
            if on_axis != {e, tuple(-x for x in e)}:
                r2.append({"object": o.id, "index": i + 1, "found": sorted(map(list, on_axis))})
            g = generator_matrix(S, o.id, i)
            image = frozenset(_imatvec(g.matrix, v) for v in o.roots)
            if image != S.objects[g.target].roots:
                r3.append({"object": o.id, "index": i + 1})
        for i in range(r):
            for j in range(r):
                if i == j:
                    continue
                m = m_ij(S, o.id, i, j)
                steps, comp = alternating_gallery(S, o.id, i, j)
                if steps != 2 * m or comp.matrix != _iidentity(r):
                    r4.append({"object": o.id, "pair": [i + 1, j + 1], "m": m, "steps": steps})
                elif object_at(S, [j, i] * m, o.id) != o.id:
                    r4.append({"object": o.id, "pair": [i + 1, j + 1], "m": m})
    rep.record("R1", r1)
    rep.record("R2", r2)
    rep.record("R3", r3)
    rep.record("R4", r4)

    closure = real_roots(S)
    rep.record(
        "real_roots",
        [{"object": o.id} for o, rr in zip(S.objects, closure) if rr != o.roots],
    )
    sums = []
    for o in S.objects:
        pos = set(o.positive_roots)
        for v in pos:
            if sum(v) == 1:
                continue
            if not any(tuple(x - y for x, y in zip(v, b)) in pos for b in pos):
                sums.append({"object": o.id, "root": list(v)})
    rep.record("root_is_sum", sums)
    return rep


def is_connected(S):
    """``(True, None)`` or ``(False, an unreachable object)``."""
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for i in range(S.rank):
            b = S.rho(i, a)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    missing = [a for a in range(len(S.objects)) if a not in seen]
    return (not missing, missing[0] if missing else None)


def is_simply_connected(S):
    """Check that every endomorphism in the Weyl groupoid is the identity.

    A BFS spanning tree from object 0 fixes a morphism ``w_a : 0 -> a`` for
    each reachable object; every closed walk is a product of the fundamental
    loops ``w_b^-1 s_i^a w_a`` of non-tree edges, so it suffices that
    ``s_i^a w_a == w_b`` on each of them.  Every object is a possible root,
    so disconnected pieces are handled one at a time.

    Returns ``(True, None)`` or ``(False, witness)``.
    """
    tree = {}
    for root in range(len(S.objects)):
        if root in tree:
            continue
        tree[root] = Morphism(root, root, (), _iidentity(S.rank))
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for i in range(S.rank):
                step = tree[a].then(generator_matrix(S, a, i))
                b = step.target
                if b not in tree:
                    tree[b] = step
                    queue.append(b)
                elif tree[b].matrix != step.matrix:
                    return False, {
                        "object": a,
                        "index": i + 1,
                        "loop": list(step.word) + ["inverse"] + list(tree[b].word),
                    }
    return True, None


def object_chamber_bijection(S):
    chambers = [o.chamber for o in S.objects]
    return len(set(chambers)) == len(chambers) == len(S.graph)


def verify_all(S):
    """Every scheme and root-system check, plus connectivity flags."""
    rep = verify_scheme_axioms(S).merge(verify_root_system(S))
    conn, w = is_connected(S)
    rep.record("connected", [] if conn else [{"unreachable": w}])
    sc, w = is_simply_connected(S)
    rep.record("simply_connected", [] if sc else [w])
    return rep


# -- equivalence and the reverse direction --------------------------------------------


def _cartan_signature(S):
    return sorted(
        tuple(sorted(c[i][j] for i in range(S.rank) for j in range(S.rank) if i != j))
        for c in (o.cartan for o in S.objects)
    )


def scheme_equivalence(S1, S2):
    """Find ``(phi0, phi1)`` making ``S1`` and ``S2`` equivalent, or ``None``.

    ``phi0[i]`` is the image of index ``i``, ``phi1[a]`` the image of object
    ``a``.  Exhaustive over index permutations and the anchor image of object
    0; the rest of ``phi1`` is forced by ``phi1(rho_i(a)) = rho'_phi0(i)(phi1(a))``.
    """
    if S1.rank != S2.rank or len(S1.objects) != len(S2.objects):
        return None
    if _cartan_signature(S1) != _cartan_signature(S2):
        return None
    r = S1.rank
    n = len(S1.objects)
    for phi0 in permutations(range(r)):
        for anchor in range(n):
            phi1 = _propagate(S1, S2, phi0, anchor)
            if phi1 is not None:
                return tuple(phi0), tuple(phi1)
    return None


def _propagate(S1, S2, phi0, anchor):
    r = S1.rank
    phi1 = {0: anchor}
    used = {anchor}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        b = phi1[a]
        ca, cb = S1.cartan(a), S2.cartan(b)
        if any(cb[phi0[i]][phi0[j]] != ca[i][j] for i in range(r) for j in range(r)):
            return None
        for i in range(r):
            a2, b2 = S1.rho(i, a), S2.rho(phi0[i], b)
            if a2 in phi1:
                if phi1[a2] != b2:
                    return None
            else:
                if b2 in used:
                    return None
                phi1[a2] = b2
                used.add(b2)
                queue.append(a2)
    if len(phi1) != len(S1.objects):
        return None
    return [phi1[a] for a in range(len(S1.objects))]


def arrangement_from_object(S, a=0):
    """``R^a_+`` as a root set in integer coordinates."""
    return validate_root_set(S.rank, S.objects[a].positive_roots)
