"""Exact rational linear algebra.

Vectors (covectors and vectors alike) are tuples of :class:`fractions.Fraction`,
matrices are tuples of row tuples.  Everything is immutable and hashable, so
equality is structural and values can key dictionaries directly.
"""

from fractions import Fraction

from .errors import SingularBasis

Rational = Fraction


def to_rational(x):
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def vec(xs):
    return tuple(to_rational(x) for x in xs)


def rational_to_json(q):
    q = Fraction(q)
    if q.denominator == 1:
        return q.numerator
    return f"{q.numerator}/{q.denominator}"


def vector_to_json(v):
    return [rational_to_json(x) for x in v]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def neg(v):
    return tuple(-a for a in v)


def identity(r):
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(r)) for i in range(r)
    )


def transpose(m):
    return tuple(zip(*m))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def matvec(m, v):
    return tuple(dot(row, v) for row in m)


def _row_reduce(rows, ncols):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    lead = 0
    for col in range(ncols):
        pivot = next((i for i in range(lead, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[lead], m[pivot] = m[pivot], m[lead]
        p = m[lead][col]
        m[lead] = [x / p for x in m[lead]]
        for i in range(len(m)):
            if i != lead and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(m):
            break
    return m, pivots


def rank(vectors):
    vectors = list(vectors)
    if not vectors:
        return 0
    _, pivots = _row_reduce(vectors, len(vectors[0]))
    return len(pivots)


def inverse(m):
    """Inverse of a square matrix by Gauss-Jordan elimination."""
    r = len(m)
    aug = [list(row) + list(e) for row, e in zip(m, identity(r))]
    red, pivots = _row_reduce(aug, r)
    if pivots[:r] != list(range(r)):
        raise SingularBasis("matrix is singular")
    return tuple(tuple(row[r:]) for row in red)


def determinant(m):
    m = [list(row) for row in m]
    r = len(m)
    det = Fraction(1)
    for col in range(r):
        pivot = next((i for i in range(col, r) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for i in range(col + 1, r):
            f = m[i][col] / p
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return det


def solve_linear(basis, target):
    """Coefficients ``c`` with ``sum(c[i] * basis[i]) == target``.

    >>> solve_linear([(1, 0), (1, 1)], (0, 1))
    (Fraction(-1, 1), Fraction(1, 1))
    """
    basis = [vec(b) for b in basis]
    target = vec(target)
    r = len(basis)
    if any(len(b) != len(target) for b in basis) or r != len(target):
        raise SingularBasis("basis size does not match the ambient rank")
    # columns are the basis vectors: solve B^T c = target
    aug = [[basis[j][i] for j in range(r)] + [target[i]] for i in range(r)]
    red, pivots = _row_reduce(aug, r)
    if pivots != list(range(r)):
        raise SingularBasis("basis vectors are linearly dependent")
    return tuple(row[r] for row in red)


def dual_basis(basis):
    """Vectors ``v_j`` with ``basis[i](v_j) == (i == j)``.

    These are the columns of the inverse of the matrix with rows ``basis``.
    """
    basis = tuple(vec(b) for b in basis)
    inv = inverse(basis)
    return tuple(tuple(inv[i][j] for i in range(len(basis))) for j in range(len(basis)))


def is_integer_vector(coeffs):
    return all(Fraction(c).denominator == 1 for c in coeffs)


def primitive(v):
    """Scale a nonzero rational vector to a positive multiple with coprime integer entries."""
    from math import gcd, lcm

    den = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    return tuple(Fraction(x // g) for x in ints)
