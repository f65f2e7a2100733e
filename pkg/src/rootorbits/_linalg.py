"""Small exact matrix helpers over Z and Q.

Matrices are tuples of row tuples. Entries are ``int`` or ``Fraction``;
nothing here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from operator import mul
from typing import Sequence, Tuple

Matrix = Tuple[Tuple, ...]
Vector = Tuple


def _norm(x):
    """Collapse integral Fractions back to ``int``."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(_norm(sum(x * y for x, y in zip(row, col))) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence) -> Vector:
    return tuple(_norm(sum(map(mul, row, v))) for row in a)


def int_matvec(a: Matrix, v: Sequence[int]) -> Tuple[int, ...]:
    """``matvec`` for integer data, skipping normalization."""
    return tuple(sum(map(mul, row, v)) for row in a)


def vecmat(v: Sequence, a: Matrix) -> Vector:
    """Row vector times matrix."""
    return tuple(_norm(sum(v[i] * a[i][j] for i in range(len(v)))) for j in range(len(a[0])))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(_norm(x - y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matpow(a: Matrix, k: int) -> Matrix:
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def dot(x: Sequence, y: Sequence):
    return _norm(sum(a * b for a, b in zip(x, y)))


def bilinear(g: Matrix, x: Sequence, y: Sequence):
    return dot(vecmat(x, g), y)


def principal(a: Matrix, idx: Sequence[int]) -> Matrix:
    return tuple(tuple(a[i][j] for j in idx) for i in idx)


def bareiss(a: Matrix):
    """Fraction-free elimination.

    Returns ``(rank, det)`` where ``det`` is only meaningful for square
    input. All intermediate quantities are exact; rational input is
    cleared to integers row by row first so every division is exact.
    """
    rows = [_clear_row(r) for r in a]
    m = len(rows)
    if m == 0:
        return 0, 1
    ncols = len(rows[0])
    sign = 1
    prev = 1
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
            sign = -sign
        p = rows[r][col]
        for i in range(r + 1, m):
            rows[i] = [(p * rows[i][j] - rows[i][col] * rows[r][j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == m:
            break
    det = 0
    if m == ncols and r == m:
        det = sign * rows[-1][-1]
    return r, det


def _clear_row(row):
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in row]


def rank(a: Matrix) -> int:
    return bareiss(a)[0]


def det(a: Matrix):
    """Determinant, exact. Rational rows are cleared then rescaled back."""
    scale = Fraction(1)
    for row in a:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        scale /= den
    return _norm(bareiss(a)[1] * scale)


def nullspace(a: Matrix) -> list:
    """Basis of the right kernel of ``a`` over Q (reduced row echelon)."""
    m = len(a)
    ncols = len(a[0]) if m else 0
    rows = [[Fraction(x) for x in r] for r in a]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -rows[i][fcol]
        basis.append(tuple(_norm(x) for x in v))
    return basis


def primitive(v: Sequence) -> Vector:
    """Scale a rational vector to a primitive integer vector, first nonzero entry positive."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive scaling")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def is_positive_definite(g: Matrix) -> bool:
    """Sylvester's criterion on leading principal minors, exact."""
    n = len(g)
    return all(det(principal(g, range(k))) > 0 for k in range(1, n + 1))
