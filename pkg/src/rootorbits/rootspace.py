"""Exact vectors in V, the forms K and omega_c, reflections, real roots.

Roots are integer tuples in the simple-root basis. The infinite root
system of an affine matrix is represented by height-bounded windows.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Iterable, Sequence, Tuple

from . import _linalg as la
from .cartan import CartanData
from .errors import BoundTooSmall, NotRealRoot, WindowExceeded

RootVector = Tuple[int, ...]
RatVector = Tuple


def height(v: Sequence) -> int:
    return sum(v)


def is_positive(v: Sequence) -> bool:
    return any(x != 0 for x in v) and all(x >= 0 for x in v)


def is_negative(v: Sequence) -> bool:
    return any(x != 0 for x in v) and all(x <= 0 for x in v)


def simple_root(n: int, i: int) -> RootVector:
    """``alpha_i`` for 1-based ``i``."""
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def neg(v: Sequence) -> Tuple:
    return tuple(-x for x in v)


def add(u: Sequence, v: Sequence) -> Tuple:
    return tuple(la._norm(a + b) for a, b in zip(u, v))


def scale(k, v: Sequence) -> Tuple:
    return tuple(la._norm(k * x) for x in v)


def form_K(cd: CartanData):
    """Gram matrix ``K(alpha_i, alpha_j) = d_i a_ij``."""
    return cd.gram


def K(cd: CartanData, x: Sequence, y: Sequence):
    return la.bilinear(cd.gram, x, y)


def K_coroot(cd: CartanData, beta: Sequence, x: Sequence):
    """``K(beta^vee, x) = 2 K(beta, x) / K(beta, beta)``."""
    kk = K(cd, beta, beta)
    if kk == 0:
        raise NotRealRoot(f"{tuple(beta)} is isotropic")
    return la._norm(Fraction(2 * K(cd, beta, x)) / kk)


def form_omega(cd: CartanData, order: Sequence[int]):
    """Gram matrix of omega_c on the alpha basis for the word ``order`` (1-based letters).

    ``omega_c(alpha_i^vee, alpha_j)`` is ``a_ij``, ``0`` or ``-a_ij`` as ``i``
    comes after, equals, or precedes ``j`` in the word.
    """
    pos = {letter - 1: p for p, letter in enumerate(order)}
    n = cd.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if pos[i] > pos[j]:
                v = cd.A[i][j]
            elif pos[i] < pos[j]:
                v = -cd.A[i][j]
            else:
                v = 0
            row.append(cd.d[i] * v)
        rows.append(tuple(row))
    return tuple(rows)


def reflection_matrix(cd: CartanData, i: int):
    """Matrix of ``s_i`` (1-based) acting on columns in the alpha basis."""
    n = cd.n
    r = i - 1
    return tuple(
        tuple((1 if k == j else 0) - (cd.A[r][j] if k == r else 0) for j in range(n)) for k in range(n)
    )


def reflect_simple(cd: CartanData, i: int, x: Sequence) -> Tuple:
    """``s_i x = x - K(alpha_i^vee, x) alpha_i``."""
    r = i - 1
    c = sum(cd.A[r][j] * x[j] for j in range(cd.n))
    out = list(x)
    out[r] = la._norm(out[r] - c)
    return tuple(out)


def reflect_root(cd: CartanData, beta: Sequence, x: Sequence) -> Tuple:
    """``t_beta x = x - K(beta^vee, x) beta`` for a real root ``beta``."""
    c = K_coroot(cd, beta, x)
    return tuple(la._norm(a - c * b) for a, b in zip(x, beta))


def reflection_matrix_root(cd: CartanData, beta: Sequence):
    n = cd.n
    cols = [reflect_root(cd, beta, simple_root(n, j + 1)) for j in range(n)]
    return la.transpose(cols)


def _lowering(A, v) -> int:
    """Some 0-based ``i`` whose reflection lowers the height of ``v``, or -1."""
    n = len(A)
    for i in range(n):
        if sum(A[i][j] * v[j] for j in range(n)) > 0:
            return i
    return -1


def is_positive_real_root(A, v: Sequence) -> bool:
    """Decide membership by descending in height through simple reflections.

    A positive real root of height > 1 always has a height-lowering simple
    reflection taking it to another positive real root, and conversely
    anything that descends to a simple root is a real root. No window needed.
    """
    v = list(v)
    n = len(A)
    while True:
        if any(x < 0 for x in v) or not any(v):
            return False
        if sum(v) == 1:
            return True
        i = _lowering(A, v)
        if i < 0:
            return False
        v[i] -= sum(A[i][j] * v[j] for j in range(n))


def _positive_roots_bfs(A, H: int) -> FrozenSet[RootVector]:
    n = len(A)
    start = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                c = sum(A[i][j] * v[j] for j in range(n))
                if c >= 0:
                    continue
                w = list(v)
                w[i] -= c
                w = tuple(w)
                if sum(w) <= H and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=128)
def positive_real_roots(cd: CartanData, H: int) -> FrozenSet[RootVector]:
    """Positive real roots of height at most ``H``."""
    if H < 1:
        raise BoundTooSmall(f"height bound must be >= 1, got {H}")
    return _positive_roots_bfs(cd.A, H)


def enumerate_real_roots(cd: CartanData, H: int) -> FrozenSet[RootVector]:
    """Real roots with ``|height| <= H``, closed under negation.

    BFS upward from the simple roots; every positive real root of height
    ``h > 1`` is reached from one of height ``< h``, so the search never
    needs to leave the window.
    """
    pos = positive_real_roots(cd, H)
    return pos | frozenset(neg(v) for v in pos)


@lru_cache(maxsize=64)
def all_roots(cd: CartanData) -> FrozenSet[RootVector]:
    """Every root of a finite-type system."""
    if not cd.is_finite:
        raise BoundTooSmall("full enumeration needs a finite-type matrix")
    pos = _positive_roots_bfs(cd.A, 10 ** 9)
    return pos | frozenset(neg(v) for v in pos)


def is_real_root(cd: CartanData, v: Sequence, H: int) -> bool:
    """Membership of ``v`` in :func:`enumerate_real_roots` ``(cd, H)``."""
    if abs(height(v)) > H:
        raise WindowExceeded(f"height {height(v)} exceeds the window {H}")
    if is_negative(v):
        v = neg(v)
    return is_positive_real_root(cd.A, v)


def is_root(cd: CartanData, v: Sequence, delta: Sequence = None) -> bool:
    """Real root, or (given ``delta``) a nonzero integer multiple of it."""
    w = neg(v) if is_negative(v) else tuple(v)
    if is_positive_real_root(cd.A, w):
        return True
    if delta is not None and is_positive(w):
        m = w[0] // delta[0]
        return m > 0 and tuple(m * x for x in delta) == w
    return False


def roots_to_json(roots: Iterable[Sequence[int]]) -> str:
    return json.dumps(sorted(list(r) for r in roots))
