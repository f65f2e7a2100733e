"""Generalized Cartan matrices: validation, symmetrizers, type, affine frame.

Conventions used throughout the package: ``a_ij = K(alpha_i^vee, alpha_j)``,
node labels (``aff``, letters of Coxeter words) are 1-based, and vectors are
plain tuples indexed from 0 in the simple-root basis.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Optional, Sequence, Tuple

from . import _linalg as la
from .errors import InvalidAffChoice, NotAffine, NotGCM, NotSymmetrizable

FINITE = "finite"
AFFINE = "affine"
INDEFINITE = "indefinite"


@dataclass(frozen=True)
class CartanData:
    """A validated symmetrizable generalized Cartan matrix.

    ``d`` holds the symmetrizers, normalized per connected component to the
    smallest positive integers with ``d_i a_ij = d_j a_ji``.
    """

    A: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]
    typeclass: str
    label: Optional[str] = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.A)

    @cached_property
    def gram(self):
        """``K(alpha_i, alpha_j) = d_i a_ij``."""
        return tuple(tuple(self.d[i] * self.A[i][j] for j in range(self.n)) for i in range(self.n))

    @cached_property
    def components(self) -> Tuple[Tuple[int, ...], ...]:
        return _components(self.A)

    @property
    def is_affine(self) -> bool:
        return self.typeclass == AFFINE

    @property
    def is_finite(self) -> bool:
        return self.typeclass == FINITE

    def neighbors(self, i: int) -> Tuple[int, ...]:
        """0-based neighbours of 0-based node ``i`` in the Dynkin graph."""
        return tuple(j for j in range(self.n) if j != i and self.A[i][j] != 0)

    def to_dict(self) -> dict:
        out = {"n": self.n, "matrix": [list(r) for r in self.A], "d": list(self.d), "typeclass": self.typeclass}
        if self.label:
            out["label"] = self.label
        return out


@dataclass(frozen=True)
class AffineFrame:
    """Affine scaffolding: ``delta``, the affine node and ``theta``.

    ``aff`` is 1-based; ``f = [delta : alpha_aff]``.
    """

    delta: Tuple[int, ...]
    aff: int
    f: int
    theta: Tuple[int, ...]

    @property
    def aff0(self) -> int:
        return self.aff - 1

    @property
    def fin_indices(self) -> Tuple[int, ...]:
        """1-based labels of the nodes of the finite subsystem."""
        return tuple(i + 1 for i in range(len(self.delta)) if i != self.aff0)

    def to_dict(self) -> dict:
        return {
            "delta": list(self.delta),
            "aff": self.aff,
            "f": self.f,
            "theta": list(self.theta),
            "fin_indices": list(self.fin_indices),
        }


def _components(A) -> Tuple[Tuple[int, ...], ...]:
    n = len(A)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            i = queue.popleft()
            comp.append(i)
            for j in range(n):
                if j != i and A[i][j] != 0 and not seen[j]:
                    seen[j] = True
                    queue.append(j)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def _check_gcm(A) -> None:
    n = len(A)
    if n == 0 or any(len(row) != n for row in A):
        raise NotGCM("matrix must be square and nonempty")
    for i in range(n):
        for j in range(n):
            x = A[i][j]
            if not isinstance(x, int) or isinstance(x, bool):
                raise NotGCM(f"entry ({i + 1},{j + 1}) is not an integer: {x!r}")
            if i == j and x != 2:
                raise NotGCM(f"diagonal entry ({i + 1},{i + 1}) is {x}, expected 2")
            if i != j and x > 0:
                raise NotGCM(f"off-diagonal entry ({i + 1},{j + 1}) is positive")
            if i != j and (x == 0) != (A[j][i] == 0):
                raise NotGCM(f"zero pattern is not symmetric at ({i + 1},{j + 1})")


def symmetrizers(A) -> Tuple[int, ...]:
    """Propagate ``d_j = d_i a_ij / a_ji`` along the Dynkin graph.

    Raises :class:`NotSymmetrizable` when a cycle gives inconsistent ratios.
    """
    n = len(A)
    d: list = [None] * n
    for comp in _components(A):
        root = comp[0]
        d[root] = Fraction(1)
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in comp:
                if j == i or A[i][j] == 0:
                    continue
                want = d[i] * A[i][j] / A[j][i]
                if d[j] is None:
                    d[j] = want
                    queue.append(j)
                elif d[j] != want:
                    raise NotSymmetrizable(f"inconsistent symmetrizer ratio on the cycle through nodes {i + 1},{j + 1}")
        den = 1
        for i in comp:
            den = den * d[i].denominator // gcd(den, d[i].denominator)
        ints = [int(d[i] * den) for i in comp]
        g = 0
        for x in ints:
            g = gcd(g, x)
        for i, x in zip(comp, ints):
            d[i] = x // g
    return tuple(d)


def classify(gram) -> str:
    n = len(gram)
    if la.is_positive_definite(gram):
        return FINITE
    if n >= 2 and la.det(gram) == 0:
        if all(la.is_positive_definite(la.principal(gram, [j for j in range(n) if j != i])) for i in range(n)):
            return AFFINE
    return INDEFINITE


def parse_cartan(matrix: Sequence[Sequence[int]], label: Optional[str] = None) -> CartanData:
    """Validate a generalized Cartan matrix and classify its type.

    >>> parse_cartan([[2, -1], [-3, 2]]).d
    (3, 1)
    """
    A = tuple(tuple(row) for row in matrix)
    _check_gcm(A)
    d = symmetrizers(A)
    gram = tuple(tuple(d[i] * A[i][j] for j in range(len(A))) for i in range(len(A)))
    return CartanData(A=A, d=d, typeclass=classify(gram), label=label)


def imaginary_root(cd: CartanData) -> Tuple[int, ...]:
    """Primitive positive generator of the kernel of ``A`` (affine only)."""
    if not cd.is_affine:
        raise NotAffine(f"matrix is of {cd.typeclass} type")
    basis = la.nullspace(cd.A)
    if len(basis) != 1:
        raise NotAffine("kernel is not one-dimensional")
    delta = la.primitive(basis[0])
    if any(x <= 0 for x in delta):
        raise NotAffine("kernel vector is not strictly positive")
    return delta


def submatrix(cd: CartanData, keep: Sequence[int]) -> CartanData:
    """Principal sub-Cartan matrix on 0-based indices ``keep``."""
    return parse_cartan(la.principal(cd.A, list(keep)))


def _aff_candidate(cd: CartanData, delta, aff0: int) -> Optional[AffineFrame]:
    from .rootspace import is_positive_real_root

    keep = [j for j in range(cd.n) if j != aff0]
    if submatrix(cd, keep).typeclass != FINITE:
        return None
    f = delta[aff0]
    theta = tuple(x - (f if i == aff0 else 0) for i, x in enumerate(delta))
    if not is_positive_real_root(cd.A, theta):
        return None
    return AffineFrame(delta=delta, aff=aff0 + 1, f=f, theta=theta)


def valid_aff_choices(cd: CartanData) -> Tuple[int, ...]:
    """1-based nodes usable as the affine node."""
    delta = imaginary_root(cd)
    return tuple(i + 1 for i in range(cd.n) if _aff_candidate(cd, delta, i) is not None)


@lru_cache(maxsize=256)
def affine_frame(cd: CartanData, aff: Optional[int] = None) -> AffineFrame:
    """Compute ``delta``, the affine node, ``f`` and ``theta``.

    A node is admissible when deleting it leaves finite type and
    ``theta = delta - f alpha_aff`` is a positive root of the finite
    subsystem. Without ``aff`` the largest admissible node is used.
    """
    delta = imaginary_root(cd)
    if aff is not None:
        if not 1 <= aff <= cd.n:
            raise InvalidAffChoice(f"aff={aff} is out of range 1..{cd.n}")
        frame = _aff_candidate(cd, delta, aff - 1)
        if frame is None:
            raise InvalidAffChoice(f"node {aff} cannot serve as the affine node")
        return frame
    for i in reversed(range(cd.n)):
        frame = _aff_candidate(cd, delta, i)
        if frame is not None:
            return frame
    raise InvalidAffChoice("no admissible affine node")
