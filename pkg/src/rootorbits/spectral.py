"""Exact eigenstructure of an affine Coxeter element.

The hyperplane spanned by the eigenvectors of ``c`` is handled as the
kernel of the functional ``phi_c = K(gamma_c, .)``, so everything stays
rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence, Tuple

from . import _linalg as la
from .cartan import AffineFrame, CartanData, affine_frame
from .errors import NotAffine, NotInitialOrFinal, NotNegative, NotProportional, OrderBoundExceeded, SolveFailed
from .rootspace import K, K_coroot, form_omega, reflect_root, reflection_matrix_root
from .weyl import CoxeterWord, factor_at_aff, final_letters, initial_letters, word_matrix


@dataclass(frozen=True)
class DualFunctional:
    """A linear functional on V.

    ``alpha_row[j]`` is its value on ``alpha_j``; ``rho`` gives the
    coordinates in the basis of fundamental weights, i.e. the values on
    the simple co-roots.
    """

    alpha_row: Tuple
    d: Tuple[int, ...]

    @property
    def rho(self) -> Tuple:
        return tuple(la._norm(Fraction(x) / di) for x, di in zip(self.alpha_row, self.d))

    def __call__(self, v: Sequence):
        return la.dot(self.alpha_row, v)

    @classmethod
    def from_rho(cls, rho: Sequence, d: Sequence[int]) -> "DualFunctional":
        return cls(alpha_row=tuple(la._norm(x * di) for x, di in zip(rho, d)), d=tuple(d))

    def to_dict(self) -> dict:
        return {"alpha": [str(x) for x in self.alpha_row], "rho": [str(x) for x in self.rho]}


@dataclass(frozen=True)
class GammaData:
    """``gamma_c`` with its functional ``phi_c`` and the order of ``c`` on ``U_c``."""

    gamma: Tuple
    phi: DualFunctional
    order_on_Uc: int

    def to_dict(self) -> dict:
        return {
            "gamma": [str(x) for x in self.gamma],
            "phi": self.phi.to_dict(),
            "order_on_Uc": self.order_on_Uc,
        }


def _require_affine(cd: CartanData) -> None:
    if not cd.is_affine:
        raise NotAffine(f"matrix is of {cd.typeclass} type")


def twisted_element(cd: CartanData, frame: AffineFrame, c: CoxeterWord):
    """Matrix of ``c_left t_theta c_right`` on V."""
    fc = factor_at_aff(c, frame.aff)
    left = word_matrix(cd, fc.left)
    right = word_matrix(cd, fc.right)
    return la.matmul(la.matmul(left, reflection_matrix_root(cd, frame.theta)), right)


def twisted_inverse(cd: CartanData, frame: AffineFrame, c: CoxeterWord):
    fc = factor_at_aff(c, frame.aff)
    left = word_matrix(cd, reversed(fc.left))
    right = word_matrix(cd, reversed(fc.right))
    return la.matmul(la.matmul(right, reflection_matrix_root(cd, frame.theta)), left)


def solve_gamma(cd: CartanData, frame: AffineFrame, c: CoxeterWord) -> Tuple:
    fin = [i - 1 for i in frame.fin_indices]
    m = twisted_element(cd, frame, c)
    mf = la.principal(m, fin)
    ker = la.nullspace(la.sub(mf, la.identity(len(fin))))
    if len(ker) != 1:
        raise SolveFailed(f"fixed space of the twisted element has dimension {len(ker)}, expected 1")
    g = [0] * cd.n
    for i, x in zip(fin, ker[0]):
        g[i] = x
    right = word_matrix(cd, factor_at_aff(c, frame.aff).right)
    norm = K_coroot(cd, frame.theta, la.matvec(right, g))
    if norm == 0:
        raise SolveFailed("normalization K(theta^vee, c_right g) vanishes")
    gamma = tuple(la._norm(Fraction(x) / norm) for x in g)
    if la.sub((la.matvec(c.action, gamma),), (gamma,))[0] != frame.delta:
        raise SolveFailed("(c - 1) gamma_c != delta")
    return gamma


def phi_of(cd: CartanData, gamma: Sequence) -> DualFunctional:
    return DualFunctional(alpha_row=la.vecmat(gamma, cd.gram), d=cd.d)


def uc_basis(phi: DualFunctional):
    """Basis of ``U_c = ker phi_c``."""
    return la.nullspace((phi.alpha_row,))


def order_on_Uc(cd: CartanData, c: CoxeterWord, phi: DualFunctional) -> int:
    """Least ``N`` with ``c^N`` the identity on ``U_c``."""
    basis = uc_basis(phi)
    bound = 2 * lcm(*range(1, 2 * cd.n + 1))
    m = c.action
    current = [tuple(b) for b in basis]
    for N in range(1, bound + 1):
        current = [la.matvec(m, v) for v in current]
        if all(u == v for u, v in zip(current, basis)):
            return N
    raise OrderBoundExceeded(f"c has no finite order on U_c below {bound}")


@lru_cache(maxsize=512)
def gamma_c(cd: CartanData, frame: AffineFrame, c: CoxeterWord) -> GammaData:
    """``gamma_c``: the generalized 1-eigenvector of ``c`` in ``V_fin``.

    >>> from rootorbits.catalog import builtin_system
    >>> from rootorbits.weyl import standard_word
    >>> cd = builtin_system("D(2)", 3)
    >>> [str(x) for x in gamma_c(cd, affine_frame(cd), standard_word(cd)).gamma]
    ['1', '1/2', '0']
    """
    _require_affine(cd)
    gamma = solve_gamma(cd, frame, c)
    phi = phi_of(cd, gamma)
    return GammaData(gamma=gamma, phi=phi, order_on_Uc=order_on_Uc(cd, c, phi))


def in_Uc(gd: GammaData, v: Sequence) -> bool:
    return gd.phi(v) == 0


def one_multiplicities(c: CoxeterWord) -> Tuple[int, int]:
    """(algebraic, geometric) multiplicity of the eigenvalue 1, via exact ranks."""
    n = c.n
    cm = la.sub(c.action, la.identity(n))
    geometric = n - la.rank(cm)
    algebraic = n - la.rank(la.matpow(cm, n))
    return algebraic, geometric


def x_c(cd: CartanData, frame: AffineFrame, c: CoxeterWord) -> DualFunctional:
    """``x_c = omega_c(delta, .)`` from its fundamental-weight expansion.

    Coefficient of ``rho_k`` is ``sum_{j after k} [delta:alpha_j] a_kj
    - sum_{i before k} [delta:alpha_i] a_ki`` in the word order of ``c``.
    """
    _require_affine(cd)
    pos = {s - 1: p for p, s in enumerate(c.order)}
    delta = frame.delta
    n = cd.n
    rho = []
    for k in range(n):
        val = 0
        for j in range(n):
            if j == k:
                continue
            if pos[j] > pos[k]:
                val += delta[j] * cd.A[k][j]
            else:
                val -= delta[j] * cd.A[k][j]
        rho.append(val)
    return DualFunctional.from_rho(rho, cd.d)


def x_c_from_omega(cd: CartanData, frame: AffineFrame, c: CoxeterWord) -> DualFunctional:
    """The same functional, evaluated directly as ``omega_c(delta, alpha_j)``."""
    return DualFunctional(alpha_row=la.vecmat(frame.delta, form_omega(cd, c.order)), d=cd.d)


def verify_xc_phic(gd: GammaData, xc: DualFunctional) -> Fraction:
    """The scalar ``lam < 0`` with ``x_c = lam phi_c``."""
    lam = None
    for x, p in zip(xc.alpha_row, gd.phi.alpha_row):
        if p == 0:
            if x != 0:
                raise NotProportional("x_c is nonzero where phi_c vanishes")
            continue
        r = Fraction(x) / Fraction(p)
        if lam is None:
            lam = r
        elif lam != r:
            raise NotProportional(f"ratios {lam} and {r} differ")
    if lam is None:
        raise NotProportional("phi_c is zero")
    if lam >= 0:
        raise NotNegative(f"x_c = {lam} phi_c is not a negative scaling")
    return lam


def gamma_transport(cd: CartanData, frame: AffineFrame, gd: GammaData, c: CoxeterWord, s: int) -> Tuple:
    """Predicted ``gamma_{scs}``: ``s gamma_c``, or ``t_theta gamma_c`` when ``s`` is affine."""
    if s not in initial_letters(c) and s not in final_letters(c):
        raise NotInitialOrFinal(f"s_{s} is neither initial nor final in {list(c.order)}")
    if s == frame.aff:
        return reflect_root(cd, frame.theta, gd.gamma)
    from .rootspace import reflect_simple

    return reflect_simple(cd, s, gd.gamma)


def spectral_summary(cd: CartanData, c: CoxeterWord, aff=None) -> dict:
    frame = affine_frame(cd, aff)
    gd = gamma_c(cd, frame, c)
    xc = x_c(cd, frame, c)
    alg, geo = one_multiplicities(c)
    return {
        "gamma": [str(x) for x in gd.gamma],
        "phi": gd.phi.to_dict(),
        "x_c": xc.to_dict(),
        "x_c_over_phi": str(verify_xc_phic(gd, xc)),
        "one_multiplicities": {"algebraic": alg, "geometric": geo},
        "order_on_Uc": gd.order_on_Uc,
    }
