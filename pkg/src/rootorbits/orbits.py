"""Orbits of a Coxeter element on real roots: transversals, Upsilon, Omega, kappa."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from . import _linalg as la
from .cartan import AffineFrame, CartanData, submatrix
from .errors import KappaNotFound, OrderingFailed, WindowTooSmall
from .rootspace import (
    K,
    RootVector,
    add,
    all_roots,
    height,
    is_negative,
    is_positive,
    is_real_root,
    neg,
    reflect_root,
    reflection_matrix_root,
    scale,
)
from .spectral import GammaData, twisted_element, twisted_inverse
from .weyl import CoxeterWord, prefix_roots


def _vec(v) -> List[int]:
    return [int(x) for x in v]


@dataclass(frozen=True)
class TransversalInf:
    """Representatives of the infinite orbits: ``out_set`` on the side ``phi_c > 0``."""

    out_set: Tuple[RootVector, ...]
    in_set: Tuple[RootVector, ...]

    @property
    def union(self) -> Tuple[RootVector, ...]:
        return self.out_set + self.in_set

    def to_dict(self) -> dict:
        return {"in": [_vec(v) for v in self.in_set], "out": [_vec(v) for v in self.out_set]}


def transversal_inf(cd: CartanData, c: CoxeterWord) -> TransversalInf:
    """Prefix images ``{a_1, s_1 a_2, ...}`` of the word and of its reverse.

    >>> from rootorbits.catalog import builtin_system
    >>> from rootorbits.weyl import standard_word
    >>> cd = builtin_system("D(2)", 3)
    >>> transversal_inf(cd, standard_word(cd)).in_set
    ((0, 0, 1), (0, 1, 2), (1, 1, 2))
    """
    out_set = tuple(prefix_roots(cd, c.order))
    in_set = tuple(prefix_roots(cd, tuple(reversed(c.order))))
    return TransversalInf(out_set=out_set, in_set=in_set)


def sign_change(cd: CartanData, c: CoxeterWord, beta: Sequence[int], inverse: bool = False) -> Optional[RootVector]:
    """``-c beta`` when ``c beta`` is negative (``c^{-1}`` with ``inverse``), else None."""
    img = c.apply(tuple(beta), -1 if inverse else 1)
    if is_negative(img):
        return neg(img)
    return None


@dataclass(frozen=True)
class UpsilonComponent:
    simples: Tuple[RootVector, ...]  # beta_1..beta_k in order
    beta0: RootVector
    kappa: int

    @property
    def rank(self) -> int:
        return len(self.simples)

    @property
    def partial_sums(self) -> Tuple[RootVector, ...]:
        out = []
        acc = tuple(0 for _ in self.beta0)
        for b in self.simples:
            acc = add(acc, b)
            out.append(acc)
        return tuple(out)

    @property
    def affinized(self) -> Tuple[RootVector, ...]:
        return (self.beta0,) + self.simples

    def to_dict(self) -> dict:
        return {
            "beta0": _vec(self.beta0),
            "kappa": self.kappa,
            "simples": [_vec(b) for b in self.simples],
            "type": f"A{self.rank}",
        }


@dataclass(frozen=True)
class UpsilonData:
    roots: frozenset
    canonical_simples: frozenset
    components: Tuple[UpsilonComponent, ...]

    @property
    def ordered_simples(self) -> Tuple[RootVector, ...]:
        return tuple(b for comp in self.components for b in comp.simples)

    @property
    def omega(self) -> Tuple[RootVector, ...]:
        return tuple(b for comp in self.components for b in comp.partial_sums)

    @property
    def kappa_of(self) -> Dict[RootVector, int]:
        return {b: comp.kappa for comp in self.components for b in comp.partial_sums}

    def component_of(self, beta: RootVector) -> UpsilonComponent:
        for comp in self.components:
            if beta in comp.partial_sums:
                return comp
        raise KeyError(beta)

    @property
    def diagram(self) -> str:
        return " x ".join(f"A{comp.rank}" for comp in self.components) or "empty"

    def to_dict(self) -> dict:
        return {
            "components": [comp.to_dict() for comp in self.components],
            "diagram": self.diagram,
            "omega": [_vec(b) for b in self.omega],
            "ordered_simples": [_vec(b) for b in self.ordered_simples],
            "roots": sorted(_vec(b) for b in self.roots),
        }


def finite_subsystem_roots(cd: CartanData, frame: AffineFrame) -> frozenset:
    """All roots of the finite subsystem, embedded in V."""
    fin = [i - 1 for i in frame.fin_indices]
    sub = submatrix(cd, fin)
    out = set()
    for r in all_roots(sub):
        v = [0] * cd.n
        for i, x in zip(fin, r):
            v[i] = x
        out.add(tuple(v))
    return frozenset(out)


def _restrict(m, frame: AffineFrame):
    return la.principal(m, [i - 1 for i in frame.fin_indices])


def reflection_product(cd: CartanData, roots: Sequence[RootVector]):
    m = la.identity(cd.n)
    for b in roots:
        m = la.matmul(m, reflection_matrix_root(cd, b))
    return m


def _simples_of(roots: frozenset) -> frozenset:
    pos = [r for r in roots if is_positive(r)]
    posset = set(pos)
    out = set()
    for r in pos:
        if not any(tuple(a - b for a, b in zip(r, s)) in posset for s in pos if s != r):
            out.add(r)
    return frozenset(out)


def _group(cd: CartanData, simples) -> List[List[RootVector]]:
    simples = sorted(simples)
    comps: List[List[RootVector]] = []
    left = set(simples)
    while left:
        start = min(left)
        left.discard(start)
        comp, stack = [start], [start]
        while stack:
            x = stack.pop()
            for y in sorted(left):
                if K(cd, x, y) != 0:
                    left.discard(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _order_component(cd: CartanData, w, winv, comp: List[RootVector]) -> List[RootVector]:
    members = set(comp)
    tops = [b for b in comp if is_negative(la.matvec(w, b))]
    if len(tops) != 1:
        raise OrderingFailed(f"expected one simple with negative image, found {len(tops)}")
    seq = [tops[0]]
    while len(seq) < len(comp):
        prev = tuple(la._norm(x) for x in la.matvec(winv, seq[-1]))
        if prev not in members or prev in seq:
            raise OrderingFailed("pulling back along the twisted element left the component")
        seq.append(prev)
    return list(reversed(seq))


def _support(v) -> Tuple[int, ...]:
    return tuple(i for i, x in enumerate(v) if x)


def _component_sort_key(comp: List[RootVector]):
    # presentation only: components commute, so any order is mathematically valid
    total = tuple(map(sum, zip(*comp)))
    return (max(_support(comp[0])), _support(total))


def upsilon_fin(cd: CartanData, frame: AffineFrame, c: CoxeterWord, gd: GammaData) -> UpsilonData:
    """Roots of the finite subsystem killed by ``phi_c``, with their ordered simples.

    Within a component the order is forced by the twisted element
    ``w = c_left t_theta c_right``. Components are listed by the highest
    node in the support of their first simple root, ties broken by the
    support of the component's sum.
    """
    roots = frozenset(r for r in finite_subsystem_roots(cd, frame) if gd.phi(r) == 0)
    simples = _simples_of(roots)
    w = twisted_element(cd, frame, c)
    winv = twisted_inverse(cd, frame, c)
    ordered = [_order_component(cd, w, winv, comp) for comp in _group(cd, simples)]
    ordered.sort(key=_component_sort_key)
    flat = [b for comp in ordered for b in comp]
    if _restrict(reflection_product(cd, flat), frame) != _restrict(w, frame):
        raise OrderingFailed("reflection product of the ordered simples differs from the twisted element")
    components = []
    for comp in ordered:
        beta0 = c.apply(comp[-1])
        total = beta0
        for b in comp:
            total = add(total, b)
        kap = _multiple_of(total, frame.delta)
        if kap is None or kap <= 0:
            raise OrderingFailed("affinized simples do not sum to a positive multiple of delta")
        components.append(UpsilonComponent(simples=tuple(comp), beta0=beta0, kappa=kap))
    return UpsilonData(roots=roots, canonical_simples=simples, components=tuple(components))


def _multiple_of(v: Sequence, delta: Sequence[int]) -> Optional[int]:
    """``m`` with ``v = m delta``, or None."""
    m = Fraction(v[0]) / delta[0]
    if m.denominator != 1:
        return None
    m = int(m)
    return m if tuple(m * x for x in delta) == tuple(v) else None


def omega_from_ordering(cd: CartanData, ordered: Sequence[RootVector]) -> frozenset:
    """``{b_1, t_{b_1} b_2, t_{b_1} t_{b_2} b_3, ...}`` for an ordered list."""
    out = []
    m = la.identity(cd.n)
    for b in ordered:
        out.append(tuple(la._norm(x) for x in la.matvec(m, b)))
        m = la.matmul(m, reflection_matrix_root(cd, b))
    return frozenset(out)


def admissible_orderings(cd: CartanData, frame: AffineFrame, c: CoxeterWord, ud: UpsilonData, limit: int = 4):
    """Per component, every ordering whose reflection product reproduces the twisted element.

    Components larger than ``limit`` keep their computed order. Yields full
    orderings of all simples.
    """
    w = _restrict(twisted_element(cd, frame, c), frame)
    choices = []
    for comp in ud.components:
        if comp.rank <= limit:
            choices.append(list(permutations(comp.simples)))
        else:
            choices.append([comp.simples])

    def rec(idx, acc):
        if idx == len(choices):
            yield acc
            return
        for perm in choices[idx]:
            yield from rec(idx + 1, acc + list(perm))

    for full in rec(0, []):
        if _restrict(reflection_product(cd, full), frame) == w:
            yield tuple(full)


def kappa(cd: CartanData, frame: AffineFrame, beta: Sequence[int], Kmax: int = 6) -> int:
    """Least ``k >= 1`` with ``k delta - beta`` a real root."""
    window = Kmax * height(frame.delta) + abs(height(beta))
    for k in range(1, Kmax + 1):
        v = tuple(k * d - b for d, b in zip(frame.delta, beta))
        if is_real_root(cd, v, window):
            return k
    raise KappaNotFound(f"no k <= {Kmax} makes k delta - beta a root")


def finite_transversal(ud: UpsilonData, frame: AffineFrame, m_range: Sequence[int]) -> List[RootVector]:
    """``beta + m kappa(beta) delta`` for ``beta`` in Omega and ``m`` in ``m_range``."""
    out = []
    kap = ud.kappa_of
    for m in m_range:
        for b in ud.omega:
            out.append(add(b, scale(m * kap[b], frame.delta)))
    return out


FINITE_KIND = "finite"
INFINITE_KIND = "infinite"


def _sign(vectors) -> str:
    if all(is_positive(v) for v in vectors):
        return "positive"
    if all(is_negative(v) for v in vectors):
        return "negative"
    return "mixed"


@dataclass(frozen=True)
class OrbitReport:
    seed: RootVector
    kind: str
    members: Tuple[RootVector, ...]
    sign: str
    hit: Optional[RootVector] = None
    hit_step: Optional[int] = None
    hit_set: Optional[str] = None
    window: Optional[int] = None

    @property
    def fixed(self) -> bool:
        return self.kind == FINITE_KIND and len(self.members) == 1

    def to_dict(self) -> dict:
        out = {
            "fixed": self.fixed,
            "hit": None if self.hit is None else _vec(self.hit),
            "hit_set": self.hit_set,
            "hit_step": self.hit_step,
            "kind": self.kind,
            "members": [_vec(v) for v in self.members],
            "seed": _vec(self.seed),
            "sign": self.sign,
        }
        if self.window is not None:
            out["window"] = self.window
        return out


def finite_orbit(c: CoxeterWord, seed: Sequence[int], bound: int) -> Tuple[RootVector, ...]:
    seed = tuple(seed)
    members = [seed]
    v = c.apply(seed)
    while v != seed:
        if len(members) > bound:
            raise WindowTooSmall(f"orbit of {seed} did not close within {bound} steps")
        members.append(v)
        v = c.apply(v)
    return tuple(members)


def transversal_hits(orbit, ud: UpsilonData, delta) -> List[Tuple[RootVector, RootVector]]:
    """Pairs ``(v, beta)`` with ``v`` in the orbit equal to ``beta + m kappa(beta) delta``."""
    kap = ud.kappa_of
    out = []
    for v in orbit:
        for b in ud.omega:
            m = _multiple_of(tuple(x - y for x, y in zip(v, b)), delta)
            if m is not None and m % kap[b] == 0:
                out.append((v, b))
    return out


def classify_orbit(
    cd: CartanData,
    frame: AffineFrame,
    c: CoxeterWord,
    gd: GammaData,
    seed: Sequence[int],
    M: Optional[int] = None,
    upsilon: Optional[UpsilonData] = None,
) -> OrbitReport:
    """Decide whether the orbit of ``seed`` is finite and locate its transversal element."""
    seed = tuple(seed)
    if M is None:
        M = 4 * cd.n
    if gd.phi(seed) == 0:
        members = finite_orbit(c, seed, gd.order_on_Uc)
        if _multiple_of(seed, frame.delta) is not None:
            return OrbitReport(seed=seed, kind=FINITE_KIND, members=members, sign=_sign(members))
        hits = transversal_hits(members, upsilon, frame.delta) if upsilon is not None else []
        hit = hits[0][0] if hits else None
        step = members.index(hit) if hit is not None else None
        return OrbitReport(
            seed=seed, kind=FINITE_KIND, members=members, sign=_sign(members),
            hit=hit, hit_step=step, hit_set="finite" if hit is not None else None,
        )
    tr = transversal_inf(cd, c)
    target, name = (set(tr.out_set), "out") if gd.phi(seed) > 0 else (set(tr.in_set), "in")
    window = tuple(c.apply(seed, m) for m in range(-M, M + 1))
    for k in sorted(range(-M, M + 1), key=lambda t: (abs(t), t)):
        if window[k + M] in target:
            return OrbitReport(
                seed=seed, kind=INFINITE_KIND, members=window, sign=_sign(window),
                hit=window[k + M], hit_step=k, hit_set=name, window=M,
            )
    raise WindowTooSmall(f"orbit of {seed} does not meet the transversal within |m| <= {M}")
