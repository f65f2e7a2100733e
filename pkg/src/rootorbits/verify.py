"""Brute-force verification suites over height windows."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from . import _linalg as la
from .cartan import AffineFrame, CartanData, affine_frame
from .errors import NotFiniteType, RootOrbitsError
from .orbits import (
    UpsilonData,
    _multiple_of,
    admissible_orderings,
    finite_orbit,
    finite_subsystem_roots,
    finite_transversal,
    kappa,
    omega_from_ordering,
    transversal_hits,
    transversal_inf,
    upsilon_fin,
)
from .rootspace import (
    K_coroot,
    all_roots,
    height,
    is_negative,
    is_positive,
    is_root,
    enumerate_real_roots,
    scale,
)
from .spectral import gamma_c, gamma_transport, one_multiplicities, verify_xc_phic, x_c, x_c_from_omega
from .weyl import CoxeterWord, movable_letters, source_sink_move, speyer_check

MAX_COUNTEREXAMPLES = 5


@dataclass
class VerifyReport:
    system: str
    word: List[int]
    checks: Dict[str, bool] = field(default_factory=dict)
    counterexamples: Dict[str, list] = field(default_factory=dict)
    info: Dict[str, object] = field(default_factory=dict)

    def record(self, name: str, ok: bool, example=None) -> bool:
        self.checks[name] = self.checks.get(name, True) and bool(ok)
        if not ok and example is not None:
            bucket = self.counterexamples.setdefault(name, [])
            if len(bucket) < MAX_COUNTEREXAMPLES:
                bucket.append(_jsonable(example))
        return ok

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> List[str]:
        return sorted(k for k, v in self.checks.items() if not v)

    def merge(self, other: "VerifyReport") -> None:
        for k, v in other.checks.items():
            self.checks[k] = self.checks.get(k, True) and v
        for k, v in other.counterexamples.items():
            self.counterexamples.setdefault(k, []).extend(v[:MAX_COUNTEREXAMPLES])
        self.info.update(other.info)

    def to_dict(self) -> dict:
        return {
            "checks": dict(sorted(self.checks.items())),
            "counterexamples": dict(sorted(self.counterexamples.items())),
            "info": dict(sorted(self.info.items())),
            "passed": self.passed,
            "system": self.system,
            "word": list(self.word),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    if isinstance(x, int):
        return x
    return str(x)


def default_height(frame: AffineFrame) -> int:
    return 3 * height(frame.delta) + 3


def _walk(c: CoxeterWord, beta, forward: bool, stop_when_positive: bool, budget: int):
    """Iterate ``c`` (or ``c^{-1}``) from ``beta``.

    With ``stop_when_positive`` return the first positive image; otherwise
    return the last positive root before the orbit turns negative.
    """
    power = 1 if forward else -1
    v = beta
    for _ in range(budget):
        nxt = c.apply(v, power)
        if stop_when_positive and is_positive(nxt):
            return nxt
        if not stop_when_positive and is_negative(nxt):
            return v
        v = nxt
    return None


def verify_theorem_aff(
    cd: CartanData,
    c: CoxeterWord,
    M: int = 12,
    m_range: Sequence[int] = range(-3, 4),
    H: Optional[int] = None,
    aff: Optional[int] = None,
    Kmax: int = 6,
) -> VerifyReport:
    """Check the orbit theorem for one affine system and word on a height window."""
    frame = affine_frame(cd, aff)
    gd = gamma_c(cd, frame, c)
    phi = gd.phi
    n = cd.n
    N = gd.order_on_Uc
    H = default_height(frame) if H is None else H
    rep = VerifyReport(system=cd.label or "matrix", word=list(c.order))
    rep.info.update({"height": H, "M": M, "order_on_Uc": N, "m_range": [min(m_range), max(m_range)]})

    roots = enumerate_real_roots(cd, H)
    rep.info["enumerated_roots"] = len(roots)
    tr = transversal_inf(cd, c)
    out_set, in_set = set(tr.out_set), set(tr.in_set)

    # (1) the 2n infinite orbits
    rep.record("transversal_sizes", len(out_set) == n and len(in_set) == n
               and all(is_positive(t) for t in tr.union), tr.to_dict())
    rep.record("transversal_disjoint", not (out_set & in_set), sorted(out_set & in_set))
    seen = {}
    for t in tr.union:
        for m in range(-M, M + 1):
            v = c.apply(t, m)
            if v in seen and seen[v] != (t, m):
                rep.record("orbit_windows_disjoint", False, {"root": v, "from": [seen[v], (t, m)]})
            seen[v] = (t, m)
    rep.record("orbit_windows_disjoint", True)
    for t in tr.out_set:
        rep.record("separation", all(phi(c.apply(t, m)) > 0 for m in range(-M, M + 1)), t)
    for t in tr.in_set:
        rep.record("separation", all(phi(c.apply(t, m)) < 0 for m in range(-M, M + 1)), t)

    budget = 2 * N * (H // height(frame.delta) + 2) + 4 * n
    for b in roots:
        p = phi(b)
        if p == 0:
            continue
        if is_positive(b):
            hit = _walk(c, b, forward=p < 0, stop_when_positive=False, budget=budget)
        else:
            hit = _walk(c, b, forward=p > 0, stop_when_positive=True, budget=budget)
        target = out_set if p > 0 else in_set
        rep.record("transversal_exhaust", hit is not None and hit in target, b)

    # (2) finiteness iff phi = 0, (3) imaginary roots fixed
    for b in roots:
        if phi(b) == 0:
            try:
                finite_orbit(c, b, N)
                rep.record("finite_iff_in_Uc", True)
            except RootOrbitsError:
                rep.record("finite_iff_in_Uc", False, b)
        else:
            diff = tuple(x - y for x, y in zip(c.apply(b, N), b))
            m = _multiple_of(diff, frame.delta)
            rep.record("finite_iff_in_Uc", m is not None and m != 0, b)
    for m in (1, 2, 3, -1, -2, -3):
        md = scale(m, frame.delta)
        rep.record("imaginary_fixed", c.apply(md) == md, md)

    # (4)-(6) finite orbits
    ud = upsilon_fin(cd, frame, c, gd)
    rep.info["upsilon"] = ud.to_dict()
    _check_upsilon(rep, cd, frame, c, ud, Kmax)
    transversal = finite_transversal(ud, frame, m_range)
    orbit_of = {}
    for t in transversal:
        m = _multiple_of(tuple(x - y for x, y in zip(t, _omega_base(t, ud, frame))), frame.delta)
        rep.record("finite_transversal_roots", is_root(cd, t), t)
        rep.record("finite_transversal_sign", is_positive(t) == (m >= 0), t)
        orbit_of[t] = frozenset(finite_orbit(c, t, N))
    distinct = len(set(orbit_of.values())) == len(orbit_of)
    rep.record("finite_transversal_distinct", distinct)

    fin_pos = {r for r in finite_subsystem_roots(cd, frame) if is_positive(r)}
    omega = set(ud.omega)
    sizes = set()
    for b in roots:
        if phi(b) != 0:
            continue
        orbit = finite_orbit(c, b, N)
        hits = transversal_hits(orbit, ud, frame.delta)
        rep.record("finite_transversal_meets_once", len(hits) == 1, b)
        rep.record("finite_orbit_uniform_sign",
                   all(is_positive(v) for v in orbit) or all(is_negative(v) for v in orbit), orbit)
        meets_fin = any(v in fin_pos for v in orbit)
        meets_omega = any(v in omega for v in orbit)
        rep.record("finite_orbit_fin_iff_omega", meets_fin == meets_omega, b)
        if len(hits) == 1:
            comp = ud.component_of(hits[0][1])
            rep.record("finite_orbit_size", len(orbit) == comp.rank + 1, {"root": b, "size": len(orbit)})
        sizes.add(len(orbit))
    rep.record("finite_orbit_size_count", len(sizes) <= 3, sorted(sizes))
    rep.info["finite_orbit_sizes"] = sorted(sizes)
    return rep


def _omega_base(t, ud: UpsilonData, frame: AffineFrame):
    for w in ud.omega:
        if _multiple_of(tuple(x - y for x, y in zip(t, w)), frame.delta) is not None:
            return w
    raise ValueError(t)


def _is_type_A_chain(cartan) -> bool:
    k = len(cartan)
    if k == 0:
        return True
    deg = [sum(1 for j in range(k) if j != i and cartan[i][j] != 0) for i in range(k)]
    ok_entries = all(cartan[i][j] in (0, -1) for i in range(k) for j in range(k) if i != j)
    path = all(cartan[i][i + 1] == -1 for i in range(k - 1))
    return ok_entries and path and sum(deg) == 2 * (k - 1)


def _check_upsilon(rep: VerifyReport, cd, frame, c, ud: UpsilonData, Kmax: int) -> None:
    n = cd.n
    rep.record("upsilon_rank", len(ud.ordered_simples) == max(n - 2, 0), len(ud.ordered_simples))
    rep.record("upsilon_simples", set(ud.ordered_simples) == set(ud.canonical_simples))
    for comp in ud.components:
        cart = [[K_coroot(cd, a, b) for b in comp.simples] for a in comp.simples]
        rep.record("upsilon_type_A", _is_type_A_chain(cart), comp.to_dict())
        total = comp.beta0
        for b in comp.simples:
            total = tuple(x + y for x, y in zip(total, b))
        rep.record("affinized_sum", total == scale(comp.kappa, frame.delta), comp.to_dict())
        for b in comp.partial_sums:
            rep.record("kappa_constant", kappa(cd, frame, b, Kmax) == comp.kappa, b)
        aff = comp.affinized
        images = [c.apply(b) for b in aff]
        cyclic = sorted(images) == sorted(aff) and _single_cycle(aff, images)
        adjacent = all(K_coroot(cd, b, img) != 0 for b, img in zip(aff, images)) if comp.rank >= 1 else True
        rep.record("component_rotation", cyclic and adjacent, comp.to_dict())
    reference = frozenset(ud.omega)
    for ordering in admissible_orderings(cd, frame, c, ud):
        rep.record("omega_order_independent", omega_from_ordering(cd, ordering) == reference, ordering)
    rep.record("omega_order_independent", True)


def _single_cycle(nodes, images) -> bool:
    perm = {a: b for a, b in zip(nodes, images)}
    if not nodes:
        return True
    start = nodes[0]
    v, steps = perm[start], 1
    while v != start:
        v = perm[v]
        steps += 1
        if steps > len(nodes):
            return False
    return steps == len(nodes)


def verify_theorem_fin(cd: CartanData, c: CoxeterWord) -> VerifyReport:
    """Orbit decomposition of a finite root system under a Coxeter element."""
    if not cd.is_finite:
        raise NotFiniteType(f"matrix is of {cd.typeclass} type")
    rep = VerifyReport(system=cd.label or "matrix", word=list(c.order))
    roots = set(all_roots(cd))
    orbits = []
    left = set(roots)
    while left:
        b = min(left)
        orbit = finite_orbit(c, b, len(roots))
        orbits.append(frozenset(orbit))
        left -= set(orbit)
    n = cd.n
    h = len(roots) // n
    rep.info.update({"roots": len(roots), "orbits": len(orbits), "coxeter_number": h})
    rep.record("orbit_count", len(orbits) == n, len(orbits))
    rep.record("orbit_size", len(roots) % n == 0 and all(len(o) == h for o in orbits), sorted(len(o) for o in orbits))
    rep.record("coxeter_number", la.matpow(c.action, h) == la.identity(n)
               and all(la.matpow(c.action, k) != la.identity(n) for k in range(1, h)), h)
    tr = transversal_inf(cd, c)
    for name, side in (("out_transversal", tr.out_set), ("in_transversal", tr.in_set)):
        ok = all(sum(1 for t in side if t in o) == 1 for o in orbits) and len(set(side)) == n
        rep.record(name, ok, list(side))
    return rep


_LABEL = re.compile(r"^(?P<fam>[A-G](?:\([123]\)(?:even|odd)?)?) n=(?P<n>\d+)(?: k=(?P<k>\d+))?$")


def catalog_consistency(cd: CartanData) -> Optional[bool]:
    """Whether a labelled matrix equals the catalog entry of that label (None when unlabelled)."""
    from .catalog import builtin_system

    if not cd.label:
        return None
    m = _LABEL.match(cd.label)
    if not m:
        return False
    k = int(m.group("k")) if m.group("k") else None
    try:
        ref = builtin_system(m.group("fam"), int(m.group("n")), k)
    except RootOrbitsError:
        return False
    return ref.A == cd.A


def verify_spectral(cd: CartanData, c: CoxeterWord, aff: Optional[int] = None) -> VerifyReport:
    frame = affine_frame(cd, aff)
    gd = gamma_c(cd, frame, c)
    rep = VerifyReport(system=cd.label or "matrix", word=list(c.order))
    cg = la.matvec(c.action, gd.gamma)
    rep.record("gamma_eigen", tuple(la._norm(a - b) for a, b in zip(cg, gd.gamma)) == frame.delta, gd.to_dict())
    rep.record("gamma_in_fin", gd.gamma[frame.aff0] == 0, gd.to_dict())
    alg, geo = one_multiplicities(c)
    rep.record("one_multiplicities", (alg, geo) == (2, 1), [alg, geo])
    xc = x_c(cd, frame, c)
    rep.record("x_c_formula", xc == x_c_from_omega(cd, frame, c), xc.to_dict())
    try:
        lam = verify_xc_phic(gd, xc)
        rep.record("x_c_negative_multiple", True)
        rep.info["x_c_over_phi"] = str(lam)
    except RootOrbitsError as exc:
        rep.record("x_c_negative_multiple", False, str(exc))
    except RuntimeError as exc:
        rep.record("x_c_negative_multiple", False, str(exc))
    for s in movable_letters(c):
        moved = source_sink_move(c, s)
        predicted = gamma_transport(cd, frame, gd, c, s)
        fresh = gamma_c(cd, frame, moved).gamma
        rep.record("gamma_transport", predicted == fresh, {"s": s, "predicted": predicted, "fresh": fresh})
    return rep


def verify_system(
    cd: CartanData,
    c: CoxeterWord,
    M: int = 12,
    m_range: Sequence[int] = range(-3, 4),
    H: Optional[int] = None,
    aff: Optional[int] = None,
    Kmax: int = 6,
    speyer_k: int = 10,
) -> VerifyReport:
    """Every applicable suite for one system and word, merged into one report."""
    rep = VerifyReport(system=cd.label or "matrix", word=list(c.order))
    rep.info["typeclass"] = cd.typeclass
    consistent = catalog_consistency(cd)
    if consistent is not None:
        rep.record("catalog_label_matches", consistent, cd.label)
    if cd.is_finite:
        rep.merge(verify_theorem_fin(cd, c))
        return rep
    rep.record("speyer_reduced", speyer_check(cd, c, speyer_k), speyer_k)
    if not cd.is_affine:
        return rep
    rep.merge(verify_spectral(cd, c, aff))
    rep.merge(verify_theorem_aff(cd, c, M=M, m_range=m_range, H=H, aff=aff, Kmax=Kmax))
    return rep
