"""Built-in Cartan matrices.

Affine types use the node numbering of the standard table of finite
orbits: the affine node is always the last one. Twisted types follow
Kac's tables with Kac's ``alpha_0`` moved to the last position, so the
default affine node is again ``n``. Finite types use Bourbaki numbering.

Family labels take the rank ``n`` (number of nodes) separately::

    A B C D E F G                      finite
    A(1) B(1) C(1) D(1) E(1) F(1) G(1) untwisted affine
    A(2)even  -> A_{2n-2}^(2)          A(2)odd -> A_{2n-3}^(2)
    D(2) -> D_n^(2)   E(2) -> E_6^(2)   D(3) -> D_4^(3)

Kac-style names such as ``"E6(1)"``, ``"A5(2)"`` or ``"B3"`` are
accepted by :func:`from_name`.
"""
from __future__ import annotations

import re
from typing import Dict, Iterable, List, Optional, Tuple

from .cartan import CartanData, parse_cartan
from .errors import RankOutOfRange, UnknownLabel

Bond = Tuple[int, int, int, int]  # (i, j, a_ij, a_ji), 1-based nodes


def _matrix(n: int, bonds: Iterable[Bond]) -> List[List[int]]:
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in bonds:
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji
    return A


def _chain(nodes: List[int]) -> List[Bond]:
    return [(a, b, -1, -1) for a, b in zip(nodes, nodes[1:])]


# -- finite types (Bourbaki) -------------------------------------------------

def _fin_A(n):
    return _matrix(n, _chain(list(range(1, n + 1))))


def _fin_B(n):
    return _matrix(n, _chain(list(range(1, n))) + [(n - 1, n, -1, -2)])


def _fin_C(n):
    return _matrix(n, _chain(list(range(1, n))) + [(n - 1, n, -2, -1)])


def _fin_D(n):
    return _matrix(n, _chain(list(range(1, n - 1))) + [(n - 2, n - 1, -1, -1), (n - 2, n, -1, -1)])


def _fin_E(n):
    return _matrix(n, [(1, 3, -1, -1), (2, 4, -1, -1)] + _chain(list(range(3, n + 1))))


def _fin_F(n):
    return _matrix(4, [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)])


def _fin_G(n):
    return _matrix(2, [(1, 2, -3, -1)])


# -- untwisted affine, numbered as in the table of finite orbits -------------

def _aff_A(n, k=None):
    if n == 2:
        return _matrix(2, [(1, 2, -2, -2)])
    if k is None:
        k = n - 1
    # k = 1 would rebuild the k = n - 1 matrix, so its class is not well defined
    if not 2 <= k <= n - 1:
        raise RankOutOfRange(f"A(1) class parameter k must lie in 2..{n - 1}")
    cycle = list(range(1, k + 1)) + [n] + list(range(n - 1, k, -1))
    return _matrix(n, _chain(cycle) + [(cycle[-1], cycle[0], -1, -1)])


def _aff_B(n):
    # 1 (short) => 2 - ... - (n-2) < (n-1), n
    bonds = [(1, 2, -2, -1)] + _chain(list(range(2, n - 1)))
    bonds += [(n - 2, n - 1, -1, -1), (n - 2, n, -1, -1)]
    return _matrix(n, bonds)


def _aff_C(n):
    # 1 (long) => 2 - ... - (n-1) <= n (long)
    return _matrix(n, [(1, 2, -1, -2)] + _chain(list(range(2, n))) + [(n - 1, n, -2, -1)])


def _aff_D(n):
    bonds = [(1, 3, -1, -1), (2, 3, -1, -1)] + _chain(list(range(3, n - 1)))
    bonds += [(n - 2, n - 1, -1, -1), (n - 2, n, -1, -1)]
    return _matrix(n, bonds)


def _aff_E(n):
    if n == 7:
        bonds = _chain([3, 4, 5, 6, 7]) + _chain([5, 2, 1])
    elif n == 8:
        bonds = _chain([2, 3, 4, 5, 6, 7, 8]) + [(5, 1, -1, -1)]
    else:
        bonds = _chain([2, 3, 4, 5, 6, 7, 8, 9]) + [(4, 1, -1, -1)]
    return _matrix(n, bonds)


def _aff_F(n):
    # 1 - 2 (short) <= 3 (long) - 4 - 5
    return _matrix(5, [(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1), (4, 5, -1, -1)])


def _aff_G(n):
    return _matrix(3, [(1, 2, -3, -1), (2, 3, -1, -1)])


# -- twisted affine (Kac alpha_0 moved to the end) --------------------------

def _tw_A_even(n):
    # A_{2n-2}^(2); Kac alpha_1..alpha_{n-1} then alpha_0 (mark 2)
    if n == 2:
        return _matrix(2, [(1, 2, -1, -4)])
    l = n - 1
    bonds = [(n, 1, -2, -1)] + _chain(list(range(1, l))) + [(l - 1, l, -2, -1)]
    return _matrix(n, bonds)


def _tw_A_odd(n):
    # A_{2n-3}^(2); Kac alpha_1..alpha_l then alpha_0, both alpha_0, alpha_1 on alpha_2
    l = n - 1
    bonds = [(n, 2, -1, -1)] + _chain(list(range(1, l))) + [(l - 1, l, -2, -1)]
    return _matrix(n, bonds)


def _tw_D(n):
    # D_n^(2): short end => long chain <= short end
    bonds = [(1, 2, -2, -1)] + _chain(list(range(2, n))) + [(n - 1, n, -1, -2)]
    return _matrix(n, bonds)


def _tw_E(n):
    # E_6^(2): Kac 1 - 2 <= 3 - 4 with alpha_0 on alpha_1
    return _matrix(5, [(5, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)])


def _tw_D3(n):
    # D_4^(3): Kac alpha_1 (short) <= alpha_2, alpha_0 on alpha_1
    return _matrix(3, [(1, 2, -3, -1), (1, 3, -1, -1)])


# label -> (builder, rank predicate, description of allowed ranks)
_FAMILIES: Dict[str, tuple] = {
    "A": (_fin_A, lambda n: n >= 1, "n >= 1"),
    "B": (_fin_B, lambda n: n >= 2, "n >= 2"),
    "C": (_fin_C, lambda n: n >= 2, "n >= 2"),
    "D": (_fin_D, lambda n: n >= 4, "n >= 4"),
    "E": (_fin_E, lambda n: n in (6, 7, 8), "n in {6, 7, 8}"),
    "F": (_fin_F, lambda n: n == 4, "n = 4"),
    "G": (_fin_G, lambda n: n == 2, "n = 2"),
    "A(1)": (_aff_A, lambda n: n >= 2, "n >= 2"),
    "B(1)": (_aff_B, lambda n: n >= 4, "n >= 4"),
    "C(1)": (_aff_C, lambda n: n >= 3, "n >= 3"),
    "D(1)": (_aff_D, lambda n: n >= 5, "n >= 5"),
    "E(1)": (_aff_E, lambda n: n in (7, 8, 9), "n in {7, 8, 9}"),
    "F(1)": (_aff_F, lambda n: n == 5, "n = 5"),
    "G(1)": (_aff_G, lambda n: n == 3, "n = 3"),
    "A(2)even": (_tw_A_even, lambda n: n >= 2, "n >= 2"),
    "A(2)odd": (_tw_A_odd, lambda n: n >= 4, "n >= 4"),
    "D(2)": (_tw_D, lambda n: n >= 3, "n >= 3"),
    "E(2)": (_tw_E, lambda n: n == 5, "n = 5"),
    "D(3)": (_tw_D3, lambda n: n == 3, "n = 3"),
}

FINITE_LABELS = ("A", "B", "C", "D", "E", "F", "G")
AFF1_LABELS = ("A(1)", "B(1)", "C(1)", "D(1)", "E(1)", "F(1)", "G(1)")
TWISTED_LABELS = ("A(2)even", "A(2)odd", "D(2)", "E(2)", "D(3)")

# smallest rank for which each affine family is defined
MIN_RANK = {
    "A(1)": 2, "B(1)": 4, "C(1)": 3, "D(1)": 5, "E(1)": 7, "F(1)": 5, "G(1)": 3,
    "A(2)even": 2, "A(2)odd": 4, "D(2)": 3, "E(2)": 5, "D(3)": 3,
}

_ALIASES = {
    "A2EVEN": "A(2)even", "A2E": "A(2)even", "A(2)EVEN": "A(2)even",
    "A2ODD": "A(2)odd", "A2O": "A(2)odd", "A(2)ODD": "A(2)odd",
}


def normalize_label(label: str) -> str:
    raw = label.strip()
    key = raw.upper().replace(" ", "")
    if key in _ALIASES:
        return _ALIASES[key]
    m = re.fullmatch(r"([A-G])(?:\(?([123])\)?)?", key)
    if not m:
        raise UnknownLabel(f"unknown family label {label!r}")
    letter, tier = m.groups()
    out = letter if tier is None else f"{letter}({tier})"
    if out == "A(2)":
        raise UnknownLabel("A(2) is ambiguous: use A(2)even or A(2)odd")
    if out not in _FAMILIES:
        raise UnknownLabel(f"unknown family label {label!r}")
    return out


def builtin_system(label: str, n: int, k: Optional[int] = None) -> CartanData:
    """Catalog matrix for family ``label`` at rank ``n``.

    ``k`` selects the A(1) cycle labelling of class ``k`` (default ``n - 1``,
    the plain cycle ``1 - 2 - ... - n - 1``).
    """
    fam = normalize_label(label)
    build, ok, allowed = _FAMILIES[fam]
    if not ok(n):
        raise RankOutOfRange(f"{fam} requires {allowed}, got n={n}")
    if k is not None and fam != "A(1)":
        raise RankOutOfRange("the class parameter k only applies to A(1)")
    A = build(n, k) if fam == "A(1)" else build(n)
    name = f"{fam} n={n}" + (f" k={k}" if k is not None and k != n - 1 else "")
    return parse_cartan(A, label=name)


def from_name(name: str) -> CartanData:
    """Build from a Kac-style type name, e.g. ``"E6(1)"``, ``"A5(2)"``, ``"G2"``."""
    key = name.strip().replace("_", "").replace("^", "").replace(" ", "")
    m = re.fullmatch(r"([A-Ga-g])(\d+)(?:\(([123])\))?", key)
    if not m:
        raise UnknownLabel(f"cannot parse type name {name!r}")
    letter, sub, tier = m.group(1).upper(), int(m.group(2)), m.group(3)
    if tier is None:
        return builtin_system(letter, sub)
    tier = int(tier)
    if tier == 1:
        return builtin_system(f"{letter}(1)", sub + 1)
    if letter == "A" and tier == 2:
        if sub % 2 == 0:
            return builtin_system("A(2)even", sub // 2 + 1)
        if sub == 3:
            return builtin_system("D(2)", 3)
        return builtin_system("A(2)odd", (sub + 3) // 2)
    if letter == "D" and tier == 2:
        return builtin_system("D(2)", sub)
    if letter == "E" and tier == 2 and sub == 6:
        return builtin_system("E(2)", 5)
    if letter == "D" and tier == 3 and sub == 4:
        return builtin_system("D(3)", 3)
    raise UnknownLabel(f"no catalog entry for {name!r}")


def catalog_entries(max_extra: int = 0) -> List[CartanData]:
    """Every affine family at its minimal rank (plus ``max_extra`` larger ranks where open-ended)."""
    out = []
    for fam in AFF1_LABELS + TWISTED_LABELS:
        n0 = MIN_RANK[fam]
        _, ok, _ = _FAMILIES[fam]
        for n in range(n0, n0 + max_extra + 1):
            if ok(n):
                out.append(builtin_system(fam, n))
    return out


def finite_entries() -> List[CartanData]:
    names = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"]
    return [from_name(x) for x in names]
