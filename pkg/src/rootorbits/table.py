"""Golden table of finite orbits for the untwisted affine types, and its regeneration.

Each golden row lists the ordered simple roots of ``Upsilon_c^fin`` for the
word ``c = s_1 ... s_n``, grouped by component, as 1-based coefficient maps
``{node: coefficient}``. The classical families are stored as formulas in
``n`` (and ``k`` for the cycle).
"""
from __future__ import annotations

import copy
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .catalog import builtin_system
from .cartan import affine_frame
from .orbits import upsilon_fin
from .spectral import gamma_c
from .weyl import standard_word

Root = Dict[int, int]


def _span(a: int, b: int) -> Root:
    return {i: 1 for i in range(a, b + 1)}


def _plus(*parts: Root) -> Root:
    out: Root = {}
    for p in parts:
        for k, v in p.items():
            out[k] = out.get(k, 0) + v
    return out


def _alpha(*idx: int) -> Root:
    return _plus(*({i: 1} for i in idx))


def _row_A(n: int, k: int) -> List[List[Root]]:
    return [[_alpha(j + 1) for j in range(1, k)], [_alpha(j + 1) for j in range(k, n - 1)]]


def _row_B(n: int) -> List[List[Root]]:
    return [[_alpha(j + 1) for j in range(1, n - 2)], [_span(1, n - 1)]]


def _row_C(n: int) -> List[List[Root]]:
    return [[_alpha(j + 1) for j in range(1, n - 1)]]


def _row_D(n: int) -> List[List[Root]]:
    return [
        [_alpha(j + 2) for j in range(1, n - 3)],
        [_plus(_alpha(1), _span(3, n - 1))],
        [_plus(_alpha(2), _span(3, n - 1))],
    ]


_EXCEPTIONAL = {
    ("E(1)", 7): [
        [_alpha(4, 5), _alpha(1, 2, 5, 6)],
        [_alpha(2, 5), _alpha(3, 4, 5, 6)],
        [_alpha(2, 4, 5, 6)],
    ],
    ("E(1)", 8): [
        [_alpha(4, 5), _alpha(1, 5, 6), _span(2, 7)],
        [_span(3, 6), _plus(_alpha(1), _span(4, 7))],
        [_plus(_alpha(1, 5), _span(3, 7))],
    ],
    ("E(1)", 9): [
        [_alpha(3, 4, 5), _alpha(1, 4, 5, 6), _span(2, 7), _plus(_alpha(1), _span(3, 8))],
        [_plus(_alpha(1, 4), _span(3, 7)), _plus(_alpha(4, 5), _span(1, 8))],
        [_plus(_alpha(4), _span(3, 6), _span(1, 8))],
    ],
    ("F(1)", 5): [[_alpha(2, 3), _span(1, 4)], [_alpha(2, 2, 3, 4)]],
    ("G(1)", 3): [[_alpha(1, 2)]],
}

# the ranks regenerated by default
DEFAULT_ROWS: Tuple[Tuple[str, int, Optional[int]], ...] = (
    ("A(1)", 4, 2),
    ("A(1)", 5, 2),
    ("B(1)", 5, None),
    ("C(1)", 4, None),
    ("D(1)", 5, None),
    ("E(1)", 7, None),
    ("E(1)", 8, None),
    ("E(1)", 9, None),
    ("F(1)", 5, None),
    ("G(1)", 3, None),
)


def golden_row(family: str, n: int, k: Optional[int] = None) -> List[List[Root]]:
    if family == "A(1)":
        comps = _row_A(n, n - 1 if k is None else k)
    elif family == "B(1)":
        comps = _row_B(n)
    elif family == "C(1)":
        comps = _row_C(n)
    elif family == "D(1)":
        comps = _row_D(n)
    else:
        comps = copy.deepcopy(_EXCEPTIONAL[(family, n)])
    return [c for c in comps if c]


def golden_table(rows=DEFAULT_ROWS) -> Dict[Tuple[str, int, Optional[int]], dict]:
    out = {}
    for fam, n, k in rows:
        comps = golden_row(fam, n, k)
        out[(fam, n, k)] = {
            "components": comps,
            "diagram": " x ".join(f"A{len(c)}" for c in comps) or "empty",
            "kappa": [1] * len(comps),
        }
    return out


def _to_root(n: int, r: Root) -> Tuple[int, ...]:
    return tuple(r.get(i + 1, 0) for i in range(n))


def format_root(v) -> str:
    terms = []
    for i, x in enumerate(v):
        if x == 0:
            continue
        terms.append(f"a{i + 1}" if x == 1 else f"{x}a{i + 1}")
    return " + ".join(terms) or "0"


@dataclass
class TableRow:
    key: Tuple[str, int, Optional[int]]
    components: List[List[Tuple[int, ...]]]
    diagram: str
    kappa: List[int]

    @property
    def name(self) -> str:
        fam, n, k = self.key
        return f"{fam} n={n}" + (f" k={k}" if k is not None else "")

    def to_dict(self) -> dict:
        return {
            "components": [[list(b) for b in c] for c in self.components],
            "diagram": self.diagram,
            "kappa": self.kappa,
            "ordered_simples": [format_root(b) for c in self.components for b in c],
            "system": self.name,
        }


def regenerate_row(family: str, n: int, k: Optional[int] = None) -> TableRow:
    cd = builtin_system(family, n, k)
    frame = affine_frame(cd)
    c = standard_word(cd)
    ud = upsilon_fin(cd, frame, c, gamma_c(cd, frame, c))
    return TableRow(
        key=(family, n, k),
        components=[list(comp.simples) for comp in ud.components],
        diagram=ud.diagram,
        kappa=[comp.kappa for comp in ud.components],
    )


def diff_table(golden=None, rows=DEFAULT_ROWS) -> Tuple[List[TableRow], List[dict]]:
    """Regenerate each row and list every disagreement with the golden copy."""
    golden = golden_table(rows) if golden is None else golden
    regenerated, diffs = [], []
    for key in rows:
        row = regenerate_row(*key)
        regenerated.append(row)
        want = golden.get(key)
        if want is None:
            diffs.append({"system": row.name, "field": "row", "expected": None, "got": "present"})
            continue
        n = key[1]
        want_comps = [[_to_root(n, r) for r in comp] for comp in want["components"]]
        if want_comps != row.components:
            diffs.append({
                "system": row.name,
                "field": "ordered_simples",
                "expected": [format_root(b) for c in want_comps for b in c],
                "got": [format_root(b) for c in row.components for b in c],
            })
        if want["diagram"] != row.diagram:
            diffs.append({"system": row.name, "field": "diagram", "expected": want["diagram"], "got": row.diagram})
        if list(want["kappa"]) != row.kappa:
            diffs.append({"system": row.name, "field": "kappa", "expected": list(want["kappa"]), "got": row.kappa})
    return regenerated, diffs
