"""Coxeter words and their elements in the Weyl group."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from . import _linalg as la
from .cartan import CartanData
from .errors import FiniteType, NotInitialOrFinal, NotPermutation, NotTypeACycle
from .rootspace import is_positive, reflection_matrix


def word_matrix(cd: CartanData, letters: Iterable[int]):
    """Action of ``s_{l1} s_{l2} ...`` on the alpha basis (1-based letters)."""
    m = la.identity(cd.n)
    for i in letters:
        m = la.matmul(m, reflection_matrix(cd, i))
    return m


@dataclass(frozen=True)
class CoxeterWord:
    """A permutation of the simple reflections, read left to right.

    ``order`` holds 1-based letters; ``action`` is the integer matrix of
    the product on the alpha basis (columns are images of simple roots).
    """

    cartan: CartanData = field(repr=False)
    order: Tuple[int, ...]

    @cached_property
    def action(self):
        return word_matrix(self.cartan, self.order)

    @cached_property
    def inverse_action(self):
        return word_matrix(self.cartan, reversed(self.order))

    @property
    def n(self) -> int:
        return len(self.order)

    def apply(self, v, power: int = 1):
        m = self.action if power >= 0 else self.inverse_action
        step = la.int_matvec if all(isinstance(x, int) for x in v) else la.matvec
        v = tuple(v)
        for _ in range(abs(power)):
            v = step(m, v)
        return v

    def same_element(self, other: "CoxeterWord") -> bool:
        return self.action == other.action

    def to_list(self) -> List[int]:
        return list(self.order)


@dataclass(frozen=True)
class FactoredCoxeter:
    left: Tuple[int, ...]
    aff: int
    right: Tuple[int, ...]

    @property
    def word(self) -> Tuple[int, ...]:
        return self.left + (self.aff,) + self.right


def make_coxeter(cd: CartanData, order: Sequence[int]) -> CoxeterWord:
    order = tuple(int(x) for x in order)
    if sorted(order) != list(range(1, cd.n + 1)):
        raise NotPermutation(f"{list(order)} is not a permutation of 1..{cd.n}")
    return CoxeterWord(cartan=cd, order=order)


def standard_word(cd: CartanData) -> CoxeterWord:
    return make_coxeter(cd, range(1, cd.n + 1))


def factor_at_aff(c: CoxeterWord, aff: int) -> FactoredCoxeter:
    p = c.order.index(aff)
    return FactoredCoxeter(left=c.order[:p], aff=aff, right=c.order[p + 1:])


def prefix_roots(cd: CartanData, letters: Sequence[int]):
    """The roots ``r_1 ... r_{i-1} alpha_{r_i}`` for a word."""
    m = la.identity(cd.n)
    out = []
    for i in letters:
        out.append(tuple(row[i - 1] for row in m))
        m = la.matmul(m, reflection_matrix(cd, i))
    return out


def is_reduced(cd: CartanData, word: Sequence[int]) -> bool:
    roots = prefix_roots(cd, word)
    return all(is_positive(r) for r in roots) and len(set(roots)) == len(roots)


def speyer_check(cd: CartanData, c: CoxeterWord, k: int) -> bool:
    """Whether the ``k``-fold power of the word for ``c`` is reduced."""
    if cd.is_finite:
        raise FiniteType("the power-reducedness check needs an infinite Weyl group")
    return is_reduced(cd, c.order * k)


def _commutes(cd: CartanData, i: int, j: int) -> bool:
    return cd.A[i - 1][j - 1] == 0


def initial_letters(c: CoxeterWord) -> frozenset:
    """Letters that commute with everything before them in the word."""
    cd = c.cartan
    return frozenset(s for p, s in enumerate(c.order) if all(_commutes(cd, s, t) for t in c.order[:p]))


def final_letters(c: CoxeterWord) -> frozenset:
    cd = c.cartan
    return frozenset(s for p, s in enumerate(c.order) if all(_commutes(cd, s, t) for t in c.order[p + 1:]))


def source_sink_move(c: CoxeterWord, s: int) -> CoxeterWord:
    """Word for ``s c s`` where ``s`` is initial or final in ``c``."""
    rest = tuple(x for x in c.order if x != s)
    if s in initial_letters(c):
        return CoxeterWord(cartan=c.cartan, order=rest + (s,))
    if s in final_letters(c):
        return CoxeterWord(cartan=c.cartan, order=(s,) + rest)
    raise NotInitialOrFinal(f"s_{s} is neither initial nor final in {list(c.order)}")


def movable_letters(c: CoxeterWord) -> List[int]:
    return sorted(initial_letters(c) | final_letters(c))


def cycle_order(cd: CartanData) -> List[int]:
    """1-based nodes of an n-cycle diagram, starting at node 1 toward its smaller neighbour."""
    n = cd.n
    if n < 3:
        raise NotTypeACycle("a cycle diagram needs at least 3 nodes")
    for i in range(n):
        nbrs = cd.neighbors(i)
        if len(nbrs) != 2 or any(cd.A[i][j] != -1 for j in nbrs):
            raise NotTypeACycle("every node of an A(1) diagram has exactly two simple bonds")
    walk = [0, min(cd.neighbors(0))]
    while len(walk) < n:
        a, b = cd.neighbors(walk[-1])
        nxt = a if a != walk[-2] else b
        if nxt == 0:
            raise NotTypeACycle("diagram is disconnected")
        walk.append(nxt)
    if 0 not in cd.neighbors(walk[-1]):
        raise NotTypeACycle("diagram is not a single cycle")
    return [x + 1 for x in walk]


def a1n_class(c: CoxeterWord) -> int:
    """Number of cycle edges traversed forward by the word order.

    Invariant under source-sink moves; with the cycle labelled as in the
    standard table (``1, ..., k, n, n-1, ..., k+1``) the word ``s_1...s_n``
    has class ``k``.
    """
    walk = cycle_order(c.cartan)
    pos = {s: p for p, s in enumerate(c.order)}
    n = len(walk)
    return sum(1 for t in range(n) if pos[walk[t]] < pos[walk[(t + 1) % n]])


def move_distance(c1: CoxeterWord, c2: CoxeterWord, limit: Optional[int] = None) -> Optional[int]:
    """BFS over source-sink moves; number of moves from ``c1`` to (the element) ``c2``, or None."""
    target = c2.action
    start = c1
    seen = {start.action}
    queue = deque([(start, 0)])
    while queue:
        w, dist = queue.popleft()
        if w.action == target:
            return dist
        if limit is not None and dist >= limit:
            continue
        for s in movable_letters(w):
            nxt = source_sink_move(w, s)
            if nxt.action not in seen:
                seen.add(nxt.action)
                queue.append((nxt, dist + 1))
    return None
