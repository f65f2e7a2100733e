import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootorbits import _linalg as la
from rootorbits.catalog import builtin_system, catalog_entries, from_name
from rootorbits.errors import FiniteType, NotInitialOrFinal, NotPermutation, NotTypeACycle
from rootorbits.rootspace import reflection_matrix
from rootorbits.weyl import (
    a1n_class,
    cycle_order,
    factor_at_aff,
    final_letters,
    initial_letters,
    is_reduced,
    make_coxeter,
    move_distance,
    movable_letters,
    prefix_roots,
    source_sink_move,
    speyer_check,
    standard_word,
)

AFFINE = catalog_entries(max_extra=1)


def test_example_action_matrix():
    cd = builtin_system("D(2)", 3)
    c = standard_word(cd)
    assert c.action == ((1, 2, -2), (1, 1, -1), (0, 2, -1))
    assert la.matmul(c.action, c.inverse_action) == la.identity(3)
    v = (3, -1, 2)
    assert c.apply(c.apply(v, 5), -5) == v


def test_make_coxeter_rejects_non_permutations():
    cd = builtin_system("D(2)", 3)
    for bad in ([1, 2], [1, 1, 2], [0, 1, 2], [1, 2, 3, 4]):
        with pytest.raises(NotPermutation):
            make_coxeter(cd, bad)


def test_factor_at_aff():
    cd = builtin_system("D(2)", 4)
    fc = factor_at_aff(make_coxeter(cd, [2, 4, 1, 3]), 4)
    assert fc.left == (2,) and fc.right == (1, 3) and fc.word == (2, 4, 1, 3)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(AFFINE), st.data())
def test_source_sink_move_is_conjugation(cd, data):
    c = make_coxeter(cd, data.draw(st.permutations(range(1, cd.n + 1))))
    letters = movable_letters(c)
    assert letters, "every Coxeter word has an initial letter"
    s = data.draw(st.sampled_from(letters))
    moved = source_sink_move(c, s)
    r = reflection_matrix(cd, s)
    assert moved.action == la.matmul(la.matmul(r, c.action), r)
    assert c.order[0] in initial_letters(c)
    assert c.order[-1] in final_letters(c)


def test_source_sink_move_errors():
    cd = builtin_system("A(1)", 4)
    c = standard_word(cd)
    # 2 and 3 are adjacent to 1 and 4 respectively on the 4-cycle
    with pytest.raises(NotInitialOrFinal):
        source_sink_move(c, 2)
    assert source_sink_move(c, 1).order == (2, 3, 4, 1)
    assert source_sink_move(c, 4).order == (4, 1, 2, 3)


def test_commuting_letters_give_equal_elements():
    cd = builtin_system("D(1)", 5)
    a = make_coxeter(cd, [1, 2, 3, 4, 5])
    b = make_coxeter(cd, [2, 1, 3, 5, 4])
    assert a.same_element(b)
    assert move_distance(a, b) == 0


def test_prefix_roots_and_reducedness():
    cd = builtin_system("D(2)", 3)
    assert prefix_roots(cd, [1, 2, 3]) == [(1, 0, 0), (2, 1, 0), (2, 1, 1)]
    assert is_reduced(cd, [1, 2, 3, 1, 2, 3])
    assert not is_reduced(cd, [1, 1])


@pytest.mark.parametrize("cd", AFFINE, ids=lambda c: c.label)
def test_speyer_standard_word(cd):
    assert speyer_check(cd, standard_word(cd), 10)


def test_speyer_random_and_finite():
    rng = random.Random(3)
    cd = from_name("E8(1)")
    for _ in range(5):
        w = list(range(1, 10))
        rng.shuffle(w)
        assert speyer_check(cd, make_coxeter(cd, w), 6)
    with pytest.raises(FiniteType):
        speyer_check(from_name("A3"), standard_word(from_name("A3")), 2)
    # finite type: long powers are never reduced
    a2 = from_name("A2")
    assert not is_reduced(a2, standard_word(a2).order * 2)


def test_cycle_order_and_class():
    assert cycle_order(builtin_system("A(1)", 5)) == [1, 2, 3, 4, 5]
    assert cycle_order(builtin_system("A(1)", 5, 2)) == [1, 2, 5, 4, 3]
    for n in range(3, 8):
        assert a1n_class(standard_word(builtin_system("A(1)", n))) == n - 1
        for k in range(2, n):
            assert a1n_class(standard_word(builtin_system("A(1)", n, k))) == k
    with pytest.raises(NotTypeACycle):
        cycle_order(builtin_system("D(2)", 4))
    with pytest.raises(NotTypeACycle):
        cycle_order(builtin_system("A(1)", 2))


def test_class_is_the_move_invariant_small_n():
    for n in (3, 4):
        cd = builtin_system("A(1)", n)
        words = [make_coxeter(cd, p) for p in permutations(range(1, n + 1))]
        for a in words:
            for b in words:
                connected = move_distance(a, b) is not None
                assert connected == (a1n_class(a) == a1n_class(b))


def test_move_distance_limit():
    cd = builtin_system("A(1)", 4)
    a = standard_word(cd)
    b = make_coxeter(cd, [3, 4, 1, 2])
    d = move_distance(a, b)
    assert d is not None and d > 0
    assert move_distance(a, b, limit=d - 1) is None
