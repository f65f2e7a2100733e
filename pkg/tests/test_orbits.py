import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootorbits import _linalg as la
from rootorbits.cartan import affine_frame
from rootorbits.catalog import builtin_system, catalog_entries, from_name
from rootorbits.errors import KappaNotFound, WindowTooSmall
from rootorbits.orbits import (
    admissible_orderings,
    classify_orbit,
    finite_orbit,
    finite_subsystem_roots,
    finite_transversal,
    kappa,
    omega_from_ordering,
    reflection_product,
    sign_change,
    transversal_inf,
    upsilon_fin,
)
from rootorbits.rootspace import enumerate_real_roots, is_negative, is_positive, is_root, neg
from rootorbits.spectral import gamma_c, twisted_element
from rootorbits.weyl import make_coxeter, movable_letters, source_sink_move, standard_word

AFFINE = catalog_entries(max_extra=1)


def _setup(cd, word=None):
    frame = affine_frame(cd)
    c = standard_word(cd) if word is None else make_coxeter(cd, word)
    gd = gamma_c(cd, frame, c)
    return frame, c, gd, upsilon_fin(cd, frame, c, gd)


@pytest.fixture(scope="module")
def example():
    cd = builtin_system("D(2)", 3)
    return (cd,) + _setup(cd)


def test_example_transversals(example):
    cd, frame, c, gd, ud = example
    tr = transversal_inf(cd, c)
    assert set(tr.in_set) == {(1, 1, 2), (0, 1, 2), (0, 0, 1)}
    assert set(tr.out_set) == {(1, 0, 0), (2, 1, 0), (2, 1, 1)}
    assert tr.out_set[0] == (1, 0, 0)


def test_example_finite_orbits(example):
    cd, frame, c, gd, ud = example
    assert ud.omega == ((0, 1, 0),)
    assert ud.kappa_of == {(0, 1, 0): 2}
    assert kappa(cd, frame, (0, 1, 0)) == 2
    rep = classify_orbit(cd, frame, c, gd, (0, 1, 0), upsilon=ud)
    assert rep.kind == "finite"
    assert set(rep.members) == {(0, 1, 0), (2, 1, 2)}
    assert rep.sign == "positive"
    assert finite_transversal(ud, frame, [-1, 0, 1]) == [(-2, -1, -2), (0, 1, 0), (2, 3, 2)]


def test_example_delta_and_infinite_seeds(example):
    cd, frame, c, gd, ud = example
    rep = classify_orbit(cd, frame, c, gd, frame.delta)
    assert rep.kind == "finite" and rep.fixed and rep.members == ((1, 1, 1),)
    rep = classify_orbit(cd, frame, c, gd, (1, 0, 0))
    assert rep.kind == "infinite" and rep.hit_step == 0 and rep.hit_set == "out"
    far = c.apply((0, 0, 1), 7)
    rep = classify_orbit(cd, frame, c, gd, far)
    assert rep.hit == (0, 0, 1) and rep.hit_step == -7
    with pytest.raises(WindowTooSmall):
        classify_orbit(cd, frame, c, gd, far, M=3)


def test_example_sign_changes(example):
    cd, frame, c, gd, ud = example
    tr = transversal_inf(cd, c)
    back = sign_change(cd, c, (0, 0, 1))
    assert back is not None and back in tr.out_set
    assert sign_change(cd, c, (1, 0, 0), inverse=True) is not None
    assert sign_change(cd, c, (0, 1, 0)) is None
    assert sign_change(cd, c, (0, 1, 0), inverse=True) is None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(AFFINE), st.data())
def test_sign_change(cd, data):
    c = make_coxeter(cd, data.draw(st.permutations(range(1, cd.n + 1))))
    tr = transversal_inf(cd, c)
    for beta in sorted(enumerate_real_roots(cd, 2 * sum(affine_frame(cd).delta))):
        if not is_positive(beta):
            continue
        fwd = sign_change(cd, c, beta)
        assert (fwd is not None) == (beta in tr.in_set)
        if fwd is not None:
            assert fwd in tr.out_set
        bwd = sign_change(cd, c, beta, inverse=True)
        assert (bwd is not None) == (beta in tr.out_set)
        if bwd is not None:
            assert bwd in tr.in_set


@pytest.mark.parametrize("cd", AFFINE, ids=lambda c: c.label)
def test_upsilon_invariants(cd):
    frame, c, gd, ud = _setup(cd)
    assert len(ud.ordered_simples) == max(cd.n - 2, 0)
    assert set(ud.ordered_simples) == ud.canonical_simples
    assert ud.roots == {r for r in finite_subsystem_roots(cd, frame) if gd.phi(r) == 0}
    fin = [i - 1 for i in frame.fin_indices]
    lhs = la.principal(reflection_product(cd, ud.ordered_simples), fin)
    assert lhs == la.principal(twisted_element(cd, frame, c), fin)
    for comp in ud.components:
        total = comp.beta0
        for b in comp.simples:
            total = tuple(x + y for x, y in zip(total, b))
        assert total == tuple(comp.kappa * d for d in frame.delta)
        for b in comp.partial_sums:
            assert kappa(cd, frame, b) == comp.kappa


def test_rank_two_is_empty():
    for cd in (builtin_system("A(1)", 2), builtin_system("A(2)even", 2)):
        frame, c, gd, ud = _setup(cd)
        assert ud.omega == () and ud.components == ()
        assert finite_transversal(ud, frame, range(-3, 4)) == []


def test_f4_row():
    cd = from_name("F4(1)")
    frame, c, gd, ud = _setup(cd)
    assert ud.ordered_simples == ((0, 1, 1, 0, 0), (1, 1, 1, 1, 0), (0, 2, 1, 1, 0))
    assert all(comp.kappa == 1 for comp in ud.components)


def test_g2_row():
    frame, c, gd, ud = _setup(from_name("G2(1)"))
    assert ud.omega == ((1, 1, 0),)


@pytest.mark.parametrize(
    "name, kappas",
    [
        ("D3(2)", [2]),
        ("D4(3)", [3]),
        ("A4(2)", [1]),
        ("A5(2)", [1, 2]),
        ("A7(2)", [2, 1]),
        ("A9(2)", [2, 1]),
        ("E6(2)", [1, 2]),
    ],
)
def test_twisted_kappa(name, kappas):
    # kappa listed by increasing component rank
    cd = from_name(name)
    for word in (None, list(range(cd.n, 0, -1))):
        frame, c, gd, ud = _setup(cd, word)
        by_rank = sorted((comp.rank, comp.kappa) for comp in ud.components)
        assert [k for _, k in by_rank] == kappas


def test_kappa_via_bfs_membership():
    # kappa through the BFS window, independent of the descent test
    for cd in (from_name("D4(3)"), from_name("E6(2)"), from_name("A5(2)")):
        frame, c, gd, ud = _setup(cd)
        H = 6 * sum(frame.delta) + 10
        window = enumerate_real_roots(cd, H)
        for b, k in ud.kappa_of.items():
            ks = [m for m in range(1, 7) if tuple(m * d - x for d, x in zip(frame.delta, b)) in window]
            assert ks and ks[0] == k


def test_kappa_not_found():
    cd = builtin_system("A(2)even", 2)
    frame = affine_frame(cd)
    with pytest.raises(KappaNotFound):
        kappa(cd, frame, (1, 0), Kmax=1)
    assert kappa(cd, frame, (1, 0)) == 2


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(AFFINE), st.data())
def test_omega_independent_of_admissible_ordering(cd, data):
    frame, c, gd, ud = _setup(cd, data.draw(st.permutations(range(1, cd.n + 1))))
    found = list(admissible_orderings(cd, frame, c, ud))
    assert tuple(ud.ordered_simples) in found
    for ordering in found:
        assert omega_from_ordering(cd, ordering) == frozenset(ud.omega)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(AFFINE), st.data())
def test_finite_transversal_properties(cd, data):
    frame, c, gd, ud = _setup(cd, data.draw(st.permutations(range(1, cd.n + 1))))
    kap = ud.kappa_of
    orbits = set()
    for m in range(-2, 3):
        for t in finite_transversal(ud, frame, [m]):
            assert is_root(cd, t)
            assert is_positive(t) == (m >= 0)
            assert is_negative(t) == (m < 0)
            orbit = frozenset(finite_orbit(c, t, gd.order_on_Uc))
            assert orbit not in orbits
            orbits.add(orbit)
    assert finite_transversal(ud, frame, [0]) == list(ud.omega)
    assert set(kap) == set(ud.omega)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([e for e in AFFINE if e.n >= 3]), st.data())
def test_source_sink_covariance_of_upsilon(cd, data):
    frame, c, gd, ud = _setup(cd, data.draw(st.permutations(range(1, cd.n + 1))))
    s = data.draw(st.sampled_from(movable_letters(c)))
    if s == frame.aff:
        return
    moved = source_sink_move(c, s)
    gd2 = gamma_c(cd, frame, moved)
    ud2 = upsilon_fin(cd, frame, moved, gd2)
    from rootorbits.rootspace import reflect_simple

    # s maps U_c onto U_{scs} and fixes V_fin
    assert {reflect_simple(cd, s, r) for r in ud.roots} == set(ud2.roots)


def test_finite_orbit_bound():
    cd = builtin_system("D(2)", 3)
    frame, c, gd, ud = _setup(cd)
    with pytest.raises(WindowTooSmall):
        finite_orbit(c, (1, 0, 0), 10)


def test_negated_roots_have_negated_orbits(example):
    cd, frame, c, gd, ud = example
    rep = classify_orbit(cd, frame, c, gd, neg((0, 1, 0)), upsilon=ud)
    assert rep.sign == "negative" and set(rep.members) == {(0, -1, 0), (-2, -1, -2)}
    assert rep.to_dict()["kind"] == "finite"
