import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootorbits.cartan import (
    AFFINE,
    FINITE,
    INDEFINITE,
    affine_frame,
    classify,
    imaginary_root,
    parse_cartan,
    submatrix,
    symmetrizers,
    valid_aff_choices,
)
from rootorbits.catalog import (
    AFF1_LABELS,
    MIN_RANK,
    TWISTED_LABELS,
    builtin_system,
    catalog_entries,
    finite_entries,
    from_name,
    normalize_label,
)
from rootorbits.errors import (
    InvalidAffChoice,
    NotAffine,
    NotGCM,
    NotSymmetrizable,
    RankOutOfRange,
    UnknownLabel,
)
from rootorbits.rootspace import is_positive_real_root

import oracles

ALL_AFFINE = catalog_entries(max_extra=2)

# marks in the catalog numbering, computed by hand from the diagrams
MARKS = {
    ("A(1)", 5): (1, 1, 1, 1, 1),
    ("B(1)", 5): (2, 2, 2, 1, 1),
    ("C(1)", 4): (1, 2, 2, 1),
    ("D(1)", 5): (1, 1, 2, 1, 1),
    ("E(1)", 7): (1, 2, 1, 2, 3, 2, 1),
    ("E(1)", 8): (2, 1, 2, 3, 4, 3, 2, 1),
    ("E(1)", 9): (3, 2, 4, 6, 5, 4, 3, 2, 1),
    ("F(1)", 5): (2, 4, 3, 2, 1),
    ("G(1)", 3): (3, 2, 1),
    ("D(2)", 3): (1, 1, 1),
    ("D(3)", 3): (2, 1, 1),
    ("E(2)", 5): (2, 3, 2, 1, 1),
    ("A(2)even", 2): (1, 2),
}


def test_example_matrix():
    cd = builtin_system("D(2)", 3)
    assert cd.A == ((2, -2, 0), (-1, 2, -1), (0, -2, 2))
    assert cd.typeclass == AFFINE
    frame = affine_frame(cd)
    assert frame.delta == (1, 1, 1)
    assert frame.aff == 3 and frame.f == 1 and frame.theta == (1, 1, 0)


@pytest.mark.parametrize("cd", ALL_AFFINE, ids=lambda c: c.label)
def test_catalog_affine_systems(cd):
    assert cd.typeclass == AFFINE
    gram = oracles.symmetrize(cd.A, cd.d)
    assert all(gram[i][j] == gram[j][i] for i in range(cd.n) for j in range(cd.n))
    assert oracles.det(gram) == 0
    assert imaginary_root(cd) == oracles.delta(cd.A)


@pytest.mark.parametrize("key, marks", sorted(MARKS.items()))
def test_marks(key, marks):
    assert imaginary_root(builtin_system(*key)) == marks


@pytest.mark.parametrize("cd", finite_entries(), ids=lambda c: c.label)
def test_finite_catalog(cd):
    assert cd.typeclass == FINITE
    assert oracles.positive_definite(oracles.symmetrize(cd.A, cd.d))


@pytest.mark.parametrize(
    "A, kind",
    [
        ([[2]], FINITE),
        ([[2, -1], [-1, 2]], FINITE),
        ([[2, -2], [-2, 2]], AFFINE),
        ([[2, -1], [-4, 2]], AFFINE),
        ([[2, -3], [-3, 2]], INDEFINITE),
        ([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], AFFINE),
        ([[2, -2, -2], [-2, 2, -2], [-2, -2, 2]], INDEFINITE),
        ([[2, 0], [0, 2]], FINITE),
        # reducible: finite times affine is neither
        ([[2, 0, 0], [0, 2, -2], [0, -2, 2]], INDEFINITE),
    ],
)
def test_classify(A, kind):
    assert parse_cartan(A).typeclass == kind


def test_symmetrizer_normalization():
    assert symmetrizers(((2, -1), (-3, 2))) == (3, 1)
    assert symmetrizers(((2, -1, 0), (-2, 2, -1), (0, -1, 2))) == (2, 1, 1)
    # per component
    assert symmetrizers(((2, 0), (0, 2))) == (1, 1)


def test_not_symmetrizable():
    A = [[2, -1, -1], [-2, 2, -1], [-1, -1, 2]]
    with pytest.raises(NotSymmetrizable):
        parse_cartan(A)


@pytest.mark.parametrize(
    "A",
    [
        [[2, 1], [1, 2]],
        [[3, -1], [-1, 2]],
        [[2, -1], [0, 2]],
        [[2, -1]],
        [],
        [[2, 0.5], [-1, 2]],
    ],
)
def test_not_gcm(A):
    with pytest.raises(NotGCM):
        parse_cartan(A)


def test_imaginary_root_requires_affine():
    with pytest.raises(NotAffine):
        imaginary_root(parse_cartan([[2, -1], [-1, 2]]))


@pytest.mark.parametrize("cd", ALL_AFFINE, ids=lambda c: c.label)
def test_affine_node_choice(cd):
    choices = valid_aff_choices(cd)
    frame = affine_frame(cd)
    assert frame.aff == cd.n == max(choices)
    for aff in choices:
        fr = affine_frame(cd, aff)
        assert fr.theta[fr.aff0] == 0
        assert is_positive_real_root(cd.A, fr.theta)
        assert tuple(x - fr.f * (i == fr.aff0) for i, x in enumerate(fr.delta)) == fr.theta


def test_untwisted_every_mark_one_node_is_admissible():
    cd = builtin_system("A(1)", 5)
    assert valid_aff_choices(cd) == (1, 2, 3, 4, 5)
    assert affine_frame(cd, 2).theta == (1, 0, 1, 1, 1)


def test_even_twisted_end_node_rejected():
    # deleting the mark-1 end node leaves finite type, but delta - alpha is twice a root
    cd = builtin_system("A(2)even", 3)
    assert imaginary_root(cd) == (2, 1, 2)
    assert submatrix(cd, [0, 2]).typeclass == FINITE
    with pytest.raises(InvalidAffChoice):
        affine_frame(cd, 2)
    with pytest.raises(InvalidAffChoice):
        affine_frame(cd, 7)


def test_labels_and_names():
    assert normalize_label("d2") == "D(2)"
    assert normalize_label("A2odd") == "A(2)odd"
    with pytest.raises(UnknownLabel):
        normalize_label("A(2)")
    with pytest.raises(UnknownLabel):
        normalize_label("Q")
    with pytest.raises(RankOutOfRange):
        builtin_system("E(1)", 6)
    with pytest.raises(RankOutOfRange):
        builtin_system("B(1)", 5, k=2)
    assert from_name("E6(1)").A == builtin_system("E(1)", 7).A
    assert from_name("A4(2)").A == builtin_system("A(2)even", 3).A
    assert from_name("A5(2)").A == builtin_system("A(2)odd", 4).A
    assert from_name("D4(3)").A == builtin_system("D(3)", 3).A
    assert from_name("E6(2)").A == builtin_system("E(2)", 5).A
    assert from_name("D3(2)").A == builtin_system("D(2)", 3).A
    with pytest.raises(UnknownLabel):
        from_name("E5(2)")


def test_min_ranks_cover_every_family():
    assert set(MIN_RANK) == set(AFF1_LABELS) | set(TWISTED_LABELS)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.lists(st.integers(0, 3), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(lambda xs: (n, xs))))
def test_symmetric_gcm_classification_matches_sympy(data):
    n, xs = data
    A = [[2] * n for _ in range(n)]
    it = iter(xs)
    for i in range(n):
        for j in range(i + 1, n):
            A[i][j] = A[j][i] = -next(it)
    kind = classify(A)
    pd = oracles.positive_definite(A)
    assert (kind == FINITE) == pd
    if kind == AFFINE:
        assert oracles.det(A) == 0
