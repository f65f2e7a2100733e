import pytest

from rootorbits.catalog import builtin_system, from_name
from rootorbits.errors import RankNot3
from rootorbits.plot import Projector, distance_to_uc_line, plot_data, render_svg
from rootorbits.weyl import standard_word


@pytest.fixture(scope="module")
def example():
    cd = builtin_system("D(2)", 3)
    c = standard_word(cd)
    return cd, c, plot_data(cd, c, H=9)


def test_delta_is_omitted(example):
    _, _, data = example
    assert (1, 1, 1) not in data["points"] and (2, 2, 2) not in data["points"]
    assert Projector((1, 1, 1))((2, 2, 2)) is None


def test_finite_orbit_lies_on_uc_line(example):
    _, _, data = example
    assert {(0, 1, 0), (2, 1, 2)} <= data["finite"]
    for r in data["finite"]:
        assert distance_to_uc_line(data, data["points"][r]) < 1e-9


def test_infinite_roots_lie_off_the_line(example):
    _, _, data = example
    off = [r for r in data["points"] if r not in data["finite"]]
    assert off and all(distance_to_uc_line(data, data["points"][r]) > 1e-6 for r in off)


def test_arrows_follow_c(example):
    _, c, data = example
    assert data["arrows"]
    assert all(c.apply(a) == b for a, b in data["arrows"])


def test_svg_is_deterministic(example):
    cd, c, _ = example
    assert render_svg(cd, c) == render_svg(cd, c)


def test_other_rank_three_systems():
    for cd in (from_name("G2(1)"), builtin_system("A(1)", 3, 2), builtin_system("A(2)even", 3)):
        data = plot_data(cd, standard_word(cd))
        for r in data["finite"]:
            assert distance_to_uc_line(data, data["points"][r]) < 1e-9


def test_rank_not_three():
    cd = builtin_system("C(1)", 4)
    with pytest.raises(RankNot3):
        plot_data(cd, standard_word(cd))
