from fractions import Fraction

import pytest

import gapshift as gs


@pytest.fixture
def x1():
    return gs.gapped(gs.full_shift(1), 1)


def test_membership(x1):
    assert not gs.contains(x1, [1, 1, 0, 1])
    assert gs.contains(x1, [1, 0, 1])
    xh = gs.gapped(gs.full_shift(1), "1/2")
    assert gs.contains(xh, [1, 1, 0, 1, 1])


def test_language_counts(x1):
    assert gs.language_count(x1, 4) == 15
    assert gs.language_count(x1, 5) == 28
    assert len(gs.enumerate_language(x1, 4)) == 15


def test_gap_function(x1):
    assert gs.required_zero_run(x1, 1) == 1
    assert gs.gap_function(x1, 2, 1) == 5
    assert gs.gap_function(x1, 2, -1) == 1


def test_periodic_census(x1):
    counts = [gs.periodic_points(x1, n)["count"] for n in (1, 2, 3)]
    assert counts == [2, 4, 5]
    orbits = gs.periodic_points(x1, 2)["orbits"]
    assert [o["rep"] for o in orbits] == [[0], [1], [0, 1]]
    assert orbits[2]["zero_density"] == Fraction(1, 2)


def test_glue_and_witness(x1):
    res = gs.glue(x1, [[1, 1], [1]], m=1)
    assert res["word"] == [1, 1, 0, 0, 0, 0, 1, 0]
    assert res["all_pass"]

    assert gs.min_gap_witness(x1, [1, 1], [0, 1], 1, 2) is None
    w = gs.min_gap_witness(x1, [1, 1], [0, 1], 1, 5)
    assert w is not None and gs.contains(x1, w)

    with pytest.raises(gs.InfeasibleError):
        gs.glue(x1, [[1, 1, 0, 1]], m=0)


def test_optimize(x1):
    res = gs.ergodic_optimum(x1, [0], scale=-1, offset=1, max_period=6)
    assert res["best"] == Fraction(1)
    assert res["zero_containing_best"] == Fraction(1, 2)
    assert gs.zero_density([1, 0, 0]) == Fraction(2, 3)


def test_oscillation(x1):
    pt = gs.oscillating_point(x1, [1], factor=4, phases=4)
    lo, hi, gap = gs.oscillation(pt["word"], [0], 1, 0, pt["checkpoints"])
    assert (lo, hi, gap) == (Fraction(1, 2), Fraction(9, 10), Fraction(2, 5))


def test_transport():
    lo, hi = gs.wasserstein_uniform([[0, 0, 0]], [[1, 1, 1]])
    assert lo == Fraction(7, 4)
    assert hi == Fraction(2)
