import pytest
from hypothesis import given
from hypothesis import strategies as st

from msmetric.ground import GroundSpace, dist
from msmetric.quotient import COLLAPSED, QuotientSpace, collapse, quotient_distance, uncollapsed_distance

LINE = GroundSpace.euclidean(1)
pt = st.integers(-20, 20).map(lambda v: (float(v),))


def test_collapse():
    qs = QuotientSpace(LINE, [0.0])
    assert collapse(qs, 0.0) == COLLAPSED
    assert collapse(qs, 2.0).representative == (2.0,)
    assert collapse(qs, 1e-9) != COLLAPSED
    with pytest.raises(ValueError):
        QuotientSpace(LINE, [])


def test_distance_examples():
    qs = QuotientSpace(LINE, [0.0])
    # oracle: min(|3 - (-4)|, 3 + 4)
    assert quotient_distance(qs, collapse(qs, 3), collapse(qs, -4)) == min(7.0, 3.0 + 4.0) == 7.0
    qs = QuotientSpace(LINE, [-1.0, 0.0, 1.0])
    assert quotient_distance(qs, collapse(qs, 5), collapse(qs, -5)) == min(10.0, 4.0 + 4.0) == 8.0
    assert quotient_distance(qs, collapse(qs, 5), COLLAPSED) == 4.0
    assert quotient_distance(qs, collapse(qs, 1), COLLAPSED) == 0.0
    assert quotient_distance(qs, COLLAPSED, COLLAPSED) == 0.0


def test_uncollapsed_formula_is_only_pseudometric():
    qs = QuotientSpace(LINE, [-1.0, 1.0])
    assert uncollapsed_distance(qs, -1.0, 1.0) == 0.0
    assert dist(LINE, (-1.0,), (1.0,)) == 2.0


@given(st.lists(pt, min_size=1, max_size=4), pt, pt, pt)
def test_axioms_and_lipschitz(H, x, y, z):
    qs = QuotientSpace(LINE, H)
    p, q, r = collapse(qs, x), collapse(qs, y), collapse(qs, z)
    d = quotient_distance(qs, p, q)
    assert d == quotient_distance(qs, q, p)
    assert (d == 0.0) == (p == q)
    assert quotient_distance(qs, p, r) <= d + quotient_distance(qs, q, r) + 1e-12
    assert d <= dist(LINE, x, y)
