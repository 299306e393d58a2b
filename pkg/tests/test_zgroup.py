import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msmetric.ground import GroundSpace
from msmetric.nmultiset import Multiset, SpaceMismatchError, matching_distance
from msmetric.zgroup import (
    SignedMultiset,
    distance_from_parts,
    embed_multiset,
    group_add,
    group_distance,
    group_neg,
    group_sub,
    neg_part,
    pos_part,
)

LINE = GroundSpace.euclidean(1)
coeff = st.sampled_from([-2, -1, 1, 2])
signed_st = st.lists(st.tuples(st.integers(-4, 4).map(float), coeff), max_size=4).map(
    lambda raw: SignedMultiset(LINE, [((x,), k) for x, k in raw])
)
ms_st = st.lists(st.integers(-4, 4).map(float), max_size=3).map(lambda xs: Multiset.from_elements(LINE, [(x,) for x in xs]))


def sm(**kw):
    return SignedMultiset(GroundSpace.discrete("e"), kw.items())


def test_parts():
    x = sm(a=2, b=-1)
    assert pos_part(x).as_dict() == {"a": 2}
    assert neg_part(x).as_dict() == {"b": 1}
    z = sm()
    assert pos_part(z).total_size == neg_part(z).total_size == 0
    y = sm(a=-3)
    assert pos_part(y).total_size == 0 and neg_part(y).as_dict() == {"a": 3}


def test_group_ops():
    x = sm(a=1, b=-2)
    assert x + (-x) == sm()
    assert group_add(sm(a=1), sm(a=-1, b=2)) == sm(b=2)
    assert group_sub(sm(a=1), sm(b=1)) == sm(a=1, b=-1)
    assert group_neg(sm(a=1)).as_dict() == {"a": -1}
    assert sm(a=0, e=4) == sm()
    with pytest.raises(SpaceMismatchError):
        group_add(sm(a=1), SignedMultiset(LINE, [((1.0,), 1)]))


def test_distance_examples():
    zero = SignedMultiset(LINE)
    assert group_distance(zero, zero) == 0.0
    x = SignedMultiset(LINE, [((3.0,), 1), ((1.0,), -1)])
    # oracle: reduces to {3} vs {1}, brute force min(2, 3 + 1)
    assert group_distance(x, zero) == 2.0
    # oracle: both copies of 1 go to the basepoint
    assert group_distance(SignedMultiset(LINE, [((1.0,), 1)]), SignedMultiset(LINE, [((1.0,), -1)])) == 2.0


def test_embedding():
    assert embed_multiset(Multiset.empty(LINE)) == SignedMultiset(LINE)
    a = Multiset.from_elements(LINE, [(2.0,), (2.0,)])
    assert embed_multiset(a).as_dict() == {(2.0,): 2}
    a = Multiset.from_elements(LINE, [(1.0,), (2.0,)])
    b = Multiset.from_elements(LINE, [(4.0,)])
    assert group_distance(embed_multiset(a), embed_multiset(b)) == 3.0


@settings(max_examples=150, deadline=None)
@given(signed_st, signed_st, signed_st)
def test_metric_and_group_laws(x, y, z):
    dxy = group_distance(x, y)
    assert dxy == group_distance(y, x)
    assert group_distance(x, x) == 0.0
    assert (dxy == 0.0) == (x == y)
    assert group_distance(x, z) <= dxy + group_distance(y, z) + 1e-9
    assert (x + y) + z == x + (y + z) and x + y == y + x
    assert group_distance(x + z, y + z) == pytest.approx(dxy, abs=1e-9)


@settings(max_examples=150, deadline=None)
@given(signed_st, signed_st, ms_st, ms_st)
def test_decomposition_independence(x, y, w, w2):
    inflated = distance_from_parts(pos_part(x) + w, neg_part(x) + w, pos_part(y) + w2, neg_part(y) + w2)
    assert inflated == pytest.approx(group_distance(x, y), abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(signed_st, signed_st, signed_st, signed_st)
def test_lipschitz_addition(x, y, x2, y2):
    assert group_distance(x + y, x2 + y2) <= group_distance(x, x2) + group_distance(y, y2) + 1e-9


@settings(max_examples=100, deadline=None)
@given(ms_st, ms_st)
def test_embedding_isometry(a, b):
    assert abs(group_distance(embed_multiset(a), embed_multiset(b)) - matching_distance(a, b)) <= 1e-12
