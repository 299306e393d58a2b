import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import definitional_distance, line_dist

from msmetric.assignment import SizeCapError, brute_force_assignment
from msmetric.ground import GroundSpace
from msmetric.nmultiset import (
    Multiset,
    SpaceMismatchError,
    add,
    canonicalize,
    embed_point,
    matching_distance,
    matching_distance_padded,
    padded_list,
)

LINE = GroundSpace.euclidean(1)
small_pts = st.lists(st.integers(-5, 5).map(float), max_size=4)


def ms(*xs, space=LINE):
    return Multiset.from_elements(space, xs)


def test_canonicalize(line):
    a = (1.0,)
    assert canonicalize(line, [(a, 2), (a, 1)]).entries == ((a, 3),)
    assert canonicalize(line, [((0.0,), 5)]).entries == ()
    assert canonicalize(line, [(a, 0), ((2.0,), 1), ((0.0,), 2)]).entries == (((2.0,), 1),)
    with pytest.raises(ValueError, match="negative"):
        canonicalize(line, [(a, -1)])


def test_entries_sorted_and_sized(line):
    m = canonicalize(line, [((3.0,), 1), ((-1.0,), 2), ((3.0,), 1)])
    assert m.entries == (((-1.0,), 2), ((3.0,), 2))
    assert m.total_size == len(m) == 4


def test_add(discrete):
    a = canonicalize(discrete, [("a", 1)])
    b = canonicalize(discrete, [("a", 1), ("b", 2)])
    c = canonicalize(discrete, [("b", 1), ("c", 1)])
    assert a + Multiset.empty(discrete) == a
    assert (b + c).as_dict() == {"a": 1, "b": 3, "c": 1}
    x, y, z = (canonicalize(discrete, [(k, 1)]) for k in "abc")
    assert (x + y) + z == x + (y + z)
    with pytest.raises(SpaceMismatchError):
        add(a, ms(1.0))


def test_distance_examples(discrete):
    assert matching_distance(ms(), ms()) == 0.0
    # oracle: brute force over padded pairings at N = m + n = 3
    assert definitional_distance([1.0, 2.0], [4.0], line_dist, 0.0) == 3.0
    assert matching_distance(ms(1.0, 2.0), ms(4.0)) == 3.0
    p = canonicalize(discrete, [("p", 1), ("q", 1)])
    q = canonicalize(discrete, [("q", 1), ("r", 1)])
    disc = lambda a, b: 0.0 if a == b else 1.0  # noqa: E731
    assert definitional_distance(["p", "q"], ["q", "r"], disc, "e") == 1.0
    assert matching_distance(p, q) == 1.0


@pytest.mark.parametrize("n", [1, 2, 3, 7, 10, 1000, 999_983, 1_000_000])
def test_point_sequence_to_basepoint(n):
    assert matching_distance(ms(1.0 / n), ms()) == 1.0 / n


def test_padded_variant():
    a, b = ms(1.0, 2.0), ms(4.0)
    assert matching_distance_padded(a, b, 2) == matching_distance(a, b)
    assert definitional_distance([1.0, 2.0], [4.0], line_dist, 0.0, extra=5) == 3.0
    assert matching_distance_padded(a, b, 3) == 3.0
    assert matching_distance_padded(a, b, 8) == 3.0
    assert matching_distance_padded(ms(), ms(), 4) == 0.0
    with pytest.raises(ValueError, match="padding length"):
        matching_distance_padded(a, b, 1)
    with pytest.raises(SizeCapError):
        matching_distance_padded(a, b, 10, size_cap=5)
    assert padded_list(b, 3) == [(4.0,), (0.0,), (0.0,)]


def test_embed_point(line):
    assert embed_point(line, (0.0,)) == Multiset.empty(line)
    assert embed_point(line, 3).entries == (((3.0,), 1),)
    # oracle: min(d(3,1), d(3,0) + d(0,1))
    assert definitional_distance([3.0], [1.0], line_dist, 0.0) == 2.0
    assert matching_distance(embed_point(line, 3), embed_point(line, 1)) == 2.0


def test_size_cap():
    big = Multiset.from_elements(LINE, [(float(i),) for i in range(1, 12)])
    with pytest.raises(SizeCapError):
        matching_distance(big, ms(), size_cap=10)


def test_space_mismatch():
    with pytest.raises(SpaceMismatchError):
        matching_distance(ms(1.0), ms(1.0, space=GroundSpace.l1(1)))


@settings(max_examples=150, deadline=None)
@given(small_pts, small_pts)
def test_matches_definitional_oracle(xs, ys):
    want = definitional_distance(xs, ys, line_dist, 0.0)
    assert matching_distance(ms(*xs), ms(*ys)) == pytest.approx(want, abs=1e-9)


@settings(max_examples=150, deadline=None)
@given(small_pts, small_pts, small_pts)
def test_metric_axioms(xs, ys, zs):
    a, b, c = ms(*xs), ms(*ys), ms(*zs)
    dab = matching_distance(a, b)
    assert dab == matching_distance(b, a)
    assert matching_distance(a, a) == 0.0
    assert (dab == 0.0) == (a == b)
    assert matching_distance(a, c) <= dab + matching_distance(b, c) + 1e-9


@settings(max_examples=100, deadline=None)
@given(small_pts, small_pts, small_pts, small_pts)
def test_lipschitz_and_cancellation(w, x, y, z):
    a, b, a2, b2 = ms(*w), ms(*x), ms(*y), ms(*z)
    assert matching_distance(a + b, a2 + b2) <= matching_distance(a, a2) + matching_distance(b, b2) + 1e-9
    assert matching_distance(a + b2, a2 + b2) == pytest.approx(matching_distance(a, a2), abs=1e-9)


def test_restriction_to_equal_sizes():
    rng = np.random.default_rng(11)
    sp = GroundSpace.euclidean(2)
    for _ in range(200):
        n = int(rng.integers(1, 6))
        xs = [tuple(p) for p in rng.uniform(-10, 10, (n, 2)).tolist()]
        ys = [tuple(p) for p in rng.uniform(-10, 10, (n, 2)).tolist()]
        unpadded = brute_force_assignment(sp.pairwise(xs, ys)).total_cost
        a, b = Multiset.from_elements(sp, xs), Multiset.from_elements(sp, ys)
        assert matching_distance(a, b) == pytest.approx(unpadded, abs=1e-9)
        assert matching_distance_padded(a, b, 2 * n) == pytest.approx(unpadded, abs=1e-9)


def test_hash_and_eq(line):
    assert hash(ms(1.0, 2.0)) == hash(ms(2.0, 1.0))
    assert ms(1.0, 0.0) == ms(1.0)
    assert ms(1.0) != ms(1.0, 1.0)
