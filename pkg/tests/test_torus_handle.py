import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from labeled_pants import homology as hm
from labeled_pants.torus_handle import (
    HandleTwist,
    Slope,
    find_handle_swap,
    intersection,
    replay_handle_word,
    s_move_slope,
    shortest_handle_swaps,
    twist_slope,
)

coprime = st.tuples(st.integers(-20, 20), st.integers(-20, 20)).filter(
    lambda t: math.gcd(*t) == 1)


def slope(t):
    return Slope(*t)


def test_slope_normalization():
    assert Slope(-1, 2) == Slope(1, -2)
    assert Slope(0, -1) == Slope(0, 1)
    assert str(Slope(-3, -2)) == "3/2"
    assert Slope.parse(" 2/-1 ") == Slope(-2, 1)
    with pytest.raises(ValueError):
        Slope(2, 4)
    with pytest.raises(ValueError):
        Slope(0, 0)


def test_intersection_examples():
    assert intersection(Slope(1, 0), Slope(0, 1)) == 1
    assert intersection(Slope(1, 1), Slope(1, -1)) == 2
    assert intersection(Slope(2, 1), Slope(2, 1)) == 0
    assert intersection(Slope(3, 2), Slope(1, 1)) == 1


def test_twist_examples():
    a, b = Slope(1, 0), Slope(0, 1)
    assert twist_slope(a, 1, b) == Slope(1, 1) or twist_slope(a, 1, b) == Slope(-1, 1)
    assert twist_slope(a, 1, b) != twist_slope(a, -1, b)
    assert twist_slope(a, 1, a) == a
    with pytest.raises(ValueError):
        twist_slope(a, 0, b)


@given(coprime, coprime, coprime, st.sampled_from([1, -1]))
def test_twist_preserves_intersection(c, x, y, d):
    c, x, y = map(slope, (c, x, y))
    assert intersection(twist_slope(c, d, x), twist_slope(c, d, y)) == intersection(x, y)


@given(coprime, coprime, st.sampled_from([1, -1]))
def test_twist_inverse(c, x, d):
    c, x = slope(c), slope(x)
    assert twist_slope(c, -d, twist_slope(c, d, x)) == x


@given(coprime, coprime, st.sampled_from([1, -1]))
def test_twist_shift_is_intersection(c, x, d):
    c, x = slope(c), slope(x)
    t = twist_slope(c, d, x)
    assert intersection(t, x) == intersection(c, x) ** 2


@given(coprime, coprime, st.sampled_from([1, -1]))
def test_slope_twist_matches_homology_twist(c, x, d):
    # the genus-1 lattice with e=(1,0), f=(0,1) carries the same transvection
    c, x = slope(c), slope(x)
    hc = hm.CurveClass([c.p, c.q])
    hx = hm.CurveClass([x.p, x.q])
    t = twist_slope(c, d, x)
    assert hm.twist(hc, d, hx) == hm.CurveClass([t.p, t.q])


def test_s_move_examples():
    assert s_move_slope(Slope(1, 0)) == {Slope(0, 1), Slope(1, 1), Slope(1, -1)}
    assert Slope(1, 0) not in s_move_slope(Slope(1, 0), bound=3)
    assert s_move_slope(Slope(0, 1)) == {Slope(1, 0), Slope(1, 1), Slope(1, -1)}


def test_s_move_complete_oracle():
    c = Slope(2, 1)
    got = s_move_slope(c, bound=4)
    brute = set()
    for p, q in itertools.product(range(-4, 5), repeat=2):
        if math.gcd(p, q) == 1 and abs(c.p * q - c.q * p) == 1:
            brute.add(Slope(p, q))
    assert got == brute


def test_handle_swap_witness():
    w = find_handle_swap()
    assert len(w) == 3
    assert [t.label for t in w] in (["a", "b", "a"], ["b", "a", "b"])
    end = replay_handle_word({"a": Slope(1, 0), "b": Slope(0, 1)}, w)[-1]
    assert end == {"a": Slope(0, 1), "b": Slope(1, 0)}
    assert [t.dsl({"a": 1, "b": 2}) for t in w] == ["twist 1 +", "twist 2 +", "twist 1 +"]


def test_no_short_swap():
    found = shortest_handle_swaps(3)
    assert found[0] == found[1] == found[2] == []
    assert len(found[3]) == 4


def test_swap_from_other_handle_basis():
    w = find_handle_swap(Slope(2, 1), Slope(1, 1))
    end = replay_handle_word({"a": Slope(2, 1), "b": Slope(1, 1)}, w)[-1]
    assert end == {"a": Slope(1, 1), "b": Slope(2, 1)}


def test_swap_requires_single_intersection():
    with pytest.raises(ValueError):
        find_handle_swap(Slope(1, 0), Slope(1, 2))


def test_replay_states_length():
    states = replay_handle_word({"a": Slope(1, 0), "b": Slope(0, 1)},
                                [HandleTwist("a", 1), HandleTwist("b", -1)])
    assert len(states) == 3
    assert states[0] == {"a": Slope(1, 0), "b": Slope(0, 1)}


def test_all_swap_words_by_matrix_oracle():
    # independent oracle: product of 2x2 transvection matrices
    def mat(v, d):
        v = np.array(v)
        J = np.array([[0, 1], [-1, 0]])
        return np.eye(2, dtype=int) + d * np.outer(v, v) @ J.T

    a0, b0 = np.array([1, 0]), np.array([0, 1])
    expected = 0
    for names in itertools.product("ab", repeat=3):
        for dirs in itertools.product((1, -1), repeat=3):
            a, b = a0.copy(), b0.copy()
            for n, d in zip(names, dirs):
                M = mat(a if n == "a" else b, d)
                a, b = M @ a, M @ b
            if (abs(a) == b0).all() and (abs(b) == a0).all():
                expected += 1
    assert len(shortest_handle_swaps(3)[3]) == expected
