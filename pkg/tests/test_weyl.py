"""Weyl group enumeration and the permutation models."""

import math
import random
from itertools import permutations

import pytest

from alcoved import weyl
from alcoved.errors import BudgetExceededError, UserInputError
from alcoved.rootsys import build
from alcoved.weyl import (
    descents,
    enumerate_weyl,
    from_permutation,
    from_signed_permutation,
    identity_element,
    long_cycle,
    longest_element,
    major_index,
    negative_rotation,
    permutation_descents,
    simple_reflection,
    to_permutation,
    to_signed_permutation,
)


def test_enumeration_counts():
    assert len(enumerate_weyl(build("A", 3))) == 24
    assert len(enumerate_weyl(build("B", 2))) == 8
    assert len(enumerate_weyl(build("G", 2))) == 12
    assert len(enumerate_weyl(build("D", 4))) == 192


def test_simple_reflections_are_involutions():
    rs = build("C", 3)
    e = identity_element(rs)
    for i in range(1, rs.rank + 1):
        s = simple_reflection(rs, i)
        assert s * s == e
        assert s.word_length == 1


def test_group_axioms_small():
    rs = build("A", 2)
    W = enumerate_weyl(rs)
    for u in W:
        assert u * u.inverse() == identity_element(rs)
        for v in W:
            assert u * v in W


def test_word_length_extremes():
    for t, r in (("A", 3), ("B", 3), ("D", 4), ("G", 2)):
        rs = build(t, r)
        W = enumerate_weyl(rs)
        assert longest_element(rs, W).word_length == len(rs.positive_roots)
        assert min(w.word_length for w in W) == 0


def test_length_generating_function_is_poincare_polynomial():
    # sum of q^length factors as a product of q-integers of the degrees
    rs = build("B", 2)
    W = enumerate_weyl(rs)
    hist = {}
    for w in W:
        hist[w.word_length] = hist.get(w.word_length, 0) + 1
    # degrees of B2 are 2 and 4: (1+q)(1+q+q^2+q^3)
    assert hist == {0: 1, 1: 2, 2: 2, 3: 2, 4: 1}


def test_descents_of_identity_and_longest():
    for t, r in (("A", 3), ("C", 2), ("D", 4)):
        rs = build(t, r)
        W = enumerate_weyl(rs)
        assert descents(identity_element(rs)) == (1,) + (0,) * r
        assert descents(longest_element(rs, W)) == (0,) + (1,) * r


def test_permutation_model_roundtrip():
    rs = build("A", 3)
    for window in permutations(range(1, 5)):
        w = from_permutation(rs, window)
        assert to_permutation(w) == window
    W = enumerate_weyl(rs)
    assert len({to_permutation(w) for w in W}) == 24


def test_permutation_model_multiplies_correctly():
    rs = build("A", 2)
    rng = random.Random(7)
    for _ in range(20):
        p = tuple(rng.sample(range(1, 4), 3))
        q = tuple(rng.sample(range(1, 4), 3))
        composed = tuple(p[q[i] - 1] for i in range(3))
        assert to_permutation(from_permutation(rs, p) * from_permutation(rs, q)) == composed


def test_major_index_against_brute_force():
    for window in permutations(range(1, 5)):
        expected = sum(
            i + 1 for i in range(3) if window[i] > window[i + 1]
        )
        assert major_index(window) == expected


def test_long_cycle_has_cdes_one_descent_pattern():
    rs = build("A", 3)
    c = long_cycle(rs)
    assert to_permutation(c) == (2, 3, 4, 1)
    assert descents(c) == (0, 0, 0, 1)


def test_signed_permutation_model_roundtrip():
    rs = build("C", 2)
    windows = [
        (1, 2), (2, 1), (-1, 2), (2, -1), (-2, -1), (1, -2), (-1, -2), (-2, 1),
    ]
    for window in windows:
        assert to_signed_permutation(from_signed_permutation(rs, window)) == window
    W = enumerate_weyl(rs)
    assert len({to_signed_permutation(w) for w in W}) == 8


def test_negative_rotation():
    rs = build("C", 3)
    assert to_signed_permutation(negative_rotation(rs)) == (-3, -2, -1)


def test_model_functions_reject_wrong_type():
    with pytest.raises(UserInputError):
        to_permutation(identity_element(build("C", 2)))
    with pytest.raises(UserInputError):
        to_signed_permutation(identity_element(build("A", 2)))


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        enumerate_weyl(build("A", 4), budget=5)
