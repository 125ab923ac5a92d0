from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropwick.trop_core import (
    INF,
    SignedVector,
    fmt,
    in_tropical_hull,
    is_admissible,
    is_tropically_orthogonal,
    min_achieved_twice,
    residuated_coefficients,
    tmin,
    trop,
    tropical_combination,
)

tvals = st.one_of(st.just(INF), st.fractions(min_value=-5, max_value=5, max_denominator=4))


def vectors(n):
    return st.lists(tvals, min_size=2 * n, max_size=2 * n).map(SignedVector.of)


def test_infinity_arithmetic():
    assert INF + 3 is INF
    assert 3 + INF is INF
    assert INF > Fraction(10**9)
    assert not INF < 0
    assert str(INF) == "inf"
    assert trop("inf") is INF
    assert tmin([]) is INF


def test_trop_parsing():
    assert trop("3/4") == Fraction(3, 4)
    assert trop(-2) == Fraction(-2)
    with pytest.raises(TypeError):
        trop(0.5)
    with pytest.raises(TypeError):
        trop(True)


def test_min_twice_examples():
    assert min_achieved_twice([1, 1, 2])
    assert not min_achieved_twice([0, 1, 1])
    assert min_achieved_twice([INF, INF])
    assert min_achieved_twice([])


@given(st.lists(tvals, max_size=6))
def test_min_twice_against_count(values):
    finite = [v for v in values if v is not INF]
    expected = not finite or finite.count(min(finite)) >= 2
    assert min_achieved_twice(values) == expected


def test_orthogonality_small():
    x = SignedVector.of([0, 0, INF, INF])
    y = SignedVector.of([1, 1, 0, 0])
    assert is_tropically_orthogonal(x, y)
    assert not is_tropically_orthogonal(x, SignedVector.of([0, 1, INF, INF]))


def test_admissible():
    assert is_admissible(SignedVector.of([0, INF, INF, 1]))
    assert not is_admissible(SignedVector.of([0, INF, 1, INF]))


@given(st.lists(vectors(2), min_size=1, max_size=4), st.data())
def test_combination_lies_in_hull(gens, data):
    lams = data.draw(st.lists(tvals, min_size=len(gens), max_size=len(gens)))
    if all(l is INF for l in lams):
        lams[0] = Fraction(0)
    x = tropical_combination(lams, gens)
    ok, found = in_tropical_hull(x, gens)
    assert ok
    assert tropical_combination(found, gens) == x


@given(vectors(2), st.lists(vectors(2), min_size=1, max_size=3))
def test_residuated_coefficients_are_lower_bounds(x, gens):
    lams = residuated_coefficients(x, gens)
    y = tropical_combination(lams, gens)
    # y never drops below x
    assert all(b >= a for a, b in zip(x.coords, y.coords))


def test_hull_rejects():
    g = [SignedVector.of([0, 1, INF, INF])]
    assert in_tropical_hull(SignedVector.of([0, 0, INF, INF]), g) == (False, None)
    with pytest.raises(ValueError):
        in_tropical_hull(g[0], [])


def test_normalized_and_fmt():
    v = SignedVector.of([2, INF, 3, 5])
    assert v.normalized().coords == (0, INF, 1, 3)
    assert fmt(Fraction(1, 2)) == "1/2"
    assert str(v) == "2 inf 3 5"
