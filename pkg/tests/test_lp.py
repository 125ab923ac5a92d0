from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tropwick.linalg import row_echelon_pivots, solve
from tropwick.lp import Unbounded, maximize


def _brute(c, A, b):
    """Best basic feasible solution by trying every column basis."""
    m, k = len(A), len(A[0])
    best = None
    for cols in combinations(range(k), m):
        sub = [[A[r][j] for j in cols] for r in range(m)]
        sol = solve(sub, b)
        if sol is None or any(v < 0 for v in sol):
            continue
        val = sum(c[j] * v for j, v in zip(cols, sol))
        best = val if best is None else max(best, val)
    return best


def test_simple():
    # max x + y with x + y + s = 1
    val, x = maximize([1, 1, 0], [[1, 1, 1]], [1])
    assert val == 1
    assert sum(x[:2]) == 1


def test_infeasible():
    assert maximize([1], [[1]], [-1]) is None


def test_unbounded():
    with pytest.raises(Unbounded):
        maximize([1, 0], [[1, -1]], [0])


small = st.integers(-3, 3).map(Fraction)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=2, max_size=2),
       st.lists(st.integers(0, 4).map(Fraction), min_size=2, max_size=2),
       st.lists(small, min_size=4, max_size=4))
def test_against_vertex_enumeration(A, b, c):
    # a bounded feasible region: add x >= 0 and a cap on the total
    A = [row + [Fraction(0)] for row in A] + [[Fraction(1)] * 5]
    b = list(b) + [Fraction(10)]
    c = list(c) + [Fraction(0)]
    assume(len(row_echelon_pivots(A)) == len(A))
    expected = _brute(c, A, b)
    res = maximize(c, A, b)
    if expected is None:
        assert res is None
    else:
        assert res is not None and res[0] == expected
        x = res[1]
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(A, b))
