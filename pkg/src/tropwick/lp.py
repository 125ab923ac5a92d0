"""Dense two-phase simplex over exact rationals with Bland's rule.

Only meant for the tiny programs behind the polytope edge oracle
(a few dozen variables, at most seven equality rows).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


class Unbounded(Exception):
    pass


def _pivot(T, row, col):
    pv = T[row][col]
    T[row] = [v / pv for v in T[row]]
    for i, r in enumerate(T):
        if i != row and r[col] != 0:
            f = r[col]
            T[i] = [a - f * b for a, b in zip(r, T[row])]


def _run(T, basis, obj, allowed):
    """Maximize obj over the current tableau; mutates T and basis."""
    rhs = len(T[0]) - 1
    while True:
        enter = None
        for j in allowed:
            if j in basis:
                continue
            r = obj[j] - sum(obj[basis[i]] * T[i][j] for i in range(len(T)))
            if r > 0:
                enter = j
                break
        if enter is None:
            return
        leave = None
        best = None
        for i, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[rhs] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise Unbounded
        _pivot(T, leave, enter)
        basis[leave] = enter


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> Optional[tuple]:
    """Solve ``max c.x  s.t.  A x = b, x >= 0`` exactly.

    Returns ``(value, x)`` or ``None`` when infeasible.  Raises
    :class:`Unbounded` when the objective is unbounded.
    """
    m, N = len(A), len(c)
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row, rhs = [-v for v in row], -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(row + art + [rhs])
    basis = [N + i for i in range(m)]
    phase1 = [Fraction(0)] * N + [Fraction(-1)] * m
    _run(rows, basis, phase1, range(N + m))
    if any(rows[i][-1] != 0 for i in range(m) if basis[i] >= N):
        return None
    # drive remaining (zero-level) artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= N:
            col = next((j for j in range(N) if rows[i][j] != 0), None)
            if col is None:
                continue
            _pivot(rows, i, col)
            basis[i] = col
        keep.append(i)
    rows = [rows[i][:N] + [rows[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    obj = [Fraction(v) for v in c]
    if rows:
        _run(rows, basis, obj, range(N))
    elif any(v > 0 for v in obj):
        raise Unbounded
    x = [Fraction(0)] * N
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    return sum(ci * xi for ci, xi in zip(obj, x)), x
