"""Wick and Plücker valuations of row spaces over finite Puiseux sums.

An n x 2n matrix has columns ordered 1..n, 1*..n*.  Its row space is
isotropic for Q(x, y) = sum_i x_i y_{i*} + x_{i*} y_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bitsets import elements, full, popcount, subsets_of_size
from .linear_spaces import TropicalPluckerVector
from .puiseux import ONE, ZERO, PuiseuxScalar, as_matrix, det, is_skew_symmetric, matrix_rank, pfaffian
from .trop_core import INF
from .wick import TropicalWickVector


def bilinear_gram(M) -> list:
    """Matrix of Q on the rows of M."""
    M = as_matrix(M)
    n = len(M[0]) // 2
    k = len(M)
    out = [[ZERO] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            s = ZERO
            for i in range(n):
                s = s + M[a][i] * M[b][i + n] + M[a][i + n] * M[b][i]
            out[a][b] = s
    return out


def is_isotropic(M) -> bool:
    return all(x.is_zero() for row in bilinear_gram(M) for x in row)


def swap_columns(M, J: int) -> list:
    """Exchange columns j and j* for every j in the mask J."""
    n = len(M[0]) // 2
    out = []
    for row in M:
        r = list(row)
        for j in elements(J):
            r[j], r[j + n] = r[j + n], r[j]
        out.append(r)
    return out


def _columns(M, cols) -> list:
    return [[row[c] for c in cols] for row in M]


def select_chart(M) -> int:
    """A mask J such that swapping (j, j*), j ∈ J, makes the first n columns independent.

    Scans j = 1..n keeping column j when it raises the rank and taking j*
    otherwise; falls back to trying every J if the greedy choice fails.
    """
    M = as_matrix(M)
    n = len(M)
    chosen = []
    J = 0
    for j in range(n):
        if matrix_rank(_columns(M, chosen + [j])) == len(chosen) + 1:
            chosen.append(j)
        else:
            chosen.append(j + n)
            J |= 1 << j
    if not det(_columns(M, chosen)).is_zero():
        return J
    for J in range(1 << n):
        if not det(_columns(swap_columns(M, J), range(n))).is_zero():
            return J
    raise ValueError("rows have rank < n")


@dataclass(frozen=True)
class Chart:
    """Row space in the form [I | A] with A = scaled_A / denominator."""

    J: int
    scaled_A: tuple  # adj(P) Q, rows of PuiseuxScalar
    denominator: PuiseuxScalar  # det(P)


def chart_matrix(M, J: int = None) -> Chart:
    """Bring an isotropic n x 2n matrix to chart form without dividing.

    After the column swaps M = [P | Q]; then A = P^{-1} Q = adj(P) Q / det(P).
    """
    M = as_matrix(M)
    n = len(M)
    if any(len(r) != 2 * n for r in M):
        raise ValueError("expected an n x 2n matrix")
    if matrix_rank(M) < n:
        raise ValueError("rows have rank < n")
    if not is_isotropic(M):
        raise ValueError("row space is not isotropic")
    if J is None:
        J = select_chart(M)
    Ms = swap_columns(M, J)
    P = _columns(Ms, range(n))
    Q = _columns(Ms, range(n, 2 * n))
    D = det(P)
    if D.is_zero():
        raise ValueError("chart columns are dependent")
    adj = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[P[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            m = det(minor)
            adj[i][j] = m if (i + j) % 2 == 0 else -m
    A = [[sum((adj[i][k] * Q[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]
    if not is_skew_symmetric(A):
        raise ValueError("chart matrix is not skew-symmetric")
    return Chart(J, tuple(tuple(r) for r in A), D)


def wick_pfaffians(chart: Chart) -> dict:
    """Map S ⊆ [n] (mask) to pf(scaled_A on S Δ J) for even |S Δ J|, signs dropped."""
    n = len(chart.scaled_A)
    A = [list(r) for r in chart.scaled_A]
    out = {}
    for S in range(1 << n):
        U = S ^ chart.J
        if popcount(U) % 2 == 0:
            out[S] = pfaffian(A, list(elements(U)))
    return out


def wick_valuation_from_rowspace(M, J: int = None) -> TropicalWickVector:
    """Valuation of the Wick coordinates, shifted so the minimum entry is 0.

    The entry at [n] \\ S is val pf(A on S Δ J); with A = scaled_A / det(P)
    that is val pf(scaled_A ...) - |S Δ J|/2 * val det(P).
    """
    chart = chart_matrix(M, J)
    n = len(chart.scaled_A)
    dval = chart.denominator.val()
    vals = [INF] * (1 << n)
    for S, pf in wick_pfaffians(chart).items():
        v = pf.val()
        if v is not INF:
            vals[full(n) ^ S] = v - Fraction(popcount(S ^ chart.J), 2) * dval
    lo = min(v for v in vals if v is not INF)
    return TropicalWickVector(n, tuple(v - lo if v is not INF else INF for v in vals))


def plucker_coordinates(M) -> dict:
    """Maximal minors of a k x m matrix, keyed by column mask."""
    M = as_matrix(M)
    k, m = len(M), len(M[0])
    return {S: det(_columns(M, list(elements(S)))) for S in subsets_of_size(m, k)}


def plucker_valuation_from_rowspace(M, signed: bool = None) -> TropicalPluckerVector:
    """p_S = val det(columns S).  ``signed`` defaults to True for n x 2n input."""
    M = as_matrix(M)
    k, m = len(M), len(M[0])
    coords = plucker_coordinates(M)
    if all(d.is_zero() for d in coords.values()):
        raise ValueError("rows are linearly dependent")
    if signed is None:
        signed = m == 2 * k
    return TropicalPluckerVector.from_dict(
        m, {S: d.val() for S, d in coords.items() if not d.is_zero()}, signed)


def recover_constraints(*args, **kwargs):
    """Classical recovery of U from its Wick vector needs unspecified sign factors."""
    raise NotImplementedError(
        "recovering the subspace needs sign conventions that are left unspecified; "
        "use wick.all_circuits for the tropical counterpart")
