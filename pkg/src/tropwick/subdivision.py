"""Regular subdivisions of 0/1 point sets induced by a height vector."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .delta_matroid import ScaleError, is_even_delta_matroid
from .linalg import row_echelon_pivots, solve
from .trop_core import trop
from .wick import TropicalWickVector

MAX_N = 5


@dataclass(frozen=True)
class SubdivisionCell:
    vertices: frozenset  # subset bitmasks
    functional: tuple  # v in Q^n; the cell is the argmin of p_R + sum_{j in R} v_j

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)


def _objective(p: TropicalWickVector, R: int, v: Sequence) -> Fraction:
    return p[R] + sum((v[j] for j in range(p.n) if R >> j & 1), Fraction(0))


def cell_at(p: TropicalWickVector, v: Sequence) -> SubdivisionCell:
    """Face of the lifted polytope minimising the linear form (v, 1)."""
    if len(v) != p.n:
        raise ValueError(f"functional needs {p.n} coordinates, got {len(v)}")
    v = tuple(trop(x) for x in v)
    vals = {R: _objective(p, R, v) for R in p.support}
    m = min(vals.values())
    return SubdivisionCell(frozenset(R for R, x in vals.items() if x == m), v)


def _lower_faces(points, heights, dim):
    """Maximal lower faces of lifted points, as (vertex index set, affine lift)."""
    k = len(points)
    found = []
    for idx in combinations(range(k), dim + 1):
        if any(all(i in cell for i in idx) for cell, _ in found):
            continue
        A = [list(points[i]) + [1] for i in idx]
        sol = solve(A, [heights[i] for i in idx])
        if sol is None:
            continue
        a, c = sol[:-1], sol[-1]
        gaps = [heights[i] - sum(ai * xi for ai, xi in zip(a, points[i])) - c for i in range(k)]
        if any(g < 0 for g in gaps):
            continue
        found.append((frozenset(i for i, g in enumerate(gaps) if g == 0), (tuple(a), c)))
    return found


def maximal_cells(p: TropicalWickVector) -> list:
    """Maximal cells of the regular subdivision of conv{e_S : S ∈ supp p}.

    Brute-force lower hull in the affine span of the support: every set of
    dim+1 affinely independent lifted points spans a candidate hyperplane,
    kept when no lifted point lies below it.
    """
    n = p.n
    if n > MAX_N:
        raise ScaleError(f"subdivisions limited to n <= {MAX_N}")
    supp = sorted(p.support)
    if len(supp) == 1:
        return [SubdivisionCell(frozenset(supp), (Fraction(0),) * n)]
    vecs = [[S >> i & 1 for i in range(n)] for S in supp]
    diffs = [[a - b for a, b in zip(v, vecs[0])] for v in vecs[1:]]
    cols = row_echelon_pivots(diffs)
    points = [tuple(v[c] for c in cols) for v in vecs]
    heights = [p[S] for S in supp]
    faces = _lower_faces(points, heights, len(cols))
    cells = []
    for verts, (a, _) in faces:
        v = [Fraction(0)] * n
        for ai, c in zip(a, cols):
            v[c] = -ai
        cells.append(SubdivisionCell(frozenset(supp[i] for i in verts), tuple(v)))
    _self_check(points, heights, faces)
    cells.sort(key=lambda c: c.sorted_vertices())
    return cells


def _self_check(points, heights, faces):
    covered = set().union(*(f for f, _ in faces))
    if covered != set(range(len(points))):
        raise RuntimeError("cells do not cover the point set")
    # on cell F the difference of lifts g_G - g_F is <= 0 and vanishes exactly
    # on F ∩ G, so the intersection is the face of F maximising it
    lift = lambda aff, x: sum(ai * xi for ai, xi in zip(aff[0], x)) + aff[1]
    for F, af in faces:
        for G, ag in faces:
            for i in F:
                d = lift(ag, points[i]) - lift(af, points[i])
                if d > 0 or (d == 0) != (i in G):
                    raise RuntimeError("two cells meet outside a common face")


def is_even_dm_subdivision(p: TropicalWickVector) -> bool:
    """Every maximal cell is the polytope of an even Δ-matroid."""
    return all(is_even_delta_matroid(p.n, c.vertices) for c in maximal_cells(p))
