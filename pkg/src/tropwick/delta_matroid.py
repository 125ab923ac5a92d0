"""Even Δ-matroids on [n] stored as frozensets of bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable

from . import lp
from .bitsets import (
    admissible_subsets,
    base_element,
    compress,
    elements,
    extension,
    full,
    is_admissible_set,
    popcount,
)

MAX_N = 6
MAX_ENUM_N = 5


class ScaleError(ValueError):
    """Input exceeds the desk-scale limits of an exhaustive routine."""


def _exchange_holds(bases: frozenset, strict: bool) -> bool:
    for A in bases:
        for B in bases:
            d = A ^ B
            for a in elements(d):
                abit = 1 << a
                rest = d ^ abit if strict else d
                if not any(A ^ abit ^ (1 << b) in bases if b != a else A ^ abit in bases
                           for b in elements(rest)):
                    return False
    return True


def is_delta_matroid(n: int, bases: Iterable[int]) -> bool:
    bases = frozenset(bases)
    return bool(bases) and all(0 <= B <= full(n) for B in bases) and _exchange_holds(bases, False)


def is_even_delta_matroid(n: int, bases: Iterable[int]) -> bool:
    bases = frozenset(bases)
    return bool(bases) and all(0 <= B <= full(n) for B in bases) and _exchange_holds(bases, True)


def is_matroid(n: int, bases: Iterable[int]) -> bool:
    """Classical matroid: equicardinal bases plus the exchange axiom."""
    bases = frozenset(bases)
    return len({popcount(B) for B in bases}) == 1 and is_delta_matroid(n, bases)


@dataclass(frozen=True)
class EvenDeltaMatroid:
    n: int
    bases: frozenset

    def __post_init__(self):
        object.__setattr__(self, "bases", frozenset(self.bases))
        if not is_even_delta_matroid(self.n, self.bases):
            raise ValueError("bases do not satisfy the even symmetric exchange axiom")

    @property
    def extended_bases(self) -> list:
        return [extension(B, self.n) for B in sorted(self.bases)]

    def sorted_bases(self) -> list:
        return sorted(self.bases)


def strong_exchange_holds(M: EvenDeltaMatroid) -> bool:
    bases = M.bases
    for A in bases:
        for B in bases:
            d = A ^ B
            for a in elements(d):
                if not any(A ^ (1 << a) ^ (1 << b) in bases and B ^ (1 << a) ^ (1 << b) in bases
                           for b in elements(d ^ (1 << a))):
                    return False
    return True


# -- duality, twists, minors ------------------------------------------------

def dual(M: EvenDeltaMatroid) -> EvenDeltaMatroid:
    f = full(M.n)
    return EvenDeltaMatroid(M.n, frozenset(f ^ B for B in M.bases))


def twist(M: EvenDeltaMatroid, D: int) -> EvenDeltaMatroid:
    return EvenDeltaMatroid(M.n, frozenset(B ^ D for B in M.bases))


def _minor(M: EvenDeltaMatroid, S: int, pick_max: bool) -> EvenDeltaMatroid:
    sizes = [popcount(B & S) for B in M.bases]
    target = max(sizes) if pick_max else min(sizes)
    keep = full(M.n) ^ S
    new = frozenset(compress(B, keep) for B, s in zip(M.bases, sizes) if s == target)
    return EvenDeltaMatroid(popcount(keep), new)


def contraction(M: EvenDeltaMatroid, S: int) -> EvenDeltaMatroid:
    """M/S over [n] \\ S; surviving elements are renumbered in increasing order."""
    return _minor(M, S, True)


def deletion(M: EvenDeltaMatroid, S: int) -> EvenDeltaMatroid:
    """M \\ S over [n] \\ S; surviving elements are renumbered in increasing order."""
    return _minor(M, S, False)


# -- rank, independence, circuits -------------------------------------------

def rank(M: EvenDeltaMatroid, A: int) -> int:
    if not is_admissible_set(A, M.n):
        raise ValueError("rank is only defined on admissible subsets of J")
    return max(popcount(Bb & A) for Bb in M.extended_bases)


def is_independent(M: EvenDeltaMatroid, S: int) -> bool:
    return any(S & ~Bb == 0 for Bb in M.extended_bases)


def circuits(M: EvenDeltaMatroid) -> list:
    """Minimal dependent admissible subsets of J, by increasing size."""
    ext = M.extended_bases
    found = []
    for S in admissible_subsets(M.n):
        if any(S & ~Bb == 0 for Bb in ext):
            continue
        if any(C & S == C for C in found):
            continue
        found.append(S)
    return found


def cocircuits(M: EvenDeltaMatroid) -> list:
    return circuits(dual(M))


def fundamental_circuit(M: EvenDeltaMatroid, B: int, j: int) -> int:
    """The unique circuit inside B̄ ∪ j."""
    n = M.n
    if B not in M.bases:
        raise ValueError("B is not a basis")
    Bb = extension(B, n)
    if Bb >> j & 1:
        raise ValueError("j already lies in the extended basis")
    ej = base_element(j, n)
    out = 1 << j
    for i in elements(Bb):
        flip = (1 << ej) | (1 << base_element(i, n))
        if B ^ flip in M.bases:
            out |= 1 << i
    return out


def is_cycle(M: EvenDeltaMatroid, S: int) -> bool:
    """S is an admissible union of circuits (the empty union included)."""
    if not is_admissible_set(S, M.n):
        return False
    covered = 0
    for C in circuits(M):
        if C & S == C:
            covered |= C
    return covered == S


# -- polytope ------------------------------------------------------------------

def _vertex(S: int, n: int) -> list:
    return [S >> i & 1 for i in range(n)]


def polytope_edges(n: int, bases: Iterable[int]) -> list:
    """Pairs (A, B), A < B, whose vertices span an edge of conv{e_S}.

    Certified with an exact LP: the midpoint of a non-edge can be written
    using some weight on other vertices.
    """
    if n > MAX_N:
        raise ScaleError(f"edge oracle limited to n <= {MAX_N}")
    verts = sorted(set(bases))
    pts = [_vertex(S, n) for S in verts]
    k = len(verts)
    edges = []
    for a in range(k):
        for b in range(a + 1, k):
            A = [[Fraction(1)] * k] + [[Fraction(pts[v][c]) for v in range(k)] for c in range(n)]
            rhs = [Fraction(1)] + [Fraction(pts[a][c] + pts[b][c], 2) for c in range(n)]
            obj = [Fraction(0) if v in (a, b) else Fraction(1) for v in range(k)]
            value, _ = lp.maximize(obj, A, rhs)
            if value == 0:
                edges.append((verts[a], verts[b]))
    return edges


def polytope_edge_vectors(M_or_n, bases=None) -> set:
    """Difference vectors e_B - e_A of the polytope's edges."""
    if isinstance(M_or_n, EvenDeltaMatroid):
        n, bases = M_or_n.n, M_or_n.bases
    else:
        n = M_or_n
    return {tuple(y - x for x, y in zip(_vertex(A, n), _vertex(B, n)))
            for A, B in polytope_edges(n, bases)}


def is_type_d_root(vec) -> bool:
    """Shape ±e_i ± e_j with i != j."""
    nz = [v for v in vec if v]
    return len(nz) == 2 and all(abs(v) == 1 for v in nz)


# -- enumeration ----------------------------------------------------------------

def hyperoctahedral_group(n: int) -> list:
    """All (permutation, twist) pairs acting by S -> perm(S) Δ D."""
    return [(perm, D) for perm in permutations(range(n)) for D in range(1 << n)]


def _act(S: int, perm, D: int) -> int:
    r = 0
    for i in elements(S):
        r |= 1 << perm[i]
    return r ^ D


def canonical_form(M: EvenDeltaMatroid, group=None) -> tuple:
    """Lexicographically least sorted basis tuple over the signed-permutation orbit."""
    group = group or hyperoctahedral_group(M.n)
    return min(tuple(sorted(_act(B, p, D) for B in M.bases)) for p, D in group)


def _raw_families(n: int) -> list:
    evens = [S for S in range(1 << n) if popcount(S) % 2 == 0]
    out = []
    for choice in range(1, 1 << len(evens)):
        fam = frozenset(evens[i] for i in elements(choice))
        if _exchange_holds(fam, True):
            out.append(fam)
    if n >= 1:
        out += [frozenset(S ^ 1 for S in fam) for fam in out]
    return out


def has_dummy(M: EvenDeltaMatroid) -> bool:
    """Some element lies in every basis or in none."""
    inter = full(M.n)
    union = 0
    for B in M.bases:
        inter &= B
        union |= B
    return inter != 0 or union != full(M.n)


def enumerate_even_delta_matroids(n: int, up_to_iso: bool = False,
                                  cumulative: bool = False) -> list:
    """All even Δ-matroids on [n], optionally one per signed-permutation orbit.

    With ``cumulative`` the result holds, for every k <= n, the orbit
    representatives on [k] that have no element lying in all or no bases.
    Padding those with dummy elements reproduces the ``up_to_iso`` list on
    [n] exactly, so both readings give the same count.
    """
    if n > MAX_ENUM_N or n < 0:
        raise ScaleError(f"enumeration limited to 0 <= n <= {MAX_ENUM_N}")
    if cumulative:
        out = []
        for k in range(n + 1):
            out += [M for M in enumerate_even_delta_matroids(k, True) if not has_dummy(M)]
        return out
    fams = _raw_families(n)
    if not up_to_iso:
        return [EvenDeltaMatroid(n, f) for f in sorted(fams, key=lambda f: sorted(f))]
    group = hyperoctahedral_group(n)
    seen = set()
    reps = []
    for fam in fams:
        if fam in seen:
            continue
        orbit = {frozenset(_act(B, p, D) for B in fam) for p, D in group}
        seen |= orbit
        reps.append(min(tuple(sorted(o)) for o in orbit))
    return [EvenDeltaMatroid(n, frozenset(r)) for r in sorted(reps)]
