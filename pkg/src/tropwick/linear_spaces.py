"""Tropical Plücker vectors and their tropical linear spaces.

A Plücker vector lives on the subsets of a ground set of size ``m``.  The
ground set is either plain (elements 1..m) or the signed set J with
m = 2n, laid out as 1..n, 1*..n* exactly like the signed bitmasks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .bitsets import elements, full, popcount, star, subsets_of_size, is_admissible_set
from .delta_matroid import is_matroid
from .trop_core import INF, SignedVector, combine, orthogonal, trop
from .wick import TropicalWickVector, dual_wick


@dataclass(frozen=True)
class TropicalPluckerVector:
    wick: TropicalWickVector
    signed: bool = False  # ground set is J (m = 2n)

    def __post_init__(self):
        sizes = {popcount(S) for S in self.wick.support}
        if len(sizes) != 1:
            raise ValueError("a Plücker vector needs an equicardinal support")
        if self.signed and self.wick.n % 2:
            raise ValueError("a vector on J needs an even ground set size")

    @classmethod
    def from_dict(cls, m: int, entries, signed: bool = False) -> "TropicalPluckerVector":
        return cls(TropicalWickVector.from_dict(m, entries), signed)

    @property
    def m(self) -> int:
        return self.wick.n

    @property
    def rank(self) -> int:
        return popcount(next(iter(self.wick.support)))

    @property
    def support(self) -> frozenset:
        return self.wick.support

    def __getitem__(self, S: int):
        return self.wick[S]


@dataclass(frozen=True)
class PluckerCircuit:
    vector: tuple
    kind: str  # "circuit" or "cocircuit"
    generator: int  # the subset T (circuits) or U (cocircuits)

    @property
    def support(self) -> int:
        return sum(1 << i for i, v in enumerate(self.vector) if v is not INF)


def three_term_violation(p: TropicalWickVector) -> Optional[tuple]:
    """First (S, a, b, c, d) with a unique finite minimum in a 3-term relation.

    Only sets S of size r - 2 are inspected, r being the size of the support
    members; the support itself is not examined.
    """
    r = popcount(next(iter(p.support)))
    n = p.n
    if r < 2:
        return None
    for S in subsets_of_size(n, r - 2):
        free = [1 << i for i in range(n) if not S >> i & 1]
        for a, b, c, d in combinations(free, 4):
            terms = [p[S | a | b] + p[S | c | d], p[S | a | c] + p[S | b | d],
                     p[S | a | d] + p[S | b | c]]
            finite = [t for t in terms if t is not INF]
            if finite and sum(1 for t in finite if t == min(finite)) == 1:
                return S, a, b, c, d
    return None


def three_term_relations_hold(p) -> bool:
    w = p.wick if isinstance(p, TropicalPluckerVector) else p
    return three_term_violation(w) is None


def is_tropical_plucker(p) -> bool:
    """Support is a classical matroid and every 3-term relation holds."""
    w = p.wick if isinstance(p, TropicalPluckerVector) else p
    return is_matroid(w.n, w.support) and three_term_violation(w) is None


def dual_plucker(p: TropicalPluckerVector) -> TropicalPluckerVector:
    return TropicalPluckerVector(dual_wick(p.wick), p.signed)


def _collect(p: TropicalPluckerVector, size: int, build, kind: str) -> list:
    out = {}
    if size < 0 or size > p.m:
        return []
    for T in subsets_of_size(p.m, size):
        vec = build(T)
        if all(v is INF for v in vec):
            continue
        lo = min(v for v in vec if v is not INF)
        vec = tuple(v - lo if v is not INF else INF for v in vec)
        c = PluckerCircuit(vec, kind, T)
        out.setdefault(c.support, c)
    return list(out.values())


def plucker_circuits(p: TropicalPluckerVector) -> list:
    """d_T for |T| = r + 1: entry p_{T - i} at i ∈ T; canonical, one per support."""
    m = p.m
    return _collect(p, p.rank + 1, lambda T: tuple(
        p[T ^ (1 << i)] if T >> i & 1 else INF for i in range(m)), "circuit")


def plucker_cocircuits(p: TropicalPluckerVector) -> list:
    """d*_U for |U| = r - 1: entry p_{U ∪ i} at i ∉ U (the circuits of the dual)."""
    m = p.m
    return _collect(p, p.rank - 1, lambda U: tuple(
        INF if U >> i & 1 else p[U | (1 << i)] for i in range(m)), "cocircuit")


def _coords(x) -> tuple:
    return x.coords if isinstance(x, SignedVector) else tuple(trop(v) for v in x)


def in_linear_space(p: TropicalPluckerVector, x) -> bool:
    """x is tropically orthogonal to every Plücker circuit of p."""
    xs = _coords(x)
    if len(xs) != p.m:
        raise ValueError(f"expected {p.m} coordinates, got {len(xs)}")
    return all(orthogonal(xs, c.vector) for c in plucker_circuits(p))


def _random_lambda(rng: random.Random):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 3))


def sample_linear_space(p: TropicalPluckerVector, count: int, seed: int = 0,
                        admissible: bool = False) -> list:
    """Pseudo-random tropical combinations of the Plücker cocircuits.

    With ``admissible`` (ground set J only) the cocircuits entering each
    combination are chosen so that the union of their supports is
    admissible, which yields admissible members only.
    """
    if admissible and not p.signed:
        raise ValueError("admissibility needs the signed ground set J")
    rng = random.Random(seed)
    gens = plucker_cocircuits(p)
    out = []
    if not gens:
        return [tuple([INF] * p.m) for _ in range(count)]
    n = p.m // 2
    for _ in range(count):
        order = gens[:]
        rng.shuffle(order)
        if admissible:
            chosen, union = [], 0
            for g in order:
                if is_admissible_set(union | g.support, n):
                    chosen.append(g)
                    union |= g.support
                    if rng.random() < 0.4:
                        break
            if not chosen:
                out.append(tuple([INF] * p.m))
                continue
        else:
            chosen = order[: rng.randint(1, len(order))]
        lams = [_random_lambda(rng) for _ in chosen]
        vec = combine(lams, [g.vector for g in chosen])
        out.append(SignedVector(n, vec) if p.signed else vec)
    return out


# -- the signed ground set ------------------------------------------------------

def reflection(x: SignedVector) -> SignedVector:
    """Swap coordinates i and i*."""
    n = x.n
    return SignedVector(n, x.coords[n:] + x.coords[:n])


def isotropic_pairing(x: SignedVector, y: SignedVector) -> bool:
    """min_i (x_i + y_{i*}, x_{i*} + y_i) is attained twice or is INF."""
    return orthogonal(x.coords, reflection(y).coords)


def isotropic_violation(p: TropicalPluckerVector) -> Optional[int]:
    """First n-subset T of J with p_{J \\ T} != p_{T*}, else None."""
    if not p.signed:
        raise ValueError("isotropicality needs the signed ground set J")
    n = p.m // 2
    if p.rank != n:
        raise ValueError(f"rank {p.rank} differs from n = {n}")
    f = full(2 * n)
    for T in subsets_of_size(2 * n, n):
        if p[f ^ T] != p[star(T, n)]:
            return T
    return None


def is_isotropical(p: TropicalPluckerVector) -> bool:
    return isotropic_violation(p) is None
