"""Tropical Wick vectors (valuated even Δ-matroids).

A vector ``p`` lives on the subsets of [n]; ``p.values[S]`` is the entry at
the subset with bitmask ``S``.  The extension p̄ to transversals of J is
never materialised: p̄ at the extension of S is just ``p[S]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Mapping, Optional

from .bitsets import elements, extension, full, popcount
from .delta_matroid import EvenDeltaMatroid, is_even_delta_matroid, rank
from .trop_core import (
    INF,
    SignedVector,
    is_admissible,
    is_tropically_orthogonal,
    min_achieved_twice,
    tropical_combination,
    trop,
)


@dataclass(frozen=True)
class TropicalWickVector:
    n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} entries, got {len(self.values)}")
        vals = tuple(trop(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if all(v is INF for v in vals):
            raise ValueError("a tropical Wick vector needs nonempty support")

    @classmethod
    def from_dict(cls, n: int, entries: Mapping[int, object]) -> "TropicalWickVector":
        vals = [INF] * (1 << n)
        for S, v in entries.items():
            if not 0 <= S < 1 << n:
                raise ValueError(f"subset {S} outside [n]")
            vals[S] = trop(v)
        return cls(n, tuple(vals))

    @classmethod
    def of_matroid(cls, M: EvenDeltaMatroid) -> "TropicalWickVector":
        """The 0/INF indicator vector p_M of the bases."""
        return cls.from_dict(M.n, {B: 0 for B in M.bases})

    def __getitem__(self, S: int):
        return self.values[S]

    @property
    def support(self) -> frozenset:
        return frozenset(S for S, v in enumerate(self.values) if v is not INF)

    def entries(self) -> dict:
        return {S: v for S, v in enumerate(self.values) if v is not INF}

    def shifted(self, c) -> "TropicalWickVector":
        return TropicalWickVector(self.n, tuple(v + trop(c) for v in self.values))

    def normalized(self) -> "TropicalWickVector":
        return self.shifted(-min(self.entries().values()))

    def matroid(self) -> EvenDeltaMatroid:
        return EvenDeltaMatroid(self.n, self.support)


def _integer_heights(p: TropicalWickVector) -> list:
    """Scale finite entries to integers (None for INF); relations are scale-free."""
    den = 1
    for v in p.values:
        if v is not INF:
            den = lcm(den, v.denominator)
    return [None if v is INF else int(v * den) for v in p.values]


def _unique_min(terms) -> bool:
    best, count = None, 0
    for t in terms:
        if t is None:
            continue
        if best is None or t < best:
            best, count = t, 1
        elif t == best:
            count += 1
    return best is not None and count == 1


def _pair(h, A, B):
    a, b = h[A], h[B]
    return None if a is None or b is None else a + b


def wick_violation(p: TropicalWickVector) -> Optional[tuple]:
    """First pair (S, T) whose relation has a unique finite minimum, else None."""
    h = _integer_heights(p)
    N = 1 << p.n
    bits = [tuple(1 << i for i in elements(d)) for d in range(N)]
    for S in range(N):
        for T in range(S + 1, N):
            if _unique_min(_pair(h, S ^ b, T ^ b) for b in bits[S ^ T]):
                return S, T
    return None


def check_wick_full(p: TropicalWickVector) -> bool:
    """All tropical Wick relations, one per pair of subsets."""
    return wick_violation(p) is None


def four_term_violation(p: TropicalWickVector) -> Optional[tuple]:
    """First (S, a, b, c, d) breaking a 4-term relation, else None."""
    h = _integer_heights(p)
    n = p.n
    for S in range(1 << n):
        free = [1 << i for i in range(n) if not S >> i & 1]
        for a, b, c, d in combinations(free, 4):
            even = (_pair(h, S | a | b | c | d, S), _pair(h, S | a | b, S | c | d),
                    _pair(h, S | a | c, S | b | d), _pair(h, S | a | d, S | b | c))
            odd = (_pair(h, S | a | b | c, S | d), _pair(h, S | a | b | d, S | c),
                   _pair(h, S | a | c | d, S | b), _pair(h, S | b | c | d, S | a))
            if _unique_min(even) or _unique_min(odd):
                return S, a, b, c, d
    return None


def check_wick_local(p: TropicalWickVector) -> bool:
    """Support is an even Δ-matroid and every 4-term relation holds."""
    return is_even_delta_matroid(p.n, p.support) and four_term_violation(p) is None


def dual_wick(p: TropicalWickVector) -> TropicalWickVector:
    f = full(p.n)
    return TropicalWickVector(p.n, tuple(p.values[f ^ S] for S in range(1 << p.n)))


# -- circuits and cocircuits --------------------------------------------------------

@dataclass(frozen=True)
class WickCircuit:
    vector: SignedVector
    kind: str  # "circuit" or "cocircuit"
    transversal: int  # the generating T̄ as a 2n-bit mask

    @property
    def support(self) -> int:
        return self.vector.support

    def canonical(self) -> "WickCircuit":
        return WickCircuit(self.vector.normalized(), self.kind, self.transversal)


def _flip_vector(p: TropicalWickVector, T: int, on_transversal: bool) -> SignedVector:
    # entry for element k is p at T Δ k, placed at k or k* depending on side
    n = p.n
    coords = [INF] * (2 * n)
    for k in range(n):
        in_T = bool(T >> k & 1)
        pos = k if in_T == on_transversal else k + n
        coords[pos] = p.values[T ^ (1 << k)]
    return SignedVector(n, tuple(coords))


def circuit_at(p: TropicalWickVector, T: int) -> Optional[WickCircuit]:
    """c_T: entries p̄ at T̄ Δ {i, i*} for i ∈ T̄; None when all entries are INF."""
    v = _flip_vector(p, T, True)
    if v.support == 0:
        return None
    return WickCircuit(v, "circuit", extension(T, p.n))


def cocircuit_at(p: TropicalWickVector, T: int) -> Optional[WickCircuit]:
    """c*_T: entries p̄ at T̄ Δ {i, i*} for i ∉ T̄."""
    v = _flip_vector(p, T, False)
    if v.support == 0:
        return None
    return WickCircuit(v, "cocircuit", extension(T, p.n))


def _all(p: TropicalWickVector, build) -> list:
    out = {}
    for T in range(1 << p.n):
        c = build(p, T)
        if c is not None and c.support not in out:
            out[c.support] = c.canonical()
    return list(out.values())


@lru_cache(maxsize=4096)
def all_circuits(p: TropicalWickVector) -> list:
    """One canonical (min entry 0) circuit per support."""
    return _all(p, circuit_at)


@lru_cache(maxsize=4096)
def all_cocircuits(p: TropicalWickVector) -> list:
    return _all(p, cocircuit_at)


def is_cocycle(p: TropicalWickVector, x: SignedVector) -> bool:
    if x.n != p.n:
        raise ValueError("dimension mismatch")
    return is_admissible(x) and all(is_tropically_orthogonal(x, c.vector) for c in all_circuits(p))


def cocycle_decompose(p: TropicalWickVector, x: SignedVector) -> list:
    """Write a cocycle as a tropical combination of cocircuits.

    Returns ``[(lam, cocircuit), ...]`` with canonical cocircuits and
    ``min_i (lam_i + c_i) == x``.  One cocircuit is built per coordinate j in
    the support of x, dominating x and touching it at j.
    """
    if not is_cocycle(p, x):
        raise ValueError("x is not a cocycle of p")
    supp = x.support
    if not supp:
        raise ValueError("x has empty support")
    n = p.n
    f = full(n)
    pstar = dual_wick(p)
    dual_bases = sorted(pstar.support)
    terms = []
    for j in elements(supp):
        ej = 1 << (j - n if j >= n else j)
        cands = [B for B in dual_bases if extension(B, n) >> j & 1]
        if not cands:
            # {j} is a cocircuit of the underlying Δ-matroid
            coords = [INF] * (2 * n)
            coords[j] = Fraction(0)
            c = WickCircuit(SignedVector(n, tuple(coords)), "cocircuit", 0)
            terms.append((x[j], c))
            continue

        def key(B):
            common = extension(B, n) & supp
            return (-popcount(common), pstar[B] + sum(x[l] for l in elements(common)),
                    extension(B, n))

        B = min(cands, key=key)
        A = f ^ B  # basis of M with p[A] = p*[B]
        cj = circuit_at(p, A ^ ej).vector
        sums = [a + b for a, b in zip(x.coords, cj.coords)]
        m = min(sums)
        k = next(l for l, s in enumerate(sums) if s == m and l != j)
        ek = 1 << (k - n if k >= n else k)
        cstar = cocircuit_at(p, A ^ ek)
        lam = x[j] - cstar.vector[j]
        canon = cstar.canonical()
        terms.append((lam + (cstar.vector[j] - canon.vector[j]), canon))
    unique = []
    for t in terms:
        if t not in unique:
            unique.append(t)
    combo = tropical_combination([l for l, _ in unique], [c.vector for _, c in unique])
    if combo != x:
        raise RuntimeError("cocycle decomposition failed to reproduce x")
    return unique


def wick_from_rank(M: EvenDeltaMatroid) -> TropicalWickVector:
    """p_T = -rank(T̄) on even T, INF on odd T."""
    n = M.n
    return TropicalWickVector(n, tuple(
        Fraction(-rank(M, extension(T, n))) if popcount(T) % 2 == 0 else INF
        for T in range(1 << n)))


def min_relation_values(p: TropicalWickVector, S: int, T: int) -> list:
    """The terms p_{SΔi} + p_{TΔi}, i ∈ S Δ T, of one relation."""
    return [p[S ^ (1 << i)] + p[T ^ (1 << i)] for i in elements(S ^ T)]


def relation_holds(p: TropicalWickVector, S: int, T: int) -> bool:
    return min_achieved_twice(min_relation_values(p, S, T))
