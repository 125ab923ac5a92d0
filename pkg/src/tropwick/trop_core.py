"""Min-plus scalars and vectors over the signed ground set J = {1..n, 1*..n*}.

Tropical values are exact :class:`fractions.Fraction` instances or the
singleton :data:`INF`.  Addition is ``min`` and multiplication is ``+``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union


class _Infinity:
    """The tropical zero.  Compares above every rational and absorbs ``+``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __add__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __lt__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, Fraction)):
            return True
        return NotImplemented

    def __ge__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return True
        return NotImplemented

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("tropwick.INF")


INF = _Infinity()

TropicalValue = Union[Fraction, _Infinity]


def is_inf(v) -> bool:
    return v is INF


def trop(value) -> TropicalValue:
    """Coerce ints, Fractions, rational strings and ``"inf"`` to a tropical value."""
    if value is INF:
        return INF
    if isinstance(value, bool):
        raise TypeError("booleans are not tropical values")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if s.lower() in ("inf", "∞", "+inf"):
            return INF
        return Fraction(s)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use Fraction or a rational string")
    raise TypeError(f"cannot interpret {value!r} as a tropical value")


def fmt(v: TropicalValue) -> str:
    if v is INF:
        return "inf"
    return str(v)


def tmin(values: Iterable[TropicalValue]) -> TropicalValue:
    best = INF
    for v in values:
        if v < best:
            best = v
    return best


def min_achieved_twice(values: Iterable[TropicalValue]) -> bool:
    """True iff the minimum is attained at least twice or equals ``INF``.

    The empty minimum is ``INF`` and therefore counts as achieved.
    """
    best = INF
    count = 0
    for v in values:
        if v is INF:
            continue
        if best is INF or v < best:
            best, count = v, 1
        elif v == best:
            count += 1
    return best is INF or count >= 2


@dataclass(frozen=True)
class SignedVector:
    """A vector in T^J.  ``coords`` lists 1..n first, then 1*..n*."""

    n: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 2 * self.n:
            raise ValueError(f"expected {2 * self.n} coordinates, got {len(self.coords)}")

    @classmethod
    def of(cls, values: Sequence) -> "SignedVector":
        if len(values) % 2:
            raise ValueError("a vector in T^J needs an even number of coordinates")
        return cls(len(values) // 2, tuple(trop(v) for v in values))

    @classmethod
    def infinity(cls, n: int) -> "SignedVector":
        return cls(n, (INF,) * (2 * n))

    def __getitem__(self, j: int) -> TropicalValue:
        return self.coords[j]

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def support(self) -> int:
        """Support as a 2n-bit mask (bit j set iff coordinate j is finite)."""
        mask = 0
        for j, v in enumerate(self.coords):
            if v is not INF:
                mask |= 1 << j
        return mask

    def shift(self, lam: TropicalValue) -> "SignedVector":
        """Tropical scalar multiple ``lam ⊙ self``."""
        return SignedVector(self.n, tuple(lam + v for v in self.coords))

    def normalized(self) -> "SignedVector":
        """Shift so the minimum finite entry is 0 (identity on the all-INF vector)."""
        m = tmin(self.coords)
        if m is INF:
            return self
        return self.shift(-m)

    def __str__(self) -> str:
        return " ".join(fmt(v) for v in self.coords)


def _check_same_n(vectors: Sequence[SignedVector]) -> int:
    ns = {v.n for v in vectors}
    if len(ns) > 1:
        raise ValueError(f"dimension mismatch: {sorted(ns)}")
    return ns.pop()


def orthogonal(xs: Sequence, ys: Sequence) -> bool:
    """Tropical orthogonality of plain coordinate sequences of equal length."""
    if len(xs) != len(ys):
        raise ValueError("dimension mismatch")
    return min_achieved_twice(a + b for a, b in zip(xs, ys))


def combine(lambdas: Sequence, rows: Sequence[Sequence]) -> tuple:
    """Coordinatewise min of shifted coordinate sequences."""
    return tuple(tmin(lam + r[j] for lam, r in zip(lambdas, rows)) for j in range(len(rows[0])))


def is_tropically_orthogonal(x: SignedVector, y: SignedVector) -> bool:
    _check_same_n([x, y])
    return orthogonal(x.coords, y.coords)


def is_admissible(x: SignedVector) -> bool:
    """No index i has both x_i and x_{i*} finite."""
    n = x.n
    return all(x.coords[i] is INF or x.coords[i + n] is INF for i in range(n))


def tropical_combination(lambdas: Sequence, vectors: Sequence[SignedVector]) -> SignedVector:
    """Coordinatewise ``min_i (lambda_i + a_i)``."""
    if len(lambdas) != len(vectors):
        raise ValueError("need one coefficient per vector")
    if not vectors:
        raise ValueError("empty combination")
    n = _check_same_n(vectors)
    return SignedVector(n, combine([trop(l) for l in lambdas], [a.coords for a in vectors]))


def residuated_coefficients(x: SignedVector, generators: Sequence[SignedVector]) -> list:
    """Largest lambda_i with ``lambda_i ⊙ a_i >= x`` for each generator."""
    lams = []
    for a in generators:
        lam = None
        for xj, aj in zip(x.coords, a.coords):
            if aj is INF:
                continue
            if xj is INF:
                lam = INF
                break
            d = xj - aj
            if lam is None or d > lam:
                lam = d
        lams.append(INF if lam is None else lam)
    return lams


def in_tropical_hull(x: SignedVector, generators: Sequence[SignedVector]):
    """Decide ``x ∈ tconv(generators)`` by residuation.

    Returns ``(True, lambdas)`` with a witness, or ``(False, None)``.
    """
    if not generators:
        raise ValueError("empty generator list")
    _check_same_n([x, *generators])
    lams = residuated_coefficients(x, generators)
    if tropical_combination(lams, generators) == x:
        return True, lams
    return False, None
