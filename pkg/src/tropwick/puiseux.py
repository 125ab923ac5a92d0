"""Finite Puiseux sums  sum_q c_q t^q  with rational c_q and q.

These are Laurent polynomials in some t^(1/N): enough for exact valuations
of Pfaffians and minors of matrices whose entries are such sums.  No
division is provided.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .trop_core import INF


@dataclass(frozen=True)
class PuiseuxScalar:
    terms: tuple  # ((exponent, coefficient), ...) sorted by exponent, no zero coefficients

    @classmethod
    def from_dict(cls, d) -> "PuiseuxScalar":
        return cls(tuple(sorted((Fraction(q), Fraction(c)) for q, c in d.items() if c != 0)))

    @classmethod
    def const(cls, c) -> "PuiseuxScalar":
        return cls.from_dict({0: c})

    @classmethod
    def monomial(cls, c, q) -> "PuiseuxScalar":
        return cls.from_dict({q: c})

    @classmethod
    def coerce(cls, x) -> "PuiseuxScalar":
        if isinstance(x, PuiseuxScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot make a Puiseux scalar from {x!r}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def val(self):
        """Least exponent with nonzero coefficient; INF for zero."""
        return self.terms[0][0] if self.terms else INF

    def leading_coefficient(self) -> Fraction:
        return self.terms[0][1] if self.terms else Fraction(0)

    def __add__(self, other):
        other = PuiseuxScalar.coerce(other)
        d = dict(self.terms)
        for q, c in other.terms:
            d[q] = d.get(q, 0) + c
        return PuiseuxScalar.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxScalar(tuple((q, -c) for q, c in self.terms))

    def __sub__(self, other):
        return self + (-PuiseuxScalar.coerce(other))

    def __rsub__(self, other):
        return PuiseuxScalar.coerce(other) - self

    def __mul__(self, other):
        other = PuiseuxScalar.coerce(other)
        d = {}
        for q1, c1 in self.terms:
            for q2, c2 in other.terms:
                d[q1 + q2] = d.get(q1 + q2, 0) + c1 * c2
        return PuiseuxScalar.from_dict(d)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = PuiseuxScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for q, c in self.terms:
            if q == 0:
                body = str(abs(c))
            else:
                coeff = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{coeff}t^({q})"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(f"{s}{b}" for s, b in parts[1:])


ZERO = PuiseuxScalar(())
ONE = PuiseuxScalar.const(1)

_NUM = r"\d+(?:/\d+)?"
_TERM = re.compile(
    rf"(?P<coeff>{_NUM})?(?P<star>\*)?(?P<t>t(?:\^\((?P<q>-?{_NUM})\)|\^(?P<q2>-?\d+))?)?"
)


def parse_scalar(text: str) -> PuiseuxScalar:
    """Parse ``3``, ``-1/2``, ``t^(1/2)``, ``2*t^(3)-5`` and similar."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar expression")
    pos = 0
    total = {}
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ValueError(f"expected + or - at offset {pos} in {text!r}")
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad term at offset {pos} in {text!r}")
        coeff, star, t = m.group("coeff"), m.group("star"), m.group("t")
        if star and not (coeff and t):
            raise ValueError(f"bad term {m.group(0)!r} in {text!r}")
        if coeff and t and not star:
            raise ValueError(f"missing '*' in {m.group(0)!r}")
        c = Fraction(coeff) if coeff else Fraction(1)
        if t:
            q = m.group("q") or m.group("q2")
            q = Fraction(q) if q is not None else Fraction(1)
        else:
            q = Fraction(0)
        total[q] = total.get(q, 0) + sign * c
        pos = m.end()
        first = False
    return PuiseuxScalar.from_dict(total)


# -- matrices ----------------------------------------------------------------

def as_matrix(rows) -> list:
    return [[PuiseuxScalar.coerce(x) for x in r] for r in rows]


def det(M) -> PuiseuxScalar:
    """Determinant by Laplace expansion along rows, memoised on column sets."""
    k = len(M)
    if k == 0:
        return ONE
    if any(len(r) != k for r in M):
        raise ValueError("determinant of a non-square matrix")
    memo = {}

    def rec(row, cols):
        if row == k:
            return ONE
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = ZERO
        sign = 1
        for c in range(k):
            if cols >> c & 1:
                continue
            entry = M[row][c]
            if entry:
                sub = rec(row + 1, cols | (1 << c))
                total = total + (entry * sub if sign > 0 else -(entry * sub))
            sign = -sign
        memo[key] = total
        return total

    return rec(0, 0)


def is_skew_symmetric(A) -> bool:
    k = len(A)
    return all(A[i][i].is_zero() for i in range(k)) and all(
        A[i][j] == -A[j][i] for i in range(k) for j in range(i + 1, k))


def pfaffian(A, S=None) -> PuiseuxScalar:
    """Pfaffian of the principal submatrix on index list ``S`` (default: all).

    Expansion along the first index; odd-size submatrices give 0 and the
    empty one gives 1.
    """
    if not is_skew_symmetric(A):
        raise ValueError("Pfaffian needs a skew-symmetric matrix")
    idx = tuple(sorted(S)) if S is not None else tuple(range(len(A)))
    memo = {}

    def rec(rest):
        if not rest:
            return ONE
        if len(rest) % 2:
            return ZERO
        if rest in memo:
            return memo[rest]
        first, others = rest[0], rest[1:]
        total = ZERO
        for pos, j in enumerate(others):
            a = A[first][j]
            if a:
                term = a * rec(others[:pos] + others[pos + 1:])
                total = total + (term if pos % 2 == 0 else -term)
        memo[rest] = total
        return total

    return rec(idx)


def matrix_rank(M) -> int:
    """Rank by fraction-free elimination (cross-multiplication, no division)."""
    rows = [list(r) for r in M if any(r)]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            a = rows[i][c]
            if a:
                rows[i] = [p[c] * x - a * y for x, y in zip(rows[i], p)]
        rank += 1
        if rank == len(rows):
            break
    return rank
