"""Bitmask subsets of [n] and of the signed ground set J.

A subset of [n] is an n-bit mask (bit i <-> element i+1).  A subset of J is a
2n-bit mask: bits 0..n-1 are the unstarred elements, bits n..2n-1 the starred
ones.  Element labels are 1-based in all text I/O.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator


def full(n: int) -> int:
    return (1 << n) - 1


def elements(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def from_elements(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def subsets_of_size(n: int, k: int) -> Iterator[int]:
    for c in combinations(range(n), k):
        yield from_elements(c)


# -- signed ground set ------------------------------------------------------

def extension(S: int, n: int) -> int:
    """S ∪ ([n] \\ S)* as a transversal of J."""
    return S | ((full(n) ^ S) << n)


def restriction(T: int, n: int) -> int:
    return T & full(n)


def star(T: int, n: int) -> int:
    """Apply the involution i <-> i* to every element of T."""
    f = full(n)
    return ((T & f) << n) | ((T >> n) & f)


def is_admissible_set(T: int, n: int) -> bool:
    return (T & (T >> n) & full(n)) == 0


def base_element(j: int, n: int) -> int:
    """The element of [n] underlying j ∈ J (0-based)."""
    return j - n if j >= n else j


def admissible_subsets(n: int) -> Iterator[int]:
    """All admissible subsets of J (3^n of them), ordered by size then mask."""
    out = []
    for choice in range(3 ** n):
        m = 0
        c = choice
        for i in range(n):
            c, r = divmod(c, 3)
            if r == 1:
                m |= 1 << i
            elif r == 2:
                m |= 1 << (i + n)
        out.append(m)
    out.sort(key=lambda m: (popcount(m), m))
    return iter(out)


def compress(mask: int, keep: int) -> int:
    """Renumber the bits of ``mask`` lying in ``keep`` consecutively."""
    out = 0
    k = 0
    for i in elements(keep):
        if mask >> i & 1:
            out |= 1 << k
        k += 1
    return out


def compress_signed(T: int, n: int, keep: int) -> int:
    """Restrict a subset of J to the signed copy of ``keep`` ⊆ [n] and renumber."""
    m = popcount(keep)
    return compress(T & full(n), keep) | (compress((T >> n) & full(n), keep) << m)


# -- text literals ------------------------------------------------------------

_TOKEN = re.compile(r"(\d+)(\*?)")


def label(j: int, n: int) -> str:
    return f"{j - n + 1}*" if j >= n else f"{j + 1}"


def format_subset(mask: int, n: int | None = None, signed: bool = False) -> str:
    """Concatenated-digit literal; bracketed when an element needs two digits."""
    if mask == 0:
        return "{}"
    if signed:
        order = sorted(elements(mask), key=lambda j: (base_element(j, n), j >= n))
        labels = [label(j, n) for j in order]
    else:
        labels = [str(i + 1) for i in elements(mask)]
    if any(len(l.rstrip("*")) > 1 for l in labels):
        return "[" + " ".join(labels) + "]"
    return "".join(labels)


def parse_subset(text: str, n: int, signed: bool = False) -> int:
    """Parse ``"13"``, ``"1*23"``, ``"[10 12*]"``, ``"{}"`` or ``"-"``.

    Unstarred labels are always allowed; starred labels require ``signed``.
    """
    s = text.strip()
    if s in ("{}", "-", "∅"):
        return 0
    if s.startswith("[") and s.endswith("]"):
        tokens = s[1:-1].split()
    elif s.startswith("{") and s.endswith("}"):
        tokens = [t for t in re.split(r"[\s,]+", s[1:-1]) if t]
    else:
        tokens = [m.group(0) for m in _TOKEN.finditer(s)]
        if "".join(tokens) != s:
            raise ValueError(f"bad subset literal {text!r}")
        # concatenated form: one digit per element
        tokens = re.findall(r"\d\*?", s)
    mask = 0
    for tok in tokens:
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise ValueError(f"bad element {tok!r} in {text!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"element {i} outside ground set of size {n}")
        if m.group(2):
            if not signed:
                raise ValueError(f"starred element {tok!r} not allowed here")
            bit = 1 << (i - 1 + n)
        else:
            bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated element {tok!r} in {text!r}")
        mask |= bit
    return mask
