"""Plain-text file formats.

Lines starting with ``#`` and blank lines are ignored everywhere.  Rationals
are ``a`` or ``a/b``; infinity is ``inf``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bitsets import elements, format_subset, parse_subset
from .delta_matroid import EvenDeltaMatroid
from .puiseux import parse_scalar
from .trop_core import INF, SignedVector, fmt, trop


class FormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def _header(lines, keys):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError(1, "empty input") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] not in keys:
        raise FormatError(lineno, f"expected header '{' | '.join(keys)} <size>', got {line!r}")
    try:
        size = int(parts[1])
    except ValueError:
        raise FormatError(lineno, f"bad size {parts[1]!r}") from None
    if size < 0:
        raise FormatError(lineno, "negative size")
    return parts[0], size


# -- Δ-matroids ----------------------------------------------------------------

def parse_bases(text: str) -> tuple:
    """Return (n, set of basis masks); the exchange axiom is not checked here."""
    lines = _lines(text)
    _, n = _header(lines, ("n",))
    bases = set()
    for lineno, line in lines:
        if line == "-":
            bases.add(0)
            continue
        mask = 0
        for tok in line.split():
            try:
                i = int(tok)
            except ValueError:
                raise FormatError(lineno, f"bad element {tok!r}") from None
            if not 1 <= i <= n:
                raise FormatError(lineno, f"element {i} outside [1, {n}]")
            mask |= 1 << (i - 1)
        bases.add(mask)
    return n, bases


def format_bases(n: int, bases) -> str:
    out = [f"n {n}"]
    for B in sorted(bases):
        out.append(" ".join(str(i + 1) for i in elements(B)) if B else "-")
    return "\n".join(out) + "\n"


def format_delta_matroid(M: EvenDeltaMatroid) -> str:
    return format_bases(M.n, M.bases)


# -- Wick and Plücker vectors --------------------------------------------------------

_ENTRY = re.compile(r"^(\[[^\]]*\]|\{[^}]*\}|\S+)\s+(\S+)$")


def parse_vector_entries(text: str, allow_signed: bool = False) -> tuple:
    """Return (header key, size, {mask: value}).

    Header ``n <n>`` gives a plain ground set of size n; ``J <n>`` (only when
    ``allow_signed``) gives the signed ground set of size 2n.
    """
    lines = _lines(text)
    keys = ("n", "J") if allow_signed else ("n",)
    key, size = _header(lines, keys)
    signed = key == "J"
    m = 2 * size if signed else size
    entries = {}
    for lineno, line in lines:
        mt = _ENTRY.match(line)
        if not mt:
            raise FormatError(lineno, f"expected '<subset> <value>', got {line!r}")
        try:
            S = parse_subset(mt.group(1), size, signed=signed)
            v = trop(mt.group(2))
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError(lineno, str(e)) from None
        if S in entries:
            raise FormatError(lineno, f"duplicate subset {mt.group(1)!r}")
        entries[S] = v
    return key, m, entries



def parse_wick(text: str):
    from .wick import TropicalWickVector

    _, n, entries = parse_vector_entries(text)
    if all(v is INF for v in entries.values()):
        raise FormatError(1, "vector has empty support")
    return TropicalWickVector.from_dict(n, entries)


def format_wick(p) -> str:
    out = [f"n {p.n}"]
    for S, v in sorted(p.entries().items()):
        out.append(f"{format_subset(S, p.n)} {fmt(v)}")
    return "\n".join(out) + "\n"


def parse_plucker(text: str):
    from .linear_spaces import TropicalPluckerVector

    key, m, entries = parse_vector_entries(text, allow_signed=True)
    if all(v is INF for v in entries.values()):
        raise FormatError(1, "vector has empty support")
    try:
        return TropicalPluckerVector.from_dict(m, entries, signed=key == "J")
    except ValueError as e:
        raise FormatError(1, str(e)) from None


def format_plucker(p) -> str:
    if p.signed:
        n = p.m // 2
        out = [f"J {n}"]
        for S, v in sorted(p.wick.entries().items()):
            out.append(f"{format_subset(S, n, signed=True)} {fmt(v)}")
        return "\n".join(out) + "\n"
    return format_wick(p.wick)


# -- vectors and matrices --------------------------------------------------------

def parse_vectors(text: str) -> list:
    """One vector per line, whitespace-separated values (1..n then 1*..n*)."""
    rows = []
    for lineno, line in _lines(text):
        try:
            rows.append(tuple(trop(tok) for tok in line.split()))
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError(lineno, str(e)) from None
    return rows


def parse_signed_vectors(text: str, n: int = None) -> list:
    out = []
    for lineno, line in _lines(text):
        try:
            vec = SignedVector.of(line.split())
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError(lineno, str(e)) from None
        if n is not None and vec.n != n:
            raise FormatError(lineno, f"expected {2 * n} coordinates, got {2 * vec.n}")
        out.append(vec)
    return out


def format_vector(x) -> str:
    coords = x.coords if isinstance(x, SignedVector) else x
    return " ".join(fmt(v) for v in coords)


def parse_matrix(text: str) -> list:
    """``n <rows> cols <cols>`` followed by rows of scalar expressions."""
    lines = _lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError(1, "empty input") from None
    m = re.fullmatch(r"n\s+(\d+)\s+cols\s+(\d+)", line)
    if not m:
        raise FormatError(lineno, f"expected header 'n <n> cols <cols>', got {line!r}")
    k, cols = int(m.group(1)), int(m.group(2))
    rows = []
    for lineno, line in lines:
        toks = line.split()
        if len(toks) != cols:
            raise FormatError(lineno, f"expected {cols} entries, got {len(toks)}")
        try:
            rows.append([parse_scalar(t) for t in toks])
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError(lineno, str(e)) from None
    if len(rows) != k:
        raise FormatError(lineno if rows else 1, f"expected {k} rows, got {len(rows)}")
    return rows


def is_matrix_text(text: str) -> bool:
    for _, line in _lines(text):
        return bool(re.fullmatch(r"n\s+\d+\s+cols\s+\d+", line))
    return False
