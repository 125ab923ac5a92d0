"""Shared fixtures: worked matrices, generators of random instances."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings

from tropwick.delta_matroid import enumerate_even_delta_matroids
from tropwick.puiseux import PuiseuxScalar, as_matrix
from tropwick.trop_core import INF
from tropwick.wick import TropicalWickVector

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"

M_CHART = [
    [1, 0, -1, 0, 0, 1, 0, 2],
    [0, 1, 3, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 1, -3, 1, -5],
    [0, 0, 5, 1, -2, 0, 0, 0],
]
M_N3 = [
    [1, 0, 0, 0, 1, -1],
    [0, 1, 0, -1, 0, 2],
    [0, 0, 1, 1, -2, 0],
]
M_U1 = [
    [1, 0, 0, 0, 0, 1, 2, 2],
    [0, 1, 0, 0, -1, 0, 1, 2],
    [0, 0, 1, 0, -2, -1, 0, 1],
    [0, 0, 0, 1, -2, -2, -1, 0],
]
M_U2 = [
    [1, 0, 0, 0, 0, 1, 2, 4],
    [0, 1, 0, 0, -1, 0, 1, 2],
    [0, 0, 1, 0, -2, -1, 0, 1],
    [0, 0, 0, 1, -4, -2, -1, 0],
]
M_N2 = [[1, 0, 1, 2], [0, 1, 1, 1]]


@lru_cache(maxsize=None)
def even_dms(n: int, up_to_iso: bool = False):
    return tuple(enumerate_even_delta_matroids(n, up_to_iso))


def random_scalar(rng: random.Random, zero_prob: float = 0.0) -> PuiseuxScalar:
    if rng.random() < zero_prob:
        return PuiseuxScalar(())
    terms = {}
    for _ in range(rng.randint(1, 2)):
        q = Fraction(rng.randint(-2, 4), rng.choice([1, 1, 2]))
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        terms[q] = terms.get(q, 0) + c
    s = PuiseuxScalar.from_dict(terms)
    return s if not s.is_zero() else PuiseuxScalar.const(1)


def random_isotropic(n: int, rng: random.Random, zero_prob: float = 0.3) -> list:
    """Row space of [I | A] with A skew, then column swaps (j, j*) and row mixing."""
    A = [[PuiseuxScalar(())] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a = random_scalar(rng, zero_prob)
            A[i][j], A[j][i] = a, -a
    one, zero = PuiseuxScalar.const(1), PuiseuxScalar(())
    M = [[one if c == r else zero for c in range(n)] + A[r] for r in range(n)]
    swap = rng.randrange(1 << n)
    for row in M:
        for j in range(n):
            if swap >> j & 1:
                row[j], row[j + n] = row[j + n], row[j]
    # add a multiple of one row to another: keeps the row space
    for _ in range(2):
        a, b = rng.sample(range(n), 2)
        f = PuiseuxScalar.monomial(rng.choice([-1, 1, 2]), rng.randint(0, 2))
        M[a] = [x + f * y for x, y in zip(M[a], M[b])]
    return as_matrix(M)


def random_wick_from_support(n: int, bases, rng: random.Random, heights=None) -> TropicalWickVector:
    vals = [INF] * (1 << n)
    for B in bases:
        vals[B] = Fraction(rng.choice(heights)) if heights else Fraction(rng.randint(-6, 6), rng.randint(1, 3))
    return TropicalWickVector(n, tuple(vals))


@pytest.fixture
def rng():
    return random.Random(20261019)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
