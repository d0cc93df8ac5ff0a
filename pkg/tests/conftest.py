"""Shared randomized-input helpers.

Seeded ``random.Random`` generators keep every suite deterministic; the
sizes stay small so exact arithmetic never dominates the runtime.
"""

from fractions import Fraction
import random

import pytest

from foliant import linalg
from foliant.foliation import Frame
from foliant.poly import MPoly

_NUMS = list(range(-4, 5))
_DENS = [1, 1, 1, 2, 3]


def rand_frac(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        f = Fraction(rng.choice(_NUMS), rng.choice(_DENS))
        if f != 0 or not nonzero:
            return f


def rand_mpoly(rng: random.Random, nvars: int, max_deg: int,
               n_terms: int = 4, vanish_at_origin: bool = False) -> MPoly:
    terms = {}
    for _ in range(n_terms):
        while True:
            e = tuple(rng.randint(0, max_deg) for _ in range(nvars))
            if sum(e) <= max_deg and (sum(e) > 0 or not vanish_at_origin):
                break
        terms[e] = rand_frac(rng)
    return MPoly(nvars, terms)


def rand_nonzero_mpoly(rng: random.Random, nvars: int, max_deg: int,
                       n_terms: int = 4,
                       vanish_at_origin: bool = False) -> MPoly:
    while True:
        p = rand_mpoly(rng, nvars, max_deg, n_terms, vanish_at_origin)
        if not p.is_zero():
            return p


def rand_frame(rng: random.Random) -> Frame:
    while True:
        m = [[rand_frac(rng) for _ in range(3)] for _ in range(3)]
        try:
            return Frame(linalg.mat(m))
        except ValueError:
            continue


def rand_homogeneous(rng: random.Random, nvars: int, deg: int) -> MPoly:
    terms = {}
    for _ in range(rng.randint(1, deg + 2)):
        parts = [rng.randint(0, deg) for _ in range(nvars - 1)]
        while sum(parts) > deg:
            parts = [rng.randint(0, deg) for _ in range(nvars - 1)]
        e = tuple(parts + [deg - sum(parts)])
        terms[e] = rand_frac(rng)
    p = MPoly(nvars, terms)
    return p


@pytest.fixture
def rng():
    return random.Random(20240831)
