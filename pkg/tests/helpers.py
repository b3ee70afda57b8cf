"""Random generators and adapters between library objects and the oracle's plain data."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from boolfn import Anf, TruthTable


def monos(f: Anf):
    return [frozenset(m) for m in f.monomials()]


def bits(t: TruthTable):
    return [int(b) for b in t.bits]


def all_monomial_masks(n: int, max_deg: int):
    return [sum(1 << i for i in c) for d in range(max_deg + 1) for c in combinations(range(n), d)]


def random_anf(rng: np.random.Generator, n: int, max_deg: int, p: float = 0.5) -> Anf:
    masks = all_monomial_masks(n, max_deg)
    keep = rng.random(len(masks)) < p
    return Anf(n, [m for m, k in zip(masks, keep) if k])


def random_exact_degree(rng: np.random.Generator, n: int, deg: int, p: float = 0.5) -> Anf:
    while True:
        f = random_anf(rng, n, deg, p)
        if f.degree == deg:
            return f


def all_low_degree(n: int, max_deg: int):
    """Every ANF of degree <= max_deg on n variables."""
    masks = all_monomial_masks(n, max_deg)
    for sel in range(1 << len(masks)):
        yield Anf(n, [m for i, m in enumerate(masks) if (sel >> i) & 1])


def random_table(rng: np.random.Generator, n: int) -> TruthTable:
    return TruthTable(n, rng.integers(0, 2, size=1 << n))
