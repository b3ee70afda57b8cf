"""Search for pure-quadratic APN functions using the M(F) criterion.

Candidates have no affine part: each coordinate is a sum of degree-2
monomials, drawn as a mask over the C(n, 2) pairs x_i x_j (i < j, in
lexicographic order). Adding affine terms to coordinates does not change
APN-ness, so nothing is lost.

For a quadratic F, M(F) = 2^n sum_lambda (2^dim V(F_lambda) - 1) and
V(F_lambda) is the radical of the XOR of the coordinates' bilinear forms.
The radical dimension of every possible form is tabulated once, which turns
the filter into array lookups over a whole batch. Hits are re-checked with
the difference distribution table, computed for the whole batch at once, and
the first hit of every batch is also run through the reference M(F) and DDT
code paths.

Work is cut into fixed-size batches, each seeded by (seed, batch index), so
the emitted hits do not depend on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from . import gf2
from .core import Anf, VectorialBf
from .errors import InfeasibleConfigError
from .textio import format_anf
from .vbf import apn_m_value, ddt, m_total

BATCH_SIZE = 4096
EXHAUSTIVE_MAX_N = 4
SEARCH_MAX_N = 6


@dataclass(frozen=True)
class SearchConfig:
    n: int
    mode: str = "random"
    samples: int = 100_000
    seed: int = 0
    bent_components: int | None = None  # None: every APN hit; K: only hits with K bent components
    workers: int = 1

    def validate(self) -> None:
        if self.mode not in ("random", "exhaustive"):
            raise InfeasibleConfigError(f"unknown search mode {self.mode!r}")
        if not 2 <= self.n <= SEARCH_MAX_N:
            raise InfeasibleConfigError(f"search supports 2 <= n <= {SEARCH_MAX_N}")
        if self.mode == "exhaustive" and self.n > EXHAUSTIVE_MAX_N:
            raise InfeasibleConfigError(
                f"exhaustive search is limited to n <= {EXHAUSTIVE_MAX_N}"
            )
        if self.mode == "random" and self.samples < 0:
            raise InfeasibleConfigError("sample count must be non-negative")
        if self.bent_components is not None and self.n % 2:
            raise InfeasibleConfigError("bent-component targets need even n")
        if self.workers < 1:
            raise InfeasibleConfigError("worker count must be >= 1")

    @property
    def total(self) -> int:
        if self.mode == "exhaustive":
            return 1 << (self.n * len(pairs(self.n)))
        return self.samples


@dataclass(frozen=True)
class Hit:
    """A verified APN candidate. ``masks[i]`` is the pair mask of coordinate i + 1."""

    index: int
    n: int
    masks: tuple[int, ...]
    lut: tuple[int, ...]
    M: int
    delta: int
    bent_components: int | None
    ab: bool | None

    @property
    def F(self) -> VectorialBf:
        return vbf_from_mask(self.n, self.masks)

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "coordinates": [format_anf(f) for f in self.F.anfs()],
            "lut": list(self.lut),
            "M": self.M,
            "delta": self.delta,
            "bent_components": self.bent_components,
            "ab": self.ab,
        }


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def radical_dims(n: int) -> np.ndarray:
    """dim of the radical for every alternating form, indexed by pair mask."""
    ps = pairs(n)
    out = np.empty(1 << len(ps), dtype=np.int64)
    for mask in range(out.size):
        rows = [0] * n
        for bit, (i, j) in enumerate(ps):
            if (mask >> bit) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        out[mask] = n - gf2.rank(rows)
    return out


def candidate_masks(cfg: SearchConfig, batch: int) -> tuple[np.ndarray, np.ndarray]:
    """(candidate indices, masks of shape (count, n)) for one batch."""
    start = batch * BATCH_SIZE
    stop = min(start + BATCH_SIZE, cfg.total)
    idx = np.arange(start, stop, dtype=np.int64)
    p = len(pairs(cfg.n))
    if cfg.mode == "exhaustive":
        shifts = np.arange(cfg.n, dtype=np.int64) * p
        masks = (idx[:, None] >> shifts[None, :]) & ((1 << p) - 1)
    else:
        rng = np.random.default_rng([cfg.seed, batch])
        masks = rng.integers(0, 1 << p, size=(stop - start, cfg.n), dtype=np.int64)
    return idx, masks


def component_masks(masks: np.ndarray, n: int) -> np.ndarray:
    """Column lam - 1 holds the bilinear-form mask of component lam."""
    comp = np.zeros((masks.shape[0], 1 << n), dtype=np.int64)
    for lam in range(1, 1 << n):
        low = (lam & -lam).bit_length() - 1
        comp[:, lam] = comp[:, lam ^ (1 << low)] ^ masks[:, low]
    return comp[:, 1:]


def vbf_from_mask(n: int, coord_masks) -> VectorialBf:
    ps = pairs(n)
    anfs = []
    for mask in coord_masks:
        terms = [(1 << i) | (1 << j) for bit, (i, j) in enumerate(ps) if (int(mask) >> bit) & 1]
        anfs.append(Anf(n, terms))
    return VectorialBf.from_anfs(anfs)


@lru_cache(maxsize=None)
def _pair_bits(n: int) -> np.ndarray:
    """Entry x is the mask of pairs (i, j) with x_i = x_j = 1."""
    out = np.zeros(1 << n, dtype=np.int64)
    for bit, (i, j) in enumerate(pairs(n)):
        on = ((np.arange(1 << n) >> i) & (np.arange(1 << n) >> j) & 1).astype(bool)
        out[on] |= 1 << bit
    return out


@lru_cache(maxsize=None)
def _hadamard(n: int) -> np.ndarray:
    x = np.arange(1 << n)
    return 1 - 2 * (np.bitwise_count(x[:, None] & x[None, :]) & 1).astype(np.int64)


def batch_luts(masks: np.ndarray, n: int) -> np.ndarray:
    """Lookup tables, shape (count, 2^n), of the pure-quadratic maps given by ``masks``."""
    pb = _pair_bits(n)
    lut = np.zeros((masks.shape[0], 1 << n), dtype=np.int64)
    for i in range(n):
        lut |= (np.bitwise_count(masks[:, i, None] & pb[None, :]) & 1).astype(np.int64) << i
    return lut


def batch_delta(luts: np.ndarray, n: int) -> np.ndarray:
    """Differential uniformity of every row."""
    size = 1 << n
    count = luts.shape[0]
    x = np.arange(size)
    offset = (np.arange(count, dtype=np.int64) * size)[:, None]
    best = np.zeros(count, dtype=np.int64)
    for a in range(1, size):
        d = luts[:, x ^ a] ^ luts
        hist = np.bincount((d + offset).ravel(), minlength=count * size).reshape(count, size)
        np.maximum(best, hist.max(axis=1), out=best)
    return best


def batch_abs_walsh(luts: np.ndarray, n: int) -> np.ndarray:
    """|W| of every component, shape (count, 2^n - 1, 2^n)."""
    lam = np.arange(1, 1 << n)
    bits = np.bitwise_count(luts[:, None, :] & lam[None, :, None]) & 1
    return np.abs((1 - 2 * bits.astype(np.int64)) @ _hadamard(n))


def scan_batch(cfg: SearchConfig, batch: int) -> list[Hit]:
    n = cfg.n
    idx, masks = candidate_masks(cfg, batch)
    comp = component_masks(masks, n)
    dims = radical_dims(n)[comp]
    pure = (comp != 0).all(axis=1)
    m_values = ((1 << dims) - 1).sum(axis=1) << n
    rows = np.flatnonzero(pure & (m_values == apn_m_value(n)))
    if rows.size == 0:
        return []
    masks, idx, m_values = masks[rows], idx[rows], m_values[rows]
    luts = batch_luts(masks, n)
    deltas = batch_delta(luts, n)
    if (deltas != 2).any():
        raise AssertionError("M(F) filter passed a non-APN candidate")
    first = vbf_from_mask(n, masks[0])
    if m_total(first, "algebraic") != m_values[0] or ddt(first).delta != 2:
        raise AssertionError("batch verification disagrees with the reference path")
    walsh = batch_abs_walsh(luts, n)
    if n % 2 == 0:
        bent = (walsh == 1 << (n // 2)).all(axis=2).sum(axis=1)
        ab = [None] * rows.size
    else:
        bent = [None] * rows.size
        ab = ((walsh == 0) | (walsh == 1 << ((n + 1) // 2))).all(axis=(1, 2))
    hits = []
    for r in range(rows.size):
        b = None if bent[r] is None else int(bent[r])
        if cfg.bent_components is not None and b != cfg.bent_components:
            continue
        hits.append(
            Hit(
                int(idx[r]), n, tuple(int(m) for m in masks[r]), tuple(int(v) for v in luts[r]),
                int(m_values[r]), int(deltas[r]), b, None if ab[r] is None else bool(ab[r]),
            )
        )
    return hits


def _scan(args) -> list[Hit]:
    return scan_batch(*args)


def search(cfg: SearchConfig) -> Iterator[Hit]:
    """Yield verified hits in candidate-index order."""
    cfg.validate()
    batches = range((cfg.total + BATCH_SIZE - 1) // BATCH_SIZE)
    if cfg.workers == 1:
        for b in batches:
            yield from scan_batch(cfg, b)
        return
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        for hits in pool.map(_scan, ((cfg, b) for b in batches)):
            yield from hits
