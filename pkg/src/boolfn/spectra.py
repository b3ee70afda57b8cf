"""Walsh-Hadamard spectra and the properties read off them."""

from __future__ import annotations

import numpy as np

from .core import TruthTable, _check_n
from .errors import BoolFnError, ParityError


class WalshSpectrum:
    """W_f(a) for every a, indexed like truth-table points (int64)."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        _check_n(n)
        arr = np.array(values, dtype=np.int64).ravel()
        if arr.size != 1 << n:
            raise BoolFnError(f"spectrum for n={n} needs {1 << n} values, got {arr.size}")
        arr.setflags(write=False)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "values", arr)

    def __setattr__(self, name, value):
        raise AttributeError("WalshSpectrum is immutable")

    def __getitem__(self, a: int) -> int:
        return int(self.values[a])

    def __len__(self) -> int:
        return self.values.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.n, self.values.tobytes()))

    def tolist(self) -> list[int]:
        return self.values.tolist()

    def abs_multiset(self) -> list[int]:
        return sorted(np.abs(self.values).tolist())


def fwht(signs: np.ndarray) -> np.ndarray:
    """Unnormalised in-place butterfly on a copy of ``signs`` (int64)."""
    v = np.array(signs, dtype=np.int64)
    n = v.size.bit_length() - 1
    for i in range(n):
        blk = v.reshape(-1, 2, 1 << i)
        lo = blk[:, 0, :].copy()
        hi = blk[:, 1, :]
        blk[:, 0, :] += hi
        hi *= -1
        hi += lo
    return v


def wht(t: TruthTable) -> WalshSpectrum:
    """W_f(a) = sum_x (-1)^(f(x) + a·x) in O(n 2^n)."""
    return WalshSpectrum(t.n, fwht(1 - 2 * t.bits.astype(np.int64)))


def linearity(s: WalshSpectrum) -> int:
    return int(np.abs(s.values).max())


def nonlinearity(s: WalshSpectrum | TruthTable) -> int:
    """2^(n-1) - L(f)/2; accepts a table for convenience."""
    if isinstance(s, TruthTable):
        s = wht(s)
    return (1 << (s.n - 1)) - linearity(s) // 2


def is_bent(t: TruthTable) -> bool:
    if t.n % 2:
        raise ParityError(f"bent functions exist only for even n (got n={t.n})")
    return nonlinearity(t) == (1 << (t.n - 1)) - (1 << (t.n // 2 - 1))


def is_semi_bent(t: TruthTable) -> bool:
    if t.n % 2 == 0:
        raise ParityError(f"semi-bent is defined here only for odd n (got n={t.n})")
    return nonlinearity(t) == (1 << (t.n - 1)) - (1 << ((t.n - 1) // 2))
