"""Small GF(2) linear algebra on int bitsets.

A vector of F_2^n is an int whose bit ``i`` holds coordinate ``x_{i+1}``.
A matrix is a list of row bitmasks.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence


def parity(v: int) -> int:
    return v.bit_count() & 1


def dot(a: int, x: int) -> int:
    """Standard inner product sum(a_i x_i) mod 2."""
    return (a & x).bit_count() & 1


def mat_vec(rows: Sequence[int], v: int) -> int:
    """Return M·v where row ``i`` of M gives output bit ``i``."""
    out = 0
    for i, row in enumerate(rows):
        if (row & v).bit_count() & 1:
            out |= 1 << i
    return out


def echelon(vectors: Iterable[int]) -> List[int]:
    """Reduced basis of span(vectors), each with a distinct leading bit."""
    basis: List[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def rank(rows: Iterable[int]) -> int:
    return len(echelon(rows))


def in_span(v: int, basis: Sequence[int]) -> bool:
    """``basis`` must come from :func:`echelon`."""
    for b in basis:
        v = min(v, v ^ b)
    return v == 0


def span(basis: Sequence[int]) -> List[int]:
    """All 2^len(basis) combinations of the basis vectors."""
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return out


def nullspace(rows: Sequence[int], n: int) -> List[int]:
    """Basis of {v in F_2^n : M·v = 0}."""
    pivots: dict[int, int] = {}
    for row in rows:
        for col, r in pivots.items():
            if (row >> col) & 1:
                row ^= r
        if not row:
            continue
        col = (row & -row).bit_length() - 1
        for c in list(pivots):
            if (pivots[c] >> col) & 1:
                pivots[c] ^= row
        pivots[col] = row
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = 1 << free
        for col, r in pivots.items():
            if (r >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def is_invertible(rows: Sequence[int], n: int) -> bool:
    return len(rows) == n and rank(rows) == n
