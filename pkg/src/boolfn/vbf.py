"""Vectorial functions F: F_2^n -> F_2^n: components, differential uniformity,
Walsh power moments and the second-order-derivative parameter M.

Most quantities have two evaluation routes: a generic enumeration valid for
any F, and an algebraic shortcut valid only for degree <= 3. Both are always
available through ``method=`` so they can be checked against each other.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, TypeVar

import numpy as np

from . import gf2
from .core import TruthTable, VectorialBf, _indices, derivative, tt_to_anf, to_point, Point
from .errors import BoolFnError, DegreeError, ParityError, SizeCapError
from .quadratic import linear_space, linear_space_quadratic
from .spectra import fwht, is_bent, is_semi_bent, nonlinearity, wht

DDT_MAX_N = 12
L4_MAX_N = 14
FIRST_MOMENT_MAX_N = 10
SECOND_MOMENT_MAX_N = 7
M_GENERIC_MAX_N = 8
M_ALGEBRAIC_MAX_N = 14
PARTIALLY_BENT_MAX_N = 10

T = TypeVar("T")


def _cap(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise SizeCapError(f"{what} is capped at n={limit} (got n={n})")


def component(F: VectorialBf, lam: Point) -> TruthTable:
    """Table of lambda·F."""
    lam = to_point(lam, F.n)
    if lam == 0:
        raise BoolFnError("component index lambda must be nonzero")
    return TruthTable(F.n, (np.bitwise_count(F.lut() & lam) & 1).astype(np.uint8))


def components(F: VectorialBf) -> list[TruthTable]:
    """All 2^n - 1 components, index ``lam - 1`` holding F_lam."""
    lut = F.lut()
    return [
        TruthTable(F.n, (np.bitwise_count(lut & lam) & 1).astype(np.uint8))
        for lam in range(1, 1 << F.n)
    ]


def _map_components(
    F: VectorialBf, fn: Callable[[TruthTable], T], workers: int = 1
) -> list[T]:
    comps = components(F)
    if workers <= 1:
        return [fn(c) for c in comps]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, comps))


def degree(F: VectorialBf) -> int:
    """max over all nonzero components (not only the coordinates)."""
    _cap(F.n, L4_MAX_N, "degree over all components")
    return max(c.degree() for c in components(F))


def is_permutation(F: VectorialBf) -> bool:
    lut = F.lut()
    seen = np.zeros(lut.size, dtype=bool)
    seen[lut] = True
    return bool(seen.all())


@dataclass(frozen=True)
class DduTable:
    """delta_F(a, b) = #{x : F(x + a) + F(x) = b}; row a = 0 is included but
    ignored by :attr:`delta`."""

    n: int
    table: np.ndarray

    @property
    def delta(self) -> int:
        return int(self.table[1:].max())

    def row_sums(self) -> np.ndarray:
        return self.table.sum(axis=1)


def ddt(F: VectorialBf) -> DduTable:
    _cap(F.n, DDT_MAX_N, "difference distribution table")
    lut = F.lut()
    size = 1 << F.n
    idx = _indices(F.n)
    table = np.empty((size, size), dtype=np.int64)
    for a in range(size):
        table[a] = np.bincount(lut[idx ^ a] ^ lut, minlength=size)
    table.setflags(write=False)
    return DduTable(F.n, table)


def differential_uniformity(F: VectorialBf) -> int:
    return ddt(F).delta


def is_apn_ddt(F: VectorialBf) -> bool:
    return ddt(F).delta == 2


def _fourth_power_sum(values: np.ndarray) -> int:
    """Exact sum of v**4 over int64 values with |v| <= 2^14."""
    sq = values * values
    quad = sq * sq  # <= 2^56 each
    pad = (-quad.size) % 64
    if pad:
        quad = np.concatenate([quad, np.zeros(pad, dtype=np.int64)])
    # 64 terms of at most 2^56 stay below 2^62 before leaving int64
    return sum(int(x) for x in quad.reshape(-1, 64).sum(axis=1))


def power_moment_L4(F: VectorialBf, workers: int = 1) -> int:
    """sum over lambda != 0 and a of W_{F_lambda}(a)^4."""
    _cap(F.n, L4_MAX_N, "fourth power moment")
    return sum(_map_components(F, lambda c: _fourth_power_sum(wht(c).values), workers))


def l4_bound(n: int) -> int:
    return (1 << (3 * n + 1)) * ((1 << n) - 1)


def _autocorrelation(t: TruthTable) -> np.ndarray:
    """F(D_a f) for every a, via the Wiener-Khinchin identity."""
    w = wht(t).values
    return fwht(w * w) >> t.n


def first_order_moment(F: VectorialBf, workers: int = 1) -> int:
    """sum over lambda != 0 and a of F(D_a F_lambda)^2."""
    _cap(F.n, FIRST_MOMENT_MAX_N, "first-order derivative moment")

    def one(c: TruthTable) -> int:
        r = _autocorrelation(c)
        return int((r * r).sum())

    return sum(_map_components(F, one, workers))


def moment_bound(n: int) -> int:
    """2^(2n+1) (2^n - 1): the APN value of both derivative moments."""
    return (1 << (2 * n + 1)) * ((1 << n) - 1)


# --- the parameter M


def _derivative_table_rows(d: np.ndarray, n: int) -> np.ndarray:
    """Matrix whose row b is D_b applied to the table ``d``."""
    idx = _indices(n)
    return d[idx[:, None] ^ idx[None, :]] ^ d[None, :]


def _check_method(method: str, t: TruthTable) -> str:
    if method not in ("auto", "generic", "algebraic"):
        raise BoolFnError(f"unknown method {method!r}")
    if method == "auto":
        method = "algebraic" if t.degree() <= 3 else "generic"
    if method == "generic":
        _cap(t.n, M_GENERIC_MAX_N, "generic second-derivative scan")
    else:
        _cap(t.n, M_ALGEBRAIC_MAX_N, "algebraic second-derivative path")
        if t.degree() > 3:
            raise DegreeError("the algebraic path needs degree <= 3")
    return method


def _m_a_generic(t: TruthTable, a: int) -> int:
    d = derivative(t, a).bits
    rows = _derivative_table_rows(d, t.n)
    zero = int((rows.max(axis=1) == 0).sum())
    one = int((rows.min(axis=1) == 1).sum())
    return zero - one


def _m_a_algebraic(t: TruthTable, a: int) -> int:
    # b -> D_b D_a f(0) is linear on V(D_a f), so the signed sum is 2^dim or 0
    space = linear_space_quadratic(tt_to_anf(derivative(t, a)))
    return 0 if any(space.constants) else 1 << space.dim


def m_a(t: TruthTable, a: Point, method: str = "auto") -> int:
    """M_a(f) = |Z_a(f)| - |U_a(f)|."""
    a = to_point(a, t.n)
    method = _check_method(method, t)
    return _m_a_generic(t, a) if method == "generic" else _m_a_algebraic(t, a)


@dataclass(frozen=True)
class MProfile:
    n: int
    values: dict[int, int]  # a -> M_a(f), a != 0
    total: int


def m_profile(t: TruthTable, method: str = "auto") -> MProfile:
    method = _check_method(method, t)
    fn = _m_a_generic if method == "generic" else _m_a_algebraic
    values = {a: fn(t, a) for a in range(1, 1 << t.n)}
    return MProfile(t.n, values, sum(values.values()))


def m_value(t: TruthTable, method: str = "auto") -> int:
    """M(f) = sum over a != 0 of M_a(f)."""
    return m_profile(t, method).total


def m_total(F: VectorialBf, method: str = "auto", workers: int = 1) -> int:
    """M(F) = sum over lambda != 0 of M(F_lambda)."""
    return sum(_map_components(F, lambda c: m_value(c, method), workers))


def m_total_from_linear_spaces(F: VectorialBf) -> int:
    """2^n sum_lambda (2^dim V(F_lambda) - 1); equals M(F) for quadratic F
    and for cubic F with partially-bent components only."""
    total = 0
    for c in components(F):
        anf = tt_to_anf(c)
        dim = linear_space(anf if anf.degree <= 2 else c).dim
        total += (1 << dim) - 1
    return total << F.n


def apn_m_value(n: int) -> int:
    return (1 << n) * ((1 << n) - 1)


def is_apn_via_m(F: VectorialBf, method: str = "auto") -> bool:
    d = degree(F)
    if d not in (2, 3):
        raise DegreeError(f"the M(F) criterion needs deg(F) in {{2, 3}}, got {d}")
    return m_total(F, method) == apn_m_value(F.n)


def apn_m_witness(F: VectorialBf, method: str = "auto") -> int | None:
    """Some lambda with M(F_lambda) <= 2^n, or None."""
    for lam, c in enumerate(components(F), start=1):
        if m_value(c, method) <= 1 << F.n:
            return lam
    return None


def is_partially_bent(t: TruthTable) -> bool:
    """Every derivative is constant or balanced."""
    _cap(t.n, PARTIALLY_BENT_MAX_N, "partially-bent test")
    half = 1 << (t.n - 1)
    idx = _indices(t.n)
    for a in range(1, 1 << t.n):
        w = int(np.count_nonzero(t.bits[idx ^ a] ^ t.bits))
        if w not in (0, half, 2 * half):
            return False
    return True


def bent_component_count(F: VectorialBf) -> int:
    if F.n % 2:
        raise ParityError(f"bent components need even n (got n={F.n})")
    return sum(is_bent(c) for c in components(F))


def is_ab(F: VectorialBf) -> bool:
    if F.n % 2 == 0:
        raise ParityError(f"almost bent is defined for odd n (got n={F.n})")
    return all(is_semi_bent(c) for c in components(F))


def second_order_moment(F: VectorialBf, method: str = "auto") -> int:
    """sum over lambda != 0 and all b, c of F(D_b D_c F_lambda)."""
    if method not in ("auto", "generic", "algebraic"):
        raise BoolFnError(f"unknown method {method!r}")
    if method == "auto":
        method = "algebraic" if F.n > SECOND_MOMENT_MAX_N or degree(F) <= 3 else "generic"
    n = F.n
    if method == "algebraic":
        if degree(F) > 3:
            raise DegreeError("the algebraic path needs degree <= 3")
        return (1 << (2 * n)) * ((1 << n) - 1) + (m_total(F, "algebraic") << n)
    _cap(n, SECOND_MOMENT_MAX_N, "generic second-order moment")
    full = 1 << (2 * n)
    total = 0
    for comp in components(F):
        for c in range(1 << n):
            rows = _derivative_table_rows(derivative(comp, c).bits, n)
            total += full - 2 * int(np.count_nonzero(rows))
    return total


@dataclass(frozen=True)
class ZaStructure:
    """Z_a(f) as a basis, and U_a(f) = coset_rep + Z_a(f) when nonempty."""

    n: int
    a: int
    basis: tuple[int, ...]
    coset_rep: int | None

    def z_elements(self) -> list[int]:
        return gf2.span(self.basis)

    def u_elements(self) -> list[int]:
        if self.coset_rep is None:
            return []
        return [self.coset_rep ^ z for z in self.z_elements()]


def z_a_structure(t: TruthTable, a: Point, method: str = "auto") -> ZaStructure:
    a = to_point(a, t.n)
    method = _check_method(method, t)
    if method == "generic":
        rows = _derivative_table_rows(derivative(t, a).bits, t.n)
        zs = np.flatnonzero(rows.max(axis=1) == 0).tolist()
        us = np.flatnonzero(rows.min(axis=1) == 1).tolist()
        return ZaStructure(t.n, a, tuple(gf2.echelon(zs)), us[0] if us else None)
    space = linear_space_quadratic(tt_to_anf(derivative(t, a)))
    rep = None
    basis = []
    for v, c in zip(space.basis, space.constants):
        if not c:
            basis.append(v)
        elif rep is None:
            rep = v
        else:
            basis.append(v ^ rep)
    return ZaStructure(t.n, a, tuple(gf2.echelon(basis)), rep)
