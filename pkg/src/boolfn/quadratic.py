"""Quadratic functions: bilinear form, linear space, canonical class, weight and nonlinearity."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import gf2
from .core import Anf, TruthTable, _indices, anf_to_tt
from .errors import AffineFunctionError, BoolFnError, NotQuadraticError, SizeCapError

GENERIC_SCAN_MAX_N = 12


class Kind(str, Enum):
    BALANCED = "balanced"
    PLUS = "unbalanced_plus"  # ~ x1x2 + ... + x_{2k-1}x_{2k}, F(f) = +2^(n-k)
    MINUS = "unbalanced_minus"  # the complement, F(f) = -2^(n-k)


@dataclass(frozen=True)
class QuadraticClass:
    """Affine class of a function of degree at most 2.

    ``k`` is half the rank of the bilinear form and ``dim_v = n - 2k``.
    Affine functions get ``k = 0``; constants are PLUS (0) or MINUS (1).
    """

    k: int
    kind: Kind
    dim_v: int

    @property
    def n(self) -> int:
        return self.dim_v + 2 * self.k

    @property
    def fourier(self) -> int:
        if self.kind is Kind.BALANCED:
            return 0
        value = 1 << (self.n - self.k)
        return value if self.kind is Kind.PLUS else -value


@dataclass(frozen=True)
class LinearSpaceBasis:
    """Basis of V(f) with the constant value of D_a f for each basis vector."""

    n: int
    basis: tuple[int, ...]
    constants: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def elements(self) -> list[int]:
        return gf2.span(self.basis)

    def constant_at(self, a: int) -> int:
        """Value of the constant D_a f for ``a`` in V(f).

        a -> D_a f is additive on V(f), so it is fixed by the basis values.
        """
        reduced: list[tuple[int, int]] = []
        for v, c in zip(self.basis, self.constants):
            for w, cw in reduced:
                if v ^ w < v:
                    v, c = v ^ w, c ^ cw
            if v:
                reduced.append((v, c))
                reduced.sort(reverse=True)
        c = 0
        for w, cw in reduced:
            if a ^ w < a:
                a, c = a ^ w, c ^ cw
        if a:
            raise BoolFnError("point is not a linear structure")
        return c


def _require_deg2(f: Anf) -> None:
    if f.degree > 2:
        raise NotQuadraticError(f"degree {f.degree} > 2")


def bilinear_matrix(f: Anf) -> list[int]:
    """Rows of the symmetric zero-diagonal matrix B with B[i][j] = coeff of x_i x_j."""
    _require_deg2(f)
    rows = [0] * f.n
    for t in f.terms:
        if t.bit_count() == 2:
            i = (t & -t).bit_length() - 1
            j = t.bit_length() - 1
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return rows


def bilinear_rank(f: Anf) -> tuple[int, list[int]]:
    """Half-rank k of the bilinear form and a basis of its radical."""
    rows = bilinear_matrix(f)
    r = gf2.rank(rows)
    return r // 2, gf2.nullspace(rows, f.n)


def linear_space_quadratic(f: Anf) -> LinearSpaceBasis:
    """V(f) for deg(f) <= 2: the radical, with D_a f = f(a) + f(0)."""
    _, radical = bilinear_rank(f)
    f0 = f(0)
    return LinearSpaceBasis(f.n, tuple(radical), tuple(f(a) ^ f0 for a in radical))


def linear_space(t: TruthTable | Anf) -> LinearSpaceBasis:
    """V(f) = {a : D_a f constant}.

    A table is scanned over every shift (n <= 12); an ANF of degree <= 2
    takes the radical shortcut, higher-degree ANFs fall back to the scan.
    """
    if isinstance(t, Anf):
        if t.degree <= 2:
            return linear_space_quadratic(t)
        t = anf_to_tt(t)
    if t.n > GENERIC_SCAN_MAX_N:
        raise SizeCapError(f"generic linear-space scan is capped at n={GENERIC_SCAN_MAX_N}")
    idx = _indices(t.n)
    bits = t.bits
    structures = []
    for a in range(1, 1 << t.n):
        d = bits[idx ^ a] ^ bits
        if d.min() == d.max():
            structures.append(a)
    basis = gf2.echelon(structures)
    return LinearSpaceBasis(t.n, tuple(basis), tuple(int(bits[a] ^ bits[0]) for a in basis))


def _dickson(f: Anf) -> tuple[int, Anf]:
    """Reduce f ~ y1y2 + ... + y_{2k-1}y_{2k} + rest, rest affine in the other variables.

    Each step picks x_i x_j, writes f = x_i x_j + x_i A + x_j B + C and uses
    (x_i + B)(x_j + A) = x_i x_j + x_i A + x_j B + AB, so f is affinely
    equivalent to a new pair plus AB + C, which avoids x_i and x_j.
    """
    k = 0
    n = f.n
    while True:
        quad = [t for t in f.terms if t.bit_count() == 2]
        if not quad:
            return k, f
        pair = min(quad)
        xi = pair & -pair
        xj = pair ^ xi
        a_terms, b_terms, c_terms = set(), set(), set()
        for t in f.terms:
            if t == pair:
                continue
            if t & xi:
                a_terms.add(t ^ xi)
            elif t & xj:
                b_terms.add(t ^ xj)
            else:
                c_terms.add(t)
        f = Anf(n, a_terms) * Anf(n, b_terms) + Anf(n, c_terms)
        k += 1


def classify_low_degree(f: Anf) -> QuadraticClass:
    """Class of any function of degree <= 2 (affine and constant inputs included)."""
    k, radical = bilinear_rank(f)
    dim_v = f.n - 2 * k
    f0 = f(0)
    if any(f(a) ^ f0 for a in radical):
        return QuadraticClass(k, Kind.BALANCED, dim_v)
    k_dickson, rest = _dickson(f)
    if k_dickson != k or rest.degree > 0:
        raise AssertionError("canonical reduction disagrees with the bilinear rank")
    c = 1 if 0 in rest.terms else 0
    return QuadraticClass(k, Kind.MINUS if c else Kind.PLUS, dim_v)


def classify_quadratic(f: Anf) -> QuadraticClass:
    if f.degree > 2:
        raise NotQuadraticError(f"degree {f.degree} > 2; not quadratic")
    if f.degree < 2:
        raise AffineFunctionError("affine function; classification needs degree exactly 2")
    return classify_low_degree(f)


def quadratic_weight(c: QuadraticClass, n: int | None = None) -> int:
    n = c.n if n is None else n
    if c.kind is Kind.BALANCED:
        return 1 << (n - 1)
    delta = 1 << (n - c.k - 1)
    half = 1 << (n - 1)
    return half - delta if c.kind is Kind.PLUS else half + delta


def quadratic_nl(c: QuadraticClass, n: int | None = None) -> int:
    n = c.n if n is None else n
    return (1 << (n - 1)) - (1 << (n - c.k - 1))


def quadratics_affine_equivalent(g: Anf, h: Anf) -> bool:
    if g.n != h.n:
        raise BoolFnError(f"variable counts differ: {g.n} vs {h.n}")
    cg, ch = classify_quadratic(g), classify_quadratic(h)
    return (
        quadratic_weight(cg) == quadratic_weight(ch) and quadratic_nl(cg) == quadratic_nl(ch)
    )


def low_degree_weight(f: Anf) -> int:
    """Weight of a degree <= 2 function without touching its truth table."""
    return quadratic_weight(classify_low_degree(f), f.n)


def low_degree_nl(f: Anf) -> int:
    return quadratic_nl(classify_low_degree(f), f.n)


__all__ = [
    "Kind",
    "QuadraticClass",
    "LinearSpaceBasis",
    "bilinear_matrix",
    "bilinear_rank",
    "linear_space",
    "linear_space_quadratic",
    "classify_low_degree",
    "classify_quadratic",
    "quadratic_weight",
    "quadratic_nl",
    "quadratics_affine_equivalent",
    "low_degree_weight",
    "low_degree_nl",
]
