"""Closed forms for splitting functions, convolutional products and cubics.

Functions on disjoint variable blocks, generalised convolutional products
f = (x_1⋯x_m) g + (1 + x_1⋯x_m) h and the recursive weight of cubic ANFs.
Every formula here works from the lower-dimensional pieces; the full
truth table of the assembled function is never built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .core import Anf, anf_to_tt, fourier, weight
from .errors import BoolFnError, DegreeError
from .quadratic import (
    Kind,
    QuadraticClass,
    classify_low_degree,
    low_degree_nl,
    low_degree_weight,
)
from .spectra import nonlinearity, wht


def _compact(f: Anf, mask: int) -> Anf:
    """Restrict f (depending only on the variables in ``mask``) to those variables."""
    positions = [i for i in range(f.n) if (mask >> i) & 1]
    out = set()
    for t in f.terms:
        if t & ~mask:
            raise BoolFnError("function depends on variables outside its block")
        c = 0
        for new, old in enumerate(positions):
            if (t >> old) & 1:
                c |= 1 << new
        out.add(c)
    return Anf(max(len(positions), 1), out)


def restricted_fourier(f: Anf) -> int:
    return fourier(anf_to_tt(f))


def split_fourier(g: Anf, h: Anf) -> int:
    """F(g + h) for g on x_1..x_s and h on the next n - s variables."""
    return restricted_fourier(g) * restricted_fourier(h)


def multi_split_fourier(
    parts: Sequence[Anf], n: int | None = None, blocks: Sequence[Sequence[int]] | None = None
) -> int:
    """F(f_1 + ... + f_t) for parts on pairwise-disjoint variable blocks.

    Each part is given on the full ``n`` variables. ``blocks`` lists the
    (1-based) variables of each part; by default a part's block is the set
    of variables it actually uses.
    """
    if not parts:
        raise BoolFnError("need at least one part")
    n = parts[0].n if n is None else n
    if any(p.n != n for p in parts):
        raise BoolFnError("all parts must be given on the same n variables")
    if blocks is None:
        masks = [p.support() for p in parts]
    else:
        if len(blocks) != len(parts):
            raise BoolFnError("one block per part")
        masks = []
        for p, blk in zip(parts, blocks):
            m = 0
            for i in blk:
                if not 1 <= i <= n:
                    raise BoolFnError(f"variable x{i} not in 1..{n}")
                m |= 1 << (i - 1)
            if p.support() & ~m:
                raise BoolFnError("part uses variables outside its block")
            masks.append(m)
    seen = 0
    for m in masks:
        if seen & m:
            raise BoolFnError("variable blocks overlap")
        seen |= m
    r = 0
    product = 1
    for p, m in zip(parts, masks):
        if m == 0:
            # constant part: a block of size zero contributes its sign only
            product *= -1 if p.terms else 1
            continue
        r += m.bit_count()
        product *= restricted_fourier(_compact(p, m))
    return (1 << (n - r)) * product


def split_weight(g: Anf, h: Anf) -> int:
    """w(g + h) = 2^(n-s) w(g) + 2^s w(h) - 2 w(g) w(h) from the restricted weights."""
    s, m = g.n, h.n
    wg = weight(anf_to_tt(g))
    wh = weight(anf_to_tt(h))
    return (wg << m) + (wh << s) - 2 * wg * wh


def monomial_sum_fourier(m: int, k: int, n: int) -> int:
    if m < 1 or k < 1 or m * k > n:
        raise BoolFnError(f"need m >= 1, k >= 1 and m*k <= n (got m={m}, k={k}, n={n})")
    return (1 << (n - m * k)) * ((1 << m) - 2) ** k


def monomial_sum_weight(m: int, k: int, n: int) -> int:
    """Weight of sum_{i<k} x_{mi+1}⋯x_{mi+m} on n variables."""
    return (1 << (n - 1)) - monomial_sum_fourier(m, k, n) // 2


def monomial_sum_nl(m: int, k: int, n: int) -> int:
    if m <= 1:
        raise DegreeError("nonlinearity formula needs monomials of degree m > 1")
    return (1 << (n - 1)) - monomial_sum_fourier(m, k, n) // 2


def _check_pair(g: Anf, h: Anf, m: int) -> None:
    if g.n != h.n:
        raise BoolFnError(f"g and h must share n: {g.n} vs {h.n}")
    if m < 1:
        raise BoolFnError("pivot block size m must be >= 1")


def genconv_weight(g: Anf, h: Anf, m: int) -> int:
    """(2^m - 1) w(h) + w(g)."""
    _check_pair(g, h, m)
    return ((1 << m) - 1) * weight(anf_to_tt(h)) + weight(anf_to_tt(g))


def genconv_fourier(g: Anf, h: Anf, m: int) -> int:
    _check_pair(g, h, m)
    return ((1 << m) - 1) * restricted_fourier(h) + restricted_fourier(g)


def genconv_balanced(g: Anf, h: Anf, m: int) -> bool:
    """Balanced iff F(h) = -F(g) / (2^m - 1)."""
    _check_pair(g, h, m)
    fg, fh = restricted_fourier(g), restricted_fourier(h)
    return fh * ((1 << m) - 1) == -fg


def genconv_walsh(g: Anf, h: Anf, m: int, a: int, b: int) -> int:
    """W_f(a, b) with a on the m pivot variables and b on the n others."""
    _check_pair(g, h, m)
    if a < 0 or a >> m or b < 0 or b >> g.n:
        raise BoolFnError("alpha = (a, b) outside F_2^m x F_2^n")
    wg = wht(anf_to_tt(g))[b]
    wh = wht(anf_to_tt(h))[b]
    if a == 0:
        return ((1 << m) - 1) * wh + wg
    sign = -1 if a.bit_count() & 1 else 1
    return sign * (wg - wh)


def genconv_nl_bound(g: Anf, h: Anf, m: int) -> int:
    """(2^m - 1) N(h) + N(g); a lower bound, not the exact value."""
    _check_pair(g, h, m)
    return ((1 << m) - 1) * nonlinearity(anf_to_tt(h)) + nonlinearity(anf_to_tt(g))


# --- cubic convolutional products f = x_{n+1} g + (1 + x_{n+1}) h, deg g, h <= 2


class CubicCase(Enum):
    """Rows of the weight table for x_{n+1} g + (1 + x_{n+1}) h.

    q / q̄ name the PLUS / MINUS unbalanced classes of h (parameter k),
    r / r̄ those of g (parameter l). BOTH_CONSTANT lies outside the table:
    such f are affine, never cubic.
    """

    BOTH_BALANCED = "h, g balanced"
    H_BAL_G_ZERO = "h balanced, g=0"
    G_BAL_H_ZERO = "g balanced, h=0"
    H_BAL_G_ONE = "h balanced, g=1"
    G_BAL_H_ONE = "g balanced, h=1"
    H_UNBAL_G_ZERO = "h unbalanced quadratic, g=0"
    H_UNBAL_G_ONE = "h unbalanced quadratic, g=1"
    H_ZERO_G_UNBAL = "h=0, g unbalanced quadratic"
    H_ONE_G_UNBAL = "h=1, g unbalanced quadratic"
    H_UNBAL_G_BAL = "h unbalanced quadratic, g balanced"
    H_BAL_G_UNBAL = "h balanced, g unbalanced quadratic"
    Q_R = "h~q, g~r"
    QBAR_RBAR = "h~q̄, g~r̄"
    QBAR_R = "h~q̄, g~r"
    Q_RBAR = "h~q, g~r̄"
    BOTH_CONSTANT = "h, g constant"


@dataclass(frozen=True)
class CubicWeightCase:
    case: CubicCase
    k: int | None = None  # rank parameter of h when h is an unbalanced quadratic
    l: int | None = None  # rank parameter of g when g is an unbalanced quadratic
    sign_h: int | None = field(default=None, compare=False)
    sign_g: int | None = field(default=None, compare=False)
    h_const: int | None = field(default=None, compare=False)
    g_const: int | None = field(default=None, compare=False)

    @property
    def label(self) -> str:
        return self.case.value


def _role(c: QuadraticClass, f: Anf) -> str:
    if f.is_constant():
        return "one" if f.terms else "zero"
    if c.kind is Kind.BALANCED:
        return "bal"
    return "unbal"


def _pm(kind: Kind) -> int:
    # q (PLUS) takes the minus-sign branch of the table, q̄ the plus-sign one
    return -1 if kind is Kind.PLUS else 1


def classify_cubic_pair(g: Anf, h: Anf) -> CubicWeightCase:
    if g.n != h.n:
        raise BoolFnError(f"g and h must share n: {g.n} vs {h.n}")
    if g.degree > 2 or h.degree > 2:
        raise DegreeError("the cubic weight table needs deg(g), deg(h) <= 2")
    cg, ch = classify_low_degree(g), classify_low_degree(h)
    rg, rh = _role(cg, g), _role(ch, h)
    k = ch.k if rh == "unbal" else None
    l = cg.k if rg == "unbal" else None
    sh = _pm(ch.kind) if rh == "unbal" else None
    sg = _pm(cg.kind) if rg == "unbal" else None
    table = {
        ("bal", "bal"): CubicCase.BOTH_BALANCED,
        ("bal", "zero"): CubicCase.H_BAL_G_ZERO,
        ("zero", "bal"): CubicCase.G_BAL_H_ZERO,
        ("bal", "one"): CubicCase.H_BAL_G_ONE,
        ("one", "bal"): CubicCase.G_BAL_H_ONE,
        ("unbal", "zero"): CubicCase.H_UNBAL_G_ZERO,
        ("unbal", "one"): CubicCase.H_UNBAL_G_ONE,
        ("zero", "unbal"): CubicCase.H_ZERO_G_UNBAL,
        ("one", "unbal"): CubicCase.H_ONE_G_UNBAL,
        ("unbal", "bal"): CubicCase.H_UNBAL_G_BAL,
        ("bal", "unbal"): CubicCase.H_BAL_G_UNBAL,
    }
    if (rh, rg) in table:
        case = table[(rh, rg)]
    elif rh == "unbal" and rg == "unbal":
        case = {
            (Kind.PLUS, Kind.PLUS): CubicCase.Q_R,
            (Kind.MINUS, Kind.MINUS): CubicCase.QBAR_RBAR,
            (Kind.MINUS, Kind.PLUS): CubicCase.QBAR_R,
            (Kind.PLUS, Kind.MINUS): CubicCase.Q_RBAR,
        }[(ch.kind, cg.kind)]
    else:
        case = CubicCase.BOTH_CONSTANT
    hc = (1 if h.terms else 0) if h.is_constant() else None
    gc = (1 if g.terms else 0) if g.is_constant() else None
    return CubicWeightCase(case, k, l, sh, sg, hc, gc)


def cubic_case_weight(c: CubicWeightCase, n: int) -> int:
    """Weight given by the table row, for g, h on n variables."""
    full, half = 1 << n, 1 << (n - 1)
    dk = (1 << (n - c.k - 1)) if c.k is not None else 0
    dl = (1 << (n - c.l - 1)) if c.l is not None else 0
    case = c.case
    if case is CubicCase.BOTH_BALANCED:
        return full
    if case in (CubicCase.H_BAL_G_ZERO, CubicCase.G_BAL_H_ZERO):
        return half
    if case in (CubicCase.H_BAL_G_ONE, CubicCase.G_BAL_H_ONE):
        return full + half
    if case is CubicCase.H_UNBAL_G_ZERO:
        return half + c.sign_h * dk
    if case is CubicCase.H_UNBAL_G_ONE:
        return full + half + c.sign_h * dk
    if case is CubicCase.H_ZERO_G_UNBAL:
        return half + c.sign_g * dl
    if case is CubicCase.H_ONE_G_UNBAL:
        return full + half + c.sign_g * dl
    if case is CubicCase.H_UNBAL_G_BAL:
        return full + c.sign_h * dk
    if case is CubicCase.H_BAL_G_UNBAL:
        return full + c.sign_g * dl
    if case is CubicCase.Q_R:
        return full - dk - dl
    if case is CubicCase.QBAR_RBAR:
        return full + dk + dl
    if case is CubicCase.QBAR_R:
        return full + dk - dl
    if case is CubicCase.Q_RBAR:
        return full - dk + dl
    return full * (c.h_const + c.g_const)


def cubic_conv_weight(g: Anf, h: Anf, n: int | None = None) -> tuple[int, CubicWeightCase]:
    """Weight of x_{n+1} g + (1 + x_{n+1}) h and the table row that produced it."""
    if n is not None and n != g.n:
        raise BoolFnError(f"g is on {g.n} variables, n={n} given")
    c = classify_cubic_pair(g, h)
    return cubic_case_weight(c, g.n), c


def cubic_conv_balanced(g: Anf, h: Anf) -> bool:
    """Both balanced, or both unbalanced with complementary weights.

    Unbalanced here covers quadratics and constants alike (constants are the
    k = 0 case); complementary means same k and opposite orientation.
    """
    if g.n != h.n:
        raise BoolFnError(f"g and h must share n: {g.n} vs {h.n}")
    if g.degree > 2 or h.degree > 2:
        raise DegreeError("needs deg(g), deg(h) <= 2")
    cg, ch = classify_low_degree(g), classify_low_degree(h)
    if cg.kind is Kind.BALANCED and ch.kind is Kind.BALANCED:
        return True
    if Kind.BALANCED in (cg.kind, ch.kind):
        return False
    return cg.k == ch.k and cg.kind is not ch.kind


def cubic_nl_bound(g: Anf, h: Anf) -> int:
    """Lower bound N(h) + N(g) for the m = 1 product with deg(g), deg(h) <= 2.

    Quadratic parts contribute 2^(n-1) - 2^(n-k-1), affine parts nothing.
    """
    if g.n != h.n:
        raise BoolFnError(f"g and h must share n: {g.n} vs {h.n}")
    if g.degree > 2 or h.degree > 2:
        raise DegreeError("needs deg(g), deg(h) <= 2")
    return low_degree_nl(g) + low_degree_nl(h)


# --- recursive weight of cubics


@dataclass(frozen=True)
class TraceNode:
    """One node of the recursion: ``path`` is 'f' then '.g+h' / '.h' per split."""

    path: str
    n: int
    pivot: int
    case: str | None
    weight: int


def _split_on(f: Anf, p: int) -> tuple[Anf, Anf]:
    """f = x_p g + h with g, h compacted onto the other n - 1 variables."""
    bit = 1 << p
    low = bit - 1
    g_terms, h_terms = set(), set()
    for t in f.terms:
        if t & bit:
            t ^= bit
            g_terms.add((t & low) | ((t >> 1) & ~low))
        else:
            h_terms.add((t & low) | ((t >> 1) & ~low))
    n = max(f.n - 1, 1)
    return Anf(n, g_terms), Anf(n, h_terms)


def _pivot(f: Anf) -> int:
    """Lowest variable (0-based) occurring in a degree-3 monomial."""
    cubic = 0
    for t in f.terms:
        if t.bit_count() == 3:
            cubic |= t
    return (cubic & -cubic).bit_length() - 1


def algorithm1_weight(f: Anf, trace: list[TraceNode] | None = None) -> int:
    """Weight of a cubic ANF by recursive decomposition f = x_p g + h.

    While h stays cubic the weight splits as w(g + h) + w(h) on n - 1
    variables; once deg(h) <= 2 the cubic weight table finishes the node.
    Results are memoised per call on the canonical ANF.
    """
    if f.degree != 3:
        raise DegreeError(f"expected a cubic function, got degree {f.degree}")
    memo: dict[Anf, int] = {}

    def rec(u: Anf, path: str) -> int:
        if u.degree <= 2:
            return low_degree_weight(u)
        if u in memo and trace is None:
            return memo[u]
        p = _pivot(u)
        g, h = _split_on(u, p)
        gh = g + h
        if h.degree <= 2:
            w, case = cubic_conv_weight(gh, h)
            if trace is not None:
                trace.append(TraceNode(path, u.n, p + 1, case.label, w))
        else:
            w = rec(gh, path + ".g+h") + rec(h, path + ".h")
            if trace is not None:
                trace.append(TraceNode(path, u.n, p + 1, None, w))
        memo[u] = w
        return w

    return rec(f, "f")
