"""Boolean function representations and the operations every other module builds on.

Points of F_2^n are ints: bit ``i`` of a point is the coordinate ``x_{i+1}``,
so truth-table index ``x`` is the point itself. Monomials of an ANF use the
same encoding (bit ``i`` set means ``x_{i+1}`` divides the monomial; the
empty mask is the constant term).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from . import gf2
from .errors import BoolFnError, SingularMatrixError, SizeCapError

MAX_N = 24

Point = int | Sequence[int]


def to_point(a: Point, n: int) -> int:
    """Accept an int or a 0/1 sequence ``(a_1, ..., a_n)``."""
    if isinstance(a, (int, np.integer)):
        a = int(a)
        if a < 0 or a >> n:
            raise BoolFnError(f"point {a} outside F_2^{n}")
        return a
    bits = list(a)
    if len(bits) != n or any(b not in (0, 1) for b in bits):
        raise BoolFnError(f"point {bits!r} is not a 0/1 vector of length {n}")
    return sum(b << i for i, b in enumerate(bits))


def point_bits(a: int, n: int) -> tuple[int, ...]:
    return tuple((a >> i) & 1 for i in range(n))


def _check_n(n: int, lo: int = 1) -> None:
    if not isinstance(n, (int, np.integer)) or n < lo:
        raise BoolFnError(f"variable count must be an integer >= {lo}, got {n!r}")
    if n > MAX_N:
        raise SizeCapError(f"n={n} exceeds the cap of {MAX_N} variables")


def _indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


class TruthTable:
    """Evaluation table of f: F_2^n -> F_2, immutable."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits):
        _check_n(n)
        arr = np.array(bits, dtype=np.uint8).ravel()
        if arr.size != 1 << n:
            raise BoolFnError(f"truth table for n={n} needs {1 << n} entries, got {arr.size}")
        if arr.size and arr.max() > 1:
            raise BoolFnError("truth table entries must be 0 or 1")
        arr.setflags(write=False)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "bits", arr)

    def __setattr__(self, name, value):
        raise AttributeError("TruthTable is immutable")

    @classmethod
    def constant(cls, n: int, c: int) -> TruthTable:
        return cls(n, np.full(1 << n, c & 1, dtype=np.uint8))

    @classmethod
    def variable(cls, i: int, n: int) -> TruthTable:
        """Table of the coordinate function x_i (1-based)."""
        if not 1 <= i <= n:
            raise BoolFnError(f"variable x{i} not in 1..{n}")
        return cls(n, ((_indices(n) >> (i - 1)) & 1).astype(np.uint8))

    @classmethod
    def linear(cls, a: Point, n: int) -> TruthTable:
        """Table of x -> a·x."""
        a = to_point(a, n)
        return cls(n, (np.bitwise_count(_indices(n) & a) & 1).astype(np.uint8))

    def __len__(self) -> int:
        return 1 << self.n

    def __getitem__(self, x: Point) -> int:
        return int(self.bits[to_point(x, self.n)])

    def __iter__(self) -> Iterator[int]:
        return (int(b) for b in self.bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.n, self.bits.tobytes()))

    def _same_n(self, other: TruthTable) -> None:
        if other.n != self.n:
            raise BoolFnError(f"variable counts differ: {self.n} vs {other.n}")

    def __xor__(self, other):
        if isinstance(other, (int, np.integer)):
            return TruthTable(self.n, self.bits ^ (int(other) & 1))
        self._same_n(other)
        return TruthTable(self.n, self.bits ^ other.bits)

    __add__ = __xor__
    __radd__ = __xor__
    __rxor__ = __xor__

    def __and__(self, other: TruthTable) -> TruthTable:
        self._same_n(other)
        return TruthTable(self.n, self.bits & other.bits)

    __mul__ = __and__

    def __invert__(self) -> TruthTable:
        return TruthTable(self.n, self.bits ^ 1)

    def __repr__(self) -> str:
        if self.n <= 6:
            return f"TruthTable(n={self.n}, bits={''.join(map(str, self.bits))})"
        return f"TruthTable(n={self.n}, weight={weight(self)})"

    def packed(self) -> np.ndarray:
        """Bits packed LSB-first into uint64 words (64 points per word)."""
        raw = np.packbits(self.bits, bitorder="little")
        pad = (-raw.size) % 8
        if pad:
            raw = np.concatenate([raw, np.zeros(pad, dtype=np.uint8)])
        return raw.view("<u8")

    def is_constant(self) -> bool:
        return bool(self.bits.min() == self.bits.max())

    def degree(self) -> int:
        return tt_to_anf(self).degree


class Anf:
    """Algebraic normal form: a set of monomials over F_2.

    ``terms`` holds monomial bitmasks; :meth:`monomials` gives the same set as
    tuples of 1-based variable indices.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable[int] = ()):
        _check_n(n)
        ts = frozenset(int(t) for t in terms)
        for t in ts:
            if t < 0 or t >> n:
                raise BoolFnError(f"monomial mask {t:#x} uses variables beyond x{n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "terms", ts)

    def __setattr__(self, name, value):
        raise AttributeError("Anf is immutable")

    @classmethod
    def from_monomials(cls, n: int, monomials: Iterable[Iterable[int]]) -> Anf:
        """Build from index collections; repeated monomials cancel mod 2."""
        acc: set[int] = set()
        for mono in monomials:
            mask = 0
            for i in mono:
                if not 1 <= i <= n:
                    raise BoolFnError(f"variable x{i} not in 1..{n}")
                mask |= 1 << (i - 1)
            acc ^= {mask}
        return cls(n, acc)

    @classmethod
    def constant(cls, n: int, c: int) -> Anf:
        return cls(n, {0} if c & 1 else ())

    @classmethod
    def variable(cls, i: int, n: int) -> Anf:
        if not 1 <= i <= n:
            raise BoolFnError(f"variable x{i} not in 1..{n}")
        return cls(n, {1 << (i - 1)})

    def monomials(self) -> list[tuple[int, ...]]:
        """Sorted by decreasing degree, then lexicographically."""
        out = [tuple(i + 1 for i in range(self.n) if (t >> i) & 1) for t in self.terms]
        return sorted(out, key=lambda m: (-len(m), m))

    @property
    def degree(self) -> int:
        return max((t.bit_count() for t in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return self.terms <= {0}

    def support(self) -> int:
        """Mask of the variables that occur in some monomial."""
        m = 0
        for t in self.terms:
            m |= t
        return m

    def part(self, d: int) -> Anf:
        """Homogeneous component of degree ``d``."""
        return Anf(self.n, (t for t in self.terms if t.bit_count() == d))

    def __call__(self, x: Point) -> int:
        x = to_point(x, self.n)
        return sum(1 for t in self.terms if t & x == t) & 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Anf):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def _coerce(self, other) -> Anf:
        if isinstance(other, (int, np.integer)):
            return Anf.constant(self.n, int(other))
        if other.n != self.n:
            raise BoolFnError(f"variable counts differ: {self.n} vs {other.n}")
        return other

    def __add__(self, other) -> Anf:
        other = self._coerce(other)
        return Anf(self.n, self.terms ^ other.terms)

    __radd__ = __add__
    __xor__ = __add__

    def __mul__(self, other) -> Anf:
        other = self._coerce(other)
        acc: set[int] = set()
        for s in self.terms:
            for t in other.terms:
                acc ^= {s | t}
        return Anf(self.n, acc)

    __rmul__ = __mul__

    def extend(self, n: int, shift: int = 0) -> Anf:
        """Same function viewed on ``n`` variables, indices moved up by ``shift``."""
        return Anf(n, (t << shift for t in self.terms))

    def __repr__(self) -> str:
        from .textio import format_anf

        return f"Anf(n={self.n}, {format_anf(self)!r})"


def _moebius(arr: np.ndarray, n: int) -> np.ndarray:
    """In-place binary Möbius transform over F_2 (its own inverse)."""
    for i in range(n):
        v = arr.reshape(-1, 2, 1 << i)
        v[:, 1, :] ^= v[:, 0, :]
    return arr


def anf_to_tt(f: Anf) -> TruthTable:
    coef = np.zeros(1 << f.n, dtype=np.uint8)
    if f.terms:
        coef[np.fromiter(f.terms, dtype=np.int64, count=len(f.terms))] = 1
    return TruthTable(f.n, _moebius(coef, f.n))


def tt_to_anf(t: TruthTable) -> Anf:
    coef = _moebius(t.bits.copy(), t.n)
    return Anf(t.n, np.flatnonzero(coef).tolist())


def weight(t: TruthTable) -> int:
    return int(np.count_nonzero(t.bits))


def is_balanced(t: TruthTable) -> bool:
    return weight(t) == 1 << (t.n - 1)


def fourier(t: TruthTable) -> int:
    """Walsh value at zero, 2^n - 2 w(f)."""
    return (1 << t.n) - 2 * weight(t)


def derivative(t: TruthTable, a: Point) -> TruthTable:
    """D_a f(x) = f(x + a) + f(x)."""
    a = to_point(a, t.n)
    return TruthTable(t.n, t.bits[_indices(t.n) ^ a] ^ t.bits)


def second_derivative(t: TruthTable, a: Point, b: Point) -> TruthTable:
    a = to_point(a, t.n)
    b = to_point(b, t.n)
    idx = _indices(t.n)
    bits = t.bits
    return TruthTable(t.n, bits ^ bits[idx ^ b] ^ bits[idx ^ a] ^ bits[idx ^ a ^ b])


class AffineMap:
    """x -> M x + w over F_2^n, with M invertible.

    ``matrix`` rows may be 0/1 sequences or int bitmasks; row ``i`` produces
    output coordinate ``i + 1``.
    """

    __slots__ = ("n", "rows", "translation")

    def __init__(self, matrix, translation: Point = 0):
        rows = []
        for r in matrix:
            if isinstance(r, (int, np.integer)):
                rows.append(int(r))
            else:
                rows.append(to_point(list(r), len(matrix)))
        n = len(rows)
        _check_n(n)
        if any(r < 0 or r >> n for r in rows):
            raise BoolFnError("matrix row wider than n")
        if not gf2.is_invertible(rows, n):
            raise SingularMatrixError("affine map matrix is not invertible over F_2")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "translation", to_point(translation, n))

    def __setattr__(self, name, value):
        raise AttributeError("AffineMap is immutable")

    @classmethod
    def identity(cls, n: int) -> AffineMap:
        return cls([1 << i for i in range(n)])

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> AffineMap:
        while True:
            rows = [int(rng.integers(0, 1 << n)) for _ in range(n)]
            if gf2.is_invertible(rows, n):
                return cls(rows, int(rng.integers(0, 1 << n)))

    def linear_part(self, a: Point) -> int:
        """M·a, without the translation."""
        return gf2.mat_vec(self.rows, to_point(a, self.n))

    def __call__(self, x: Point) -> int:
        return self.linear_part(x) ^ self.translation

    def images(self) -> np.ndarray:
        """Array whose entry ``x`` is phi(x)."""
        idx = _indices(self.n)
        out = np.full(idx.shape, self.translation, dtype=np.int64)
        for i, row in enumerate(self.rows):
            out ^= (np.bitwise_count(idx & row).astype(np.int64) & 1) << i
        return out

    def matrix(self) -> np.ndarray:
        return np.array([point_bits(r, self.n) for r in self.rows], dtype=np.uint8)


def apply_affine(t: TruthTable, phi: AffineMap) -> TruthTable:
    """Table of f∘phi."""
    if phi.n != t.n:
        raise BoolFnError(f"affine map acts on F_2^{phi.n}, table has n={t.n}")
    return TruthTable(t.n, t.bits[phi.images()])


def direct_sum(g: Anf, h: Anf) -> Anf:
    """g(x_1..x_s) + h(x_{s+1}..x_{s+m}) on s + m variables."""
    n = g.n + h.n
    return g.extend(n) + h.extend(n, shift=g.n)


def conv_product(g: Anf, h: Anf, m: int) -> Anf:
    """(x_1⋯x_m) g' + (1 + x_1⋯x_m) h' with g', h' on variables m+1..m+n."""
    if m < 1:
        raise BoolFnError("pivot block size m must be >= 1")
    if g.n != h.n:
        raise BoolFnError(f"g and h must share n: {g.n} vs {h.n}")
    total = g.n + m
    pivot = Anf(total, {(1 << m) - 1})
    gs = g.extend(total, shift=m)
    hs = h.extend(total, shift=m)
    return pivot * gs + hs + pivot * hs


class VectorialBf:
    """F = (f_1, ..., f_n): F_2^n -> F_2^n given by its coordinate tables.

    Output bit ``i`` of ``F(x)`` is ``f_{i+1}(x)``.
    """

    __slots__ = ("n", "coordinates")

    def __init__(self, coordinates: Sequence[TruthTable]):
        coords = tuple(coordinates)
        if not coords:
            raise BoolFnError("a vectorial function needs at least one coordinate")
        n = len(coords)
        for c in coords:
            if c.n != n:
                raise BoolFnError(
                    f"coordinate on {c.n} variables; expected n={n} to match the coordinate count"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coordinates", coords)

    def __setattr__(self, name, value):
        raise AttributeError("VectorialBf is immutable")

    @classmethod
    def from_anfs(cls, anfs: Sequence[Anf]) -> VectorialBf:
        return cls([anf_to_tt(f) for f in anfs])

    @classmethod
    def from_lut(cls, values: Sequence[int]) -> VectorialBf:
        lut = np.asarray(values, dtype=np.int64)
        n = int(lut.size).bit_length() - 1
        if lut.size != 1 << n:
            raise BoolFnError("lookup table length must be a power of two")
        if lut.size and (lut.min() < 0 or lut.max() >> n):
            raise BoolFnError(f"lookup table values must lie in [0, 2^{n})")
        return cls([TruthTable(n, (lut >> i) & 1) for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> VectorialBf:
        return cls([TruthTable.variable(i, n) for i in range(1, n + 1)])

    def lut(self) -> np.ndarray:
        out = np.zeros(1 << self.n, dtype=np.int64)
        for i, c in enumerate(self.coordinates):
            out |= c.bits.astype(np.int64) << i
        return out

    def anfs(self) -> list[Anf]:
        return [tt_to_anf(c) for c in self.coordinates]

    def __call__(self, x: Point) -> int:
        x = to_point(x, self.n)
        return sum(c.bits[x] << i for i, c in enumerate(self.coordinates))

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorialBf):
            return NotImplemented
        return self.coordinates == other.coordinates

    def __hash__(self) -> int:
        return hash(self.coordinates)

    def __repr__(self) -> str:
        return f"VectorialBf(n={self.n}, lut={self.lut().tolist() if self.n <= 5 else '...'})"
