"""Text formats: ANF expressions, hex truth tables and vBf files.

ANF grammar (whitespace insignificant)::

    expr := term ('+' term)*
    term := '0' | '1' | var ('*' var)*
    var  := 'x' DECIMAL            (1-based)

Hex truth tables are ``n=<k>:<hex>`` with the 2^k bits packed LSB-first into
bytes. A vBf file holds ``n=<k>`` on its first line and one ANF per
coordinate on each of the next k lines.
"""

from __future__ import annotations

import re

import numpy as np

from .core import MAX_N, Anf, TruthTable, VectorialBf, anf_to_tt
from .errors import ParseError, SizeCapError

_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<idx>\d+))|(?P<const>[01])|(?P<op>[+*]))")


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + 1
            while col <= len(text) and text[col - 1].isspace():
                col += 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
        start = m.end() - len(m.group(0).lstrip()) + 1
        if m.group("var"):
            yield "var", int(m.group("idx")), start
        elif m.group("const"):
            yield "const", int(m.group("const")), start
        else:
            yield m.group("op"), None, start
        pos = m.end()
    yield "end", None, len(text) + 1


def parse_anf(text: str, n: int | None = None) -> Anf:
    """Parse an ANF expression; ``n`` defaults to the largest index used."""
    monomials: list[set[int]] = []
    toks = _tokens(text)
    kind, val, col = next(toks)
    max_idx = 0
    while True:
        # term
        if kind == "const":
            if val:
                monomials.append(set())
            kind, val, col = next(toks)
        elif kind == "var":
            mono = set()
            while True:
                if val == 0:
                    raise ParseError("variable indices start at 1", column=col)
                if n is not None and val > n:
                    raise ParseError(f"variable x{val} exceeds n={n}", column=col)
                max_idx = max(max_idx, val)
                mono.add(val)
                kind, val, col = next(toks)
                if kind != "*":
                    break
                kind, val, col = next(toks)
                if kind != "var":
                    raise ParseError("expected a variable after '*'", column=col)
            monomials.append(mono)
        else:
            what = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected a term, found {what}", column=col)
        if kind == "end":
            break
        if kind != "+":
            raise ParseError(f"expected '+' or end of input, found {kind!r}", column=col)
        kind, val, col = next(toks)
    return Anf.from_monomials(n if n is not None else max(max_idx, 1), monomials)


def format_anf(f: Anf) -> str:
    """Canonical text: decreasing degree, lexicographic within a degree, '1' last."""
    parts = []
    for mono in f.monomials():
        parts.append("*".join(f"x{i}" for i in mono) if mono else "1")
    return " + ".join(parts) if parts else "0"


def tt_to_hex(t: TruthTable) -> str:
    packed = np.packbits(t.bits, bitorder="little")
    return f"n={t.n}:{packed.tobytes().hex()}"


_HEX = re.compile(r"\s*n\s*=\s*(\d+)\s*:\s*([0-9a-fA-F]*)\s*$")


def tt_from_hex(text: str) -> TruthTable:
    m = _HEX.match(text)
    if not m:
        raise ParseError("truth table must look like 'n=<k>:<hex>'", column=1)
    n = int(m.group(1))
    digits = m.group(2)
    if n < 1:
        raise ParseError("n must be >= 1", column=text.index(m.group(1)) + 1)
    if n > MAX_N:
        raise SizeCapError(f"n={n} exceeds the cap of {MAX_N} variables")
    nbytes = max(1, (1 << n) // 8)
    if len(digits) != 2 * nbytes:
        raise ParseError(
            f"n={n} needs {2 * nbytes} hex digits, got {len(digits)}", column=m.start(2) + 1
        )
    raw = np.frombuffer(bytes.fromhex(digits), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")
    if bits[1 << n :].any():
        raise ParseError("padding bits beyond 2^n must be zero", column=m.start(2) + 1)
    return TruthTable(n, bits[: 1 << n])


def parse_function(text: str, n: int | None = None) -> TruthTable:
    """Hex table if the text starts with ``n=``, ANF expression otherwise."""
    if text.lstrip().startswith("n="):
        t = tt_from_hex(text)
        if n is not None and t.n != n:
            raise ParseError(f"table declares n={t.n} but n={n} was requested", column=1)
        return t
    return anf_to_tt(parse_anf(text, n))


_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*$")


def parse_vbf(text: str) -> VectorialBf:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty vBf file", line=1)
    m = _HEADER.match(lines[0])
    if not m:
        raise ParseError("first line must be 'n=<k>'", line=1, column=1)
    n = int(m.group(1))
    if n < 1:
        raise ParseError("n must be >= 1", line=1)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} coordinate lines, found {len(body)}", line=len(lines))
    anfs = []
    for i, ln in enumerate(body, start=2):
        try:
            anfs.append(parse_anf(ln, n))
        except ParseError as exc:
            raise ParseError(exc.reason, column=exc.column, line=i) from None
    return VectorialBf.from_anfs(anfs)


def format_vbf(F: VectorialBf) -> str:
    return "\n".join([f"n={F.n}"] + [format_anf(f) for f in F.anfs()]) + "\n"
