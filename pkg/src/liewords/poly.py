"""Sparse noncommutative polynomials over the integers.

Terms map words (strings) to nonzero arbitrary-precision integers.  All
operations are pure; a Poly is never mutated after construction.  The
canonical term order (ascending length, then lexicographic) makes printing
and hashing byte-deterministic.

Text grammar::

    poly := '0' | ['-'] term (('+'|'-') term)*
    term := [integer '*'] word
    word := letter+ | '1'          # the token 1 denotes the empty word
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass

__all__ = [
    "Poly",
    "TrailingDecomposition",
    "poly_combine",
    "concat_product",
    "shuffle",
    "scalar_product",
    "reverse_poly",
    "right_residual",
    "left_residual",
    "trailing_decomposition",
    "coefficient_gcd",
    "rank",
    "parse_poly",
]


def _term_key(w: str) -> tuple[int, str]:
    return (len(w), w)


class Poly:
    """An integer linear combination of words."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[str, int] | None = None):
        # terms is adopted, not copied; callers hand over fresh dicts
        self.terms: dict[str, int] = terms if terms is not None else {}
        self._hash: int | None = None

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def word(cls, w: str, coeff: int = 1) -> "Poly":
        return cls({w: coeff} if coeff else {})

    @classmethod
    def one(cls) -> "Poly":
        return cls.word("")

    @classmethod
    def from_terms(cls, items) -> "Poly":
        acc: dict[str, int] = {}
        for w, c in items:
            c = acc.get(w, 0) + c
            if c:
                acc[w] = c
            else:
                acc.pop(w, None)
        return cls(acc)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, w: str) -> int:
        return self.terms.get(w, 0)

    def support(self) -> list[str]:
        return sorted(self.terms, key=_term_key)

    def __add__(self, other: "Poly") -> "Poly":
        return poly_combine(1, self, 1, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return poly_combine(1, self, -1, other)

    def __neg__(self) -> "Poly":
        return Poly({w: -c for w, c in self.terms.items()})

    def __rmul__(self, k: int) -> "Poly":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return Poly.zero()
        return Poly({w: k * c for w, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return self.__rmul__(other)
        if isinstance(other, Poly):
            return concat_product(self, other)
        return NotImplemented

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, w in enumerate(self.support()):
            c = self.terms[w]
            token = f"{abs(c)}*{w or '1'}"
            if i == 0:
                parts.append(token if c > 0 else f"-{token}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {token}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_combine(c1: int, p: Poly, c2: int, q: Poly) -> Poly:
    """Termwise c1*p + c2*q with zero terms dropped."""
    acc = {w: c1 * c for w, c in p.terms.items()} if c1 else {}
    if c2:
        for w, c in q.terms.items():
            s = acc.get(w, 0) + c2 * c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
    return Poly(acc)


def concat_product(p: Poly, q: Poly) -> Poly:
    acc: dict[str, int] = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            w = u + v
            s = acc.get(w, 0) + cu * cv
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
    return Poly(acc)


@functools.lru_cache(maxsize=None)
def _shuffle_words(u: str, v: str) -> dict[str, int]:
    # cached; callers must treat the returned dict as read-only
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    acc: dict[str, int] = {}
    for w, c in _shuffle_words(u[1:], v).items():
        w = u[0] + w
        acc[w] = acc.get(w, 0) + c
    for w, c in _shuffle_words(u, v[1:]).items():
        w = v[0] + w
        acc[w] = acc.get(w, 0) + c
    return acc


def shuffle(p: Poly, q: Poly) -> Poly:
    acc: dict[str, int] = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            cuv = cu * cv
            for w, m in _shuffle_words(u, v).items():
                s = acc.get(w, 0) + cuv * m
                if s:
                    acc[w] = s
                else:
                    acc.pop(w, None)
    return Poly(acc)


def shuffle_words(u: str, v: str) -> Poly:
    return Poly(dict(_shuffle_words(u, v)))


def scalar_product(p: Poly, q: Poly) -> int:
    if len(q.terms) < len(p.terms):
        p, q = q, p
    return sum(c * q.terms.get(w, 0) for w, c in p.terms.items())


def reverse_poly(p: Poly) -> Poly:
    return Poly({w[::-1]: c for w, c in p.terms.items()})


def right_residual(p: Poly, q: Poly) -> Poly:
    """P |> Q, defined by (P |> Q, w) = (P, Qw)."""
    acc: dict[str, int] = {}
    for u, cu in q.terms.items():
        n = len(u)
        for x, cx in p.terms.items():
            if x.startswith(u):
                w = x[n:]
                s = acc.get(w, 0) + cu * cx
                if s:
                    acc[w] = s
                else:
                    acc.pop(w, None)
    return Poly(acc)


def left_residual(q: Poly, p: Poly) -> Poly:
    """Q <| P, defined by (Q <| P, w) = (P, wQ)."""
    acc: dict[str, int] = {}
    for u, cu in q.terms.items():
        n = len(u)
        for x, cx in p.terms.items():
            if n == 0 or x.endswith(u):
                w = x[: len(x) - n]
                s = acc.get(w, 0) + cu * cx
                if s:
                    acc[w] = s
                else:
                    acc.pop(w, None)
    return Poly(acc)


@dataclass(frozen=True)
class TrailingDecomposition:
    """P = sum_i blocks[i] * pivot * exponent_letter**i, with d/e the
    minimal and maximal occupied indices."""

    pivot: str
    exponent_letter: str
    blocks: dict[int, Poly]
    d: int
    e: int

    def recombine(self) -> Poly:
        acc = Poly.zero()
        for i, block in self.blocks.items():
            acc = acc + concat_product(
                block, Poly.word(self.pivot + self.exponent_letter * i)
            )
        return acc


def trailing_decomposition(p: Poly, pivot: str, exponent_letter: str) -> TrailingDecomposition:
    """Group the terms of p by the trailing exponent-letter run after the
    last pivot letter.  Every support word must end with pivot followed by
    a (possibly empty) run of the exponent letter."""
    if not p:
        raise ValueError("cannot decompose the zero polynomial")
    if pivot == exponent_letter:
        raise ValueError("pivot and exponent letter must differ")
    blocks: dict[int, dict[str, int]] = {}
    for w, c in p.terms.items():
        i = 0
        while i < len(w) and w[len(w) - 1 - i] == exponent_letter:
            i += 1
        if i == len(w) or w[len(w) - 1 - i] != pivot:
            raise ValueError(
                f"support word {w!r} does not end with {pivot!r} "
                f"followed by a run of {exponent_letter!r}"
            )
        v = w[: len(w) - 1 - i]
        blocks.setdefault(i, {})[v] = c
    polys = {i: Poly(d) for i, d in blocks.items()}
    return TrailingDecomposition(
        pivot, exponent_letter, polys, min(polys), max(polys)
    )


def coefficient_gcd(p: Poly) -> int:
    return math.gcd(*p.terms.values()) if p.terms else 0


def rank(polys: list[Poly]) -> int:
    """Exact rank over the rationals of the span, by fraction-free
    (Bareiss) elimination; all intermediates stay integral."""
    columns: dict[str, int] = {}
    rows = []
    for p in polys:
        if not p:
            continue
        row: dict[int, int] = {}
        for w, c in p.terms.items():
            j = columns.setdefault(w, len(columns))
            row[j] = c
        rows.append(row)
    if not rows:
        return 0
    ncols = len(columns)
    m = [[row.get(j, 0) for j in range(ncols)] for row in rows]
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if not any(m[i][col:]):
                continue
            for j in range(col + 1, ncols):
                m[i][j] = (m[i][j] * m[r][col] - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = m[r][col]
        r += 1
        if r == len(m):
            break
    return r


_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<int>\d+)|(?P<star>\*)|(?P<word>[a-z]+))")


def parse_poly(text: str) -> Poly:
    """Parse the polynomial text grammar; raises ValueError on bad input.

    The bare token 0 denotes the zero polynomial, matching its printed
    form."""
    if text.strip() == "0":
        return Poly.zero()
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ValueError(f"bad character in polynomial at {text[pos:]!r}")
            break
        pos = m.end()
        for kind in ("sign", "int", "star", "word"):
            if m.group(kind) is not None:
                tokens.append((kind, m.group(kind)))
                break
    if not tokens:
        raise ValueError("empty polynomial text")

    acc: dict[str, int] = {}
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i][0] == "sign":
            if not first and tokens[i][1] not in "+-":
                raise ValueError("expected + or -")
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ValueError(f"expected + or - before {tokens[i][1]!r}")
        first = False
        if i >= len(tokens):
            raise ValueError("dangling sign in polynomial")
        coeff = 1
        if tokens[i][0] == "int":
            coeff = int(tokens[i][1])
            i += 1
            if i < len(tokens) and tokens[i][0] == "star":
                i += 1
                if i >= len(tokens) or tokens[i][0] not in ("word", "int"):
                    raise ValueError("expected a word after '*'")
                word = _parse_word(tokens[i])
                i += 1
            else:
                # a bare integer term: only the token 1 (empty word) or a
                # scalar multiple of it
                word = ""
                if coeff == 1:
                    pass
                else:
                    raise ValueError(
                        "integer coefficient must be followed by '*' and a word"
                    )
        elif tokens[i][0] == "word":
            word = tokens[i][1]
            i += 1
        else:
            raise ValueError(f"unexpected token {tokens[i][1]!r}")
        c = acc.get(word, 0) + sign * coeff
        if c:
            acc[word] = c
        else:
            acc.pop(word, None)
    return Poly(acc)


def _parse_word(token: tuple[str, str]) -> str:
    kind, value = token
    if kind == "word":
        return value
    if kind == "int" and value == "1":
        return ""
    raise ValueError(f"bad word token {value!r}")
