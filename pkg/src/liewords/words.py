"""Words over a finite ordered alphabet and combinatorics-on-words primitives.

Words are plain Python strings of ASCII lowercase letters; the empty string
is the empty word.  Lexicographic comparison of such strings coincides with
the standard two-clause definition (proper prefix, or first difference).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple

__all__ = [
    "Alphabet",
    "Factorization",
    "reverse",
    "is_palindrome",
    "multi_degree",
    "primitive_root",
    "is_lyndon",
    "lyndon_words",
    "standard_factorization",
    "factorizations",
    "apply_literal_morphism",
]

_LOWER = set(string.ascii_lowercase)


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet of distinct ASCII lowercase letters."""

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("alphabet must have at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"alphabet letters must be distinct: {self.letters}")
        for x in self.letters:
            if len(x) != 1 or x not in _LOWER:
                raise ValueError(f"alphabet letters must be ASCII lowercase: {x!r}")

    @classmethod
    def of(cls, letters: str) -> "Alphabet":
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __contains__(self, letter: str) -> bool:
        return letter in self.letters

    def index(self, letter: str) -> int:
        return self.letters.index(letter)

    def check_word(self, w: str) -> str:
        for x in w:
            if x not in self.letters:
                raise ValueError(f"letter {x!r} not in alphabet {self.letters}")
        return w


class Factorization(NamedTuple):
    """A triple (s, u, t) with s*u*t equal to the original word."""

    s: str
    u: str
    t: str


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def multi_degree(w: str, alphabet: Alphabet) -> tuple[int, ...]:
    """Per-letter occurrence counts of ``w``, in alphabet order."""
    alphabet.check_word(w)
    return tuple(w.count(x) for x in alphabet)


def primitive_root(w: str) -> tuple[str, int]:
    """The unique primitive word u and maximal n with w = u**n."""
    n = len(w)
    if n == 0:
        raise ValueError("the empty word has no primitive root")
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p], n // p
    raise AssertionError("unreachable")  # p = n always matches


def is_lyndon(w: str) -> bool:
    """True iff w is strictly smaller than all its proper nonempty suffixes."""
    if not w:
        raise ValueError("the empty word is not eligible for the Lyndon test")
    return all(w < w[i:] for i in range(1, len(w)))


def lyndon_words(alphabet: Alphabet, n: int) -> list[str]:
    """All Lyndon words of length exactly n, in increasing lexicographic order.

    Duval-style successor iteration; correctness is pinned to the is_lyndon
    filter in the test suite, so the generation scheme is replaceable.
    """
    if n < 1:
        raise ValueError("word length must be positive")
    letters = alphabet.letters
    q = len(letters)
    out: list[str] = []
    w = [0]
    while True:
        if len(w) == n:
            out.append("".join(letters[i] for i in w))
        w = [w[i % len(w)] for i in range(n)]
        while w and w[-1] == q - 1:
            w.pop()
        if not w:
            break
        w[-1] += 1
    return out


def standard_factorization(w: str) -> tuple[str, str]:
    """The standard factorization w = l*m of a Lyndon word of length >= 2.

    m is the longest proper suffix of w that is Lyndon; l is then Lyndon
    as well, with l < m.
    """
    if len(w) < 2:
        raise ValueError("standard factorization needs length >= 2")
    if not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable")  # the last letter is Lyndon


def factorizations(
    w: str,
    r: int | None = None,
    alpha: tuple[int, ...] | None = None,
    alphabet: Alphabet | None = None,
) -> list[Factorization]:
    """All triples (s, u, t) with w = sut and u matching the selector.

    The selector is either a factor length r or a multi-degree alpha over
    the given alphabet.  Triples come in increasing order of |s|.
    """
    if (r is None) == (alpha is None):
        raise ValueError("exactly one of r and alpha must be given")
    if alpha is not None:
        if alphabet is None:
            raise ValueError("a multi-degree selector needs an alphabet")
        r = sum(alpha)
    assert r is not None
    if not 1 <= r <= len(w):
        raise ValueError(f"factor length {r} out of range for |w| = {len(w)}")
    out = []
    for i in range(len(w) - r + 1):
        u = w[i : i + r]
        if alpha is not None and multi_degree(u, alphabet) != tuple(alpha):
            continue
        out.append(Factorization(w[:i], u, w[i + r :]))
    return out


def apply_literal_morphism(w: str, phi: Mapping[str, str]) -> str:
    """Letterwise image of w under a letter-to-letter map."""
    try:
        return "".join(phi[x] for x in w)
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} is not mapped") from None
