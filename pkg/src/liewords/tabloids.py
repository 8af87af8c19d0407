"""Dynkin element, its adjoint, and the tabloid picture of words.

A permutation is a tuple of images (sigma(1), ..., sigma(n)); a tabloid is
an ordered set partition of {1, ..., n}, stored as a tuple of sorted
position tuples.  Viewing each length-n monomial over n distinct letters
as an image sequence turns the bracketing of x_1 ... x_n and its adjoint
into group-ring elements.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from itertools import permutations as iter_permutations

from .poly import Poly
from .lie import ell, lambda_rec
from .words import Alphabet, multi_degree

__all__ = [
    "Permutation",
    "Tabloid",
    "GroupRingElem",
    "TabloidSum",
    "dynkin_ln",
    "lambda_n",
    "tau_n",
    "word_to_tabloid",
    "tabloid_to_word",
    "act_word",
    "act_tabloid",
    "apply_permutation",
    "mu_tabloids",
    "verify_dynkin_tabloid",
    "TabloidReport",
]

Permutation = tuple[int, ...]
Tabloid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GroupRingElem:
    """An integer combination of permutations of [n]."""

    n: int
    terms: dict[Permutation, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRingElem)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))


@dataclass(frozen=True)
class TabloidSum:
    """An integer combination of tabloids."""

    terms: dict[Tabloid, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TabloidSum) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "TabloidSum":
        return TabloidSum({t: -c for t, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, t in enumerate(sorted(self.terms)):
            c = self.terms[t]
            token = f"{abs(c)}*{format_tabloid(t)}"
            if i == 0:
                parts.append(token if c > 0 else f"-{token}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {token}")
        return " ".join(parts)


def format_tabloid(t: Tabloid) -> str:
    return "(" + ",".join("{" + ",".join(map(str, block)) + "}" for block in t) + ")"


def _distinct_letters(n: int) -> str:
    if n < 1:
        raise ValueError("n must be positive")
    if n > len(string.ascii_lowercase):
        raise ValueError("n too large for distinct-letter expansion")
    return string.ascii_lowercase[:n]


def _word_poly_to_group_ring(p: Poly, n: int) -> GroupRingElem:
    terms = {}
    for w, c in p.terms.items():
        images = tuple(ord(x) - ord("a") + 1 for x in w)
        terms[images] = c
    return GroupRingElem(n, terms)


def dynkin_ln(n: int) -> GroupRingElem:
    """The bracketing of x_1 ... x_n read as permutation image sequences."""
    return _word_poly_to_group_ring(ell(_distinct_letters(n)), n)


def lambda_n(n: int) -> GroupRingElem:
    """The adjoint of the bracketing of x_1 ... x_n, as a group-ring element."""
    return _word_poly_to_group_ring(lambda_rec(_distinct_letters(n)), n)


def tau_n(n: int) -> Permutation:
    """The order-reversing involution i -> n - i + 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(range(n, 0, -1))


def word_to_tabloid(w: str, alphabet: Alphabet) -> Tabloid:
    """Block k holds the positions (1-based) where the k-th letter occurs."""
    alphabet.check_word(w)
    return tuple(
        tuple(i + 1 for i, x in enumerate(w) if x == letter)
        for letter in alphabet
    )


def tabloid_to_word(t: Tabloid, alphabet: Alphabet) -> str:
    n = sum(len(block) for block in t)
    out = [""] * n
    for letter, block in zip(alphabet, t):
        for pos in block:
            out[pos - 1] = letter
    return "".join(out)


def act_word(w: str, g: GroupRingElem) -> Poly:
    """Right permutation action: position i of w*sigma holds w[sigma(i)]."""
    if len(w) != g.n:
        raise ValueError(f"word length {len(w)} does not match n = {g.n}")
    acc: dict[str, int] = {}
    for sigma, c in g.terms.items():
        word = "".join(w[i - 1] for i in sigma)
        s = acc.get(word, 0) + c
        if s:
            acc[word] = s
        else:
            acc.pop(word, None)
    return Poly(acc)


def apply_permutation(sigma: Permutation, t: Tabloid) -> Tabloid:
    """Left natural action: each position p becomes sigma(p)."""
    return tuple(tuple(sorted(sigma[p - 1] for p in block)) for block in t)


def act_tabloid(g: GroupRingElem, t: Tabloid) -> TabloidSum:
    if sum(len(block) for block in t) != g.n:
        raise ValueError("tabloid size does not match n")
    acc: dict[Tabloid, int] = {}
    for sigma, c in g.terms.items():
        image = apply_permutation(sigma, t)
        s = acc.get(image, 0) + c
        if s:
            acc[image] = s
        else:
            acc.pop(image, None)
    return TabloidSum(acc)


def mu_tabloids(mu: tuple[int, ...]) -> list[Tabloid]:
    """All tabloids with block sizes mu, via the words of multi-degree mu."""
    n = sum(mu)
    letters = _distinct_letters(max(len(mu), 1))
    alphabet = Alphabet.of(letters[: len(mu)])
    base = "".join(letter * count for letter, count in zip(alphabet, mu))
    words = sorted(set("".join(p) for p in iter_permutations(base))) if n else [""]
    return [word_to_tabloid(w, alphabet) for w in words]


@dataclass(frozen=True)
class TabloidReport:
    mu: tuple[int, ...]
    nonzero_tabloids: int
    ok: bool
    counterexamples: tuple[str, ...] = ()


def verify_dynkin_tabloid(mu: tuple[int, ...]) -> TabloidReport:
    """Exhaustively check the equal/opposite image classification of
    mu-tabloids under the Dynkin element: images coincide only for a
    tabloid and (n odd) its order reversal, and are opposite only for
    (n even) the order reversal."""
    n = sum(mu)
    ln = dynkin_ln(n)
    tau = tau_n(n)
    images: dict[Tabloid, TabloidSum] = {}
    groups: dict[TabloidSum, set[Tabloid]] = {}
    for t in mu_tabloids(mu):
        image = act_tabloid(ln, t)
        if image:
            images[t] = image
            groups.setdefault(image, set()).add(t)
    bad: list[str] = []
    for t, image in sorted(images.items()):
        mirrored = apply_permutation(tau, t)
        want_equal = {t} | ({mirrored} if n % 2 == 1 else set())
        if groups[image] != want_equal:
            bad.append(f"equal-class({format_tabloid(t)}) is not as classified")
        want_opposite = {mirrored} if n % 2 == 0 else set()
        if groups.get(-image, set()) != want_opposite:
            bad.append(f"opposite-class({format_tabloid(t)}) is not as classified")
    return TabloidReport(tuple(mu), len(images), not bad, tuple(bad))
