"""Left-normed bracketing, its adjoint, and the twin/anti-twin classifier.

The adjoint evaluator comes in four independent flavours: the end-trimming
recursion (the canonical one, memoized), the scalar-product oracle against
the bracketing, the two-sum Pascal-style recursion for words of the shape
a^k b u b a^l, and the factor-shuffle expansion.  Their exhaustive
agreement is part of the test suite.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .poly import (
    Poly,
    coefficient_gcd,
    concat_product,
    poly_combine,
    shuffle_words,
    trailing_decomposition,
)
from .words import (
    Alphabet,
    factorizations,
    is_lyndon,
    is_palindrome,
    reverse,
    standard_factorization,
)

__all__ = [
    "BracketTree",
    "Verdict",
    "VerdictKind",
    "ell",
    "ell_of_poly",
    "lyndon_bracket",
    "lambda_rec",
    "lambda_of_poly",
    "lambda_oracle",
    "lambda_pascal",
    "lambda_closed_single_b",
    "lambda_factor_expansion",
    "gamma",
    "in_support",
    "e_d_invariants",
    "classify_pair",
    "lambda_proportional",
]


@dataclass(frozen=True)
class BracketTree:
    """A binary bracketing; either a single letter or a pair of subtrees."""

    letter: str | None = None
    left: Optional["BracketTree"] = None
    right: Optional["BracketTree"] = None

    @classmethod
    def leaf(cls, letter: str) -> "BracketTree":
        return cls(letter=letter)

    @classmethod
    def node(cls, left: "BracketTree", right: "BracketTree") -> "BracketTree":
        return cls(left=left, right=right)

    def frontier(self) -> str:
        if self.letter is not None:
            return self.letter
        return self.left.frontier() + self.right.frontier()

    def expansion(self) -> Poly:
        if self.letter is not None:
            return Poly.word(self.letter)
        p = self.left.expansion()
        q = self.right.expansion()
        return concat_product(p, q) - concat_product(q, p)

    def __str__(self) -> str:
        if self.letter is not None:
            return self.letter
        return f"[{self.left},{self.right}]"


@functools.lru_cache(maxsize=None)
def ell(w: str) -> Poly:
    """Left-normed Lie bracketing: ell(ua) = ell(u)*a - a*ell(u)."""
    if not w:
        return Poly.zero()
    if len(w) == 1:
        return Poly.word(w)
    p = ell(w[:-1])
    a = Poly.word(w[-1])
    return concat_product(p, a) - concat_product(a, p)


def ell_of_poly(p: Poly) -> Poly:
    acc = Poly.zero()
    for w, c in p.terms.items():
        acc = poly_combine(1, acc, c, ell(w))
    return acc


def lyndon_bracket(w: str) -> tuple[BracketTree, Poly]:
    """Bracketing tree of a Lyndon word by recursive standard factorization,
    with its commutator expansion."""
    if not w or not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word")
    tree = _bracket_tree(w)
    return tree, tree.expansion()


def _bracket_tree(w: str) -> BracketTree:
    if len(w) == 1:
        return BracketTree.leaf(w)
    l, m = standard_factorization(w)
    return BracketTree.node(_bracket_tree(l), _bracket_tree(m))


@functools.lru_cache(maxsize=None)
def lambda_rec(w: str) -> Poly:
    """Adjoint of the left-normed bracketing, via the end-trimming
    recursion lambda(xuy) = lambda(xu)*y - lambda(uy)*x."""
    if not w:
        return Poly.zero()
    if len(w) == 1:
        return Poly.word(w)
    left = concat_product(lambda_rec(w[:-1]), Poly.word(w[-1]))
    right = concat_product(lambda_rec(w[1:]), Poly.word(w[0]))
    return left - right


def lambda_of_poly(p: Poly) -> Poly:
    acc = Poly.zero()
    for w, c in p.terms.items():
        acc = poly_combine(1, acc, c, lambda_rec(w))
    return acc


def _rearrangements(counts: dict[str, int], length: int) -> Iterator[str]:
    if length == 0:
        yield ""
        return
    for x in sorted(counts):
        if counts[x]:
            counts[x] -= 1
            for rest in _rearrangements(counts, length - 1):
                yield x + rest
            counts[x] += 1


def lambda_oracle(w: str) -> Poly:
    """Adjointness oracle: the coefficient of v in lambda(w) is the
    coefficient of w in ell(v), taken over the distinct rearrangements
    of w (other words pair to zero by multi-homogeneity)."""
    counts = {x: w.count(x) for x in set(w)}
    acc: dict[str, int] = {}
    for word in _rearrangements(counts, len(w)):
        c = ell(word).coeff(w)
        if c:
            acc[word] = c
    return Poly(acc)


def lambda_closed_single_b(k: int, l: int) -> Poly:
    """lambda(a^k b a^l) in closed form:
    (-1)^k C(k+l, k) * (b a^(k+l) - a b a^(k+l-1))."""
    if k < 0 or l < 0 or k + l < 1:
        raise ValueError("need non-negative k, l with k + l >= 1")
    sign = -1 if k % 2 else 1
    c = sign * math.comb(k + l, k)
    return Poly({"b" + "a" * (k + l): c, "ab" + "a" * (k + l - 1): -c})


def lambda_pascal(k: int, u: str, l: int) -> Poly:
    """lambda(a^k b u b a^l) by the two-sum recursion

    (-1)^(k+1) * sum_i C(k+i, i) lambda(u b a^(l-i)) b a^(k+i)
      + sum_j (-1)^j C(l+j, j) lambda(a^(k-j) b u) b a^(l+j).
    """
    if k < 0 or l < 0:
        raise ValueError("exponents must be non-negative")
    acc = Poly.zero()
    sign = 1 if (k + 1) % 2 == 0 else -1
    for i in range(l + 1):
        block = lambda_rec(u + "b" + "a" * (l - i))
        tail = Poly.word("b" + "a" * (k + i))
        acc = poly_combine(
            1, acc, sign * math.comb(k + i, i), concat_product(block, tail)
        )
    for j in range(k + 1):
        block = lambda_rec("a" * (k - j) + "b" + u)
        tail = Poly.word("b" + "a" * (l + j))
        coeff = (-1 if j % 2 else 1) * math.comb(l + j, j)
        acc = poly_combine(1, acc, coeff, concat_product(block, tail))
    return acc


def lambda_factor_expansion(
    w: str,
    r: int | None = None,
    alpha: tuple[int, ...] | None = None,
    alphabet: Alphabet | None = None,
) -> Poly:
    """Sum of lambda(u) * (-1)^|s| * (reverse(s) sh t) over factorizations
    w = sut matching the selector.  With a length selector this equals
    lambda(w); with a multi-degree selector it is the partial sum only."""
    acc = Poly.zero()
    for s, u, t in factorizations(w, r=r, alpha=alpha, alphabet=alphabet):
        sign = -1 if len(s) % 2 else 1
        term = concat_product(lambda_rec(u), shuffle_words(reverse(s), t))
        acc = poly_combine(1, acc, sign, term)
    return acc


def gamma(w: str) -> int:
    """gcd of the coefficients of lambda(w); 0 when lambda(w) = 0."""
    return coefficient_gcd(lambda_rec(w))


def in_support(w: str, method: str = "lambda") -> bool:
    """Support membership, via lambda or via the closed description
    (not a letter power with exponent > 1, not an even-length palindrome)."""
    if method == "lambda":
        return bool(lambda_rec(w))
    if method == "closed":
        if not w:
            return False
        if len(w) > 1 and len(set(w)) == 1:
            return False
        if len(w) % 2 == 0 and is_palindrome(w):
            return False
        return True
    raise ValueError(f"unknown method {method!r}")


def e_d_invariants(w: str, pivot: str = "b", exponent_letter: str | None = None) -> tuple[int, int]:
    """(d, e) of lambda(w): minimal and maximal trailing exponent-letter
    run after the last pivot, over the support of lambda(w)."""
    p = lambda_rec(w)
    if not p:
        raise ValueError(f"lambda({w!r}) = 0; d and e are undefined")
    if exponent_letter is None:
        others = sorted(set(w) - {pivot})
        if len(others) != 1:
            raise ValueError(
                "cannot infer the exponent letter; pass it explicitly"
            )
        exponent_letter = others[0]
    dec = trailing_decomposition(p, pivot, exponent_letter)
    return dec.d, dec.e


class VerdictKind(Enum):
    TWIN = "twin"
    ANTI_TWIN = "anti-twin"
    NEITHER = "neither"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    u_zero: bool = False
    v_zero: bool = False
    witness: str | None = None


def classify_pair(u: str, v: str) -> Verdict:
    """Twin / anti-twin classification of a word pair through lambda."""
    pu = lambda_rec(u)
    pv = lambda_rec(v)
    if not pu or not pv:
        return Verdict(VerdictKind.DEGENERATE, u_zero=not pu, v_zero=not pv)
    if pu == pv:
        return Verdict(VerdictKind.TWIN)
    if pu == -pv:
        return Verdict(VerdictKind.ANTI_TWIN)
    diff = pu - pv
    summ = pu + pv
    both = [w for w in diff.support() if w in summ.terms]
    witness = both[0] if both else diff.support()[0]
    return Verdict(VerdictKind.NEITHER, witness=witness)


def lambda_proportional(u: str, v: str) -> tuple[int, int] | None:
    """Coprime (eta, eta') with eta > 0 and eta*lambda(u) = eta'*lambda(v),
    if the two polynomials are rationally proportional."""
    pu = lambda_rec(u)
    pv = lambda_rec(v)
    if not pu or not pv:
        raise ValueError("lambda of both words must be nonzero")
    if set(pu.terms) != set(pv.terms):
        return None
    w0 = pu.support()[0]
    a0 = pu.terms[w0]
    b0 = pv.terms[w0]
    # eta * a = eta' * b for every coefficient pair, so (eta, eta') is
    # proportional to (b0, a0)
    g = math.gcd(a0, b0)
    eta, eta_p = b0 // g, a0 // g
    if eta < 0:
        eta, eta_p = -eta, -eta_p
    if poly_combine(eta, pu, -eta_p, pv):
        return None
    return eta, eta_p
