"""Exhaustive verification suites over bounded word lengths.

Each suite enumerates a finite family, checks an identity or a
classification exactly, and returns a SuiteReport.  Suites are pure and
deterministic; the heavy ones (support, theorem2) can fan word ranges out
to worker processes, with results merged in input order so the report is
independent of the worker count.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import lie, tabloids
from .poly import (
    Poly,
    concat_product,
    left_residual,
    poly_combine,
    rank,
    reverse_poly,
    right_residual,
    shuffle,
    shuffle_words,
)
from .words import Alphabet, is_lyndon, is_palindrome, lyndon_words, reverse

__all__ = ["SuiteReport", "run_suite", "SUITES", "LENGTH_CAP", "TABLOID_CAP"]

LENGTH_CAP = 16
TABLOID_CAP = 9


@dataclass
class SuiteReport:
    suite: str
    params: dict[str, object]
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    millis: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def _all_words(letters: str, n: int) -> list[str]:
    return ["".join(p) for p in itertools.product(letters, repeat=n)]


def _words_up_to(letters: str, max_len: int) -> list[str]:
    out: list[str] = []
    for n in range(1, max_len + 1):
        out.extend(_all_words(letters, n))
    return out


def _chunks(items: list, parts: int) -> list[list]:
    size = max(1, -(-len(items) // parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _map_chunks(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 64:
        return [fn(chunk) for chunk in _chunks(items, 1)]
    chunks = _chunks(items, jobs * 4)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, chunks))


# -- support ---------------------------------------------------------------

def _support_chunk(words: list[str]) -> list[str]:
    return [
        w
        for w in words
        if lie.in_support(w, "lambda") != lie.in_support(w, "closed")
    ]


def run_support(alphabet: str = "ab", max_len: int = 12, jobs: int = 1) -> SuiteReport:
    report = SuiteReport("support", {"alphabet": alphabet, "max_len": max_len})
    words = _words_up_to(alphabet, max_len)
    for bad in _map_chunks(_support_chunk, words, jobs):
        report.failures.extend(bad)
    report.cases = len(words)
    return report


# -- theorem2 --------------------------------------------------------------

def _lambda_key(w: str) -> tuple[tuple[str, int], ...]:
    return tuple(sorted(lie.lambda_rec(w).terms.items()))


def _lambda_key_chunk(words: list[str]) -> list[tuple[tuple[str, int], ...]]:
    return [_lambda_key(w) for w in words]


def run_theorem2(alphabet: str = "ab", max_len: int = 10, jobs: int = 1) -> SuiteReport:
    """Exhaustive twin / anti-twin classification: within each length,
    equal adjoint images occur only for a word and (odd length) its
    reversal; opposite images only for (even length) the reversal."""
    report = SuiteReport("theorem2", {"alphabet": alphabet, "max_len": max_len})
    for n in range(1, max_len + 1):
        words = _all_words(alphabet, n)
        keys: list = []
        for part in _map_chunks(_lambda_key_chunk, words, jobs):
            keys.extend(part)
        groups: dict[tuple, set[str]] = {}
        for w, key in zip(words, keys):
            if key:
                groups.setdefault(key, set()).add(w)
        key_of = {w: k for w, k in zip(words, keys) if k}
        for w, key in key_of.items():
            report.cases += 1
            rev = reverse(w)
            want_equal = {w} | ({rev} if n % 2 == 1 else set())
            if groups[key] != want_equal:
                report.failures.append(f"twin-class({w}) != {sorted(want_equal)}")
            neg_key = tuple(sorted((x, -c) for x, c in key))
            want_opposite = {rev} if n % 2 == 0 else set()
            if groups.get(neg_key, set()) != want_opposite:
                report.failures.append(
                    f"anti-twin-class({w}) != {sorted(want_opposite)}"
                )
    return report


# -- adjointness -----------------------------------------------------------

def run_adjoint(alphabet: str = "ab", max_len: int = 7, jobs: int = 1) -> SuiteReport:
    """(lambda(u), v) = (ell(v), u) for all equal-length word pairs."""
    report = SuiteReport("adjoint", {"alphabet": alphabet, "max_len": max_len})
    for n in range(1, max_len + 1):
        words = _all_words(alphabet, n)
        lam = {u: lie.lambda_rec(u) for u in words}
        el = {v: lie.ell(v) for v in words}
        for u in words:
            for v in words:
                report.cases += 1
                if lam[u].coeff(v) != el[v].coeff(u):
                    report.failures.append(f"adjoint({u},{v})")
    return report


# -- reversal --------------------------------------------------------------

def run_reversal(alphabet: str = "ab", max_len: int = 10, jobs: int = 1) -> SuiteReport:
    """lambda(reverse(w)) = (-1)^(|w|+1) lambda(w)."""
    report = SuiteReport("reversal", {"alphabet": alphabet, "max_len": max_len})
    for w in _words_up_to(alphabet, max_len):
        report.cases += 1
        sign = 1 if len(w) % 2 == 1 else -1
        if lie.lambda_rec(reverse(w)) != sign * lie.lambda_rec(w):
            report.failures.append(f"reversal-sign({w})")
    return report


# -- shuffle kernel (Ree) --------------------------------------------------

def run_shuffle_kernel(alphabet: str = "ab", max_len: int = 8, jobs: int = 1) -> SuiteReport:
    """lambda vanishes on every proper shuffle of total length <= max_len."""
    report = SuiteReport("shuffle-kernel", {"alphabet": alphabet, "max_len": max_len})
    for total in range(2, max_len + 1):
        for m in range(1, total):
            for u in _all_words(alphabet, m):
                for v in _all_words(alphabet, total - m):
                    report.cases += 1
                    if lie.lambda_of_poly(shuffle_words(u, v)):
                        report.failures.append(f"ree({u},{v})")
    return report


# -- algebraic laws --------------------------------------------------------

def run_algebra(alphabet: str = "ab", max_len: int = 9, jobs: int = 1) -> SuiteReport:
    """Shuffle commutativity/associativity, the reversal laws for both
    products, and the residual action laws."""
    report = SuiteReport("algebra", {"alphabet": alphabet, "max_len": max_len})
    # commutativity and reversal laws on pairs
    for total in range(2, max_len + 1):
        for m in range(1, total):
            for u in _all_words(alphabet, m):
                for v in _all_words(alphabet, total - m):
                    report.cases += 1
                    pu, pv = Poly.word(u), Poly.word(v)
                    sh = shuffle(pu, pv)
                    if sh != shuffle(pv, pu):
                        report.failures.append(f"shuffle-comm({u},{v})")
                    if reverse_poly(sh) != shuffle_words(reverse(u), reverse(v)):
                        report.failures.append(f"shuffle-reversal({u},{v})")
                    if reverse_poly(concat_product(pu, pv)) != concat_product(
                        Poly.word(reverse(v)), Poly.word(reverse(u))
                    ):
                        report.failures.append(f"concat-reversal({u},{v})")
    # associativity on triples
    for total in range(3, max_len + 1):
        for m in range(1, total - 1):
            for k in range(1, total - m):
                for u in _all_words(alphabet, m):
                    for v in _all_words(alphabet, k):
                        for w in _all_words(alphabet, total - m - k):
                            report.cases += 1
                            lhs = shuffle(shuffle_words(u, v), Poly.word(w))
                            rhs = shuffle(Poly.word(u), shuffle_words(v, w))
                            if lhs != rhs:
                                report.failures.append(f"shuffle-assoc({u},{v},{w})")
    # residual action laws on words of length <= 6
    res_len = min(max_len, 6)
    words = _words_up_to(alphabet, res_len)
    one = Poly.one()
    for p in words:
        pp = Poly.word(p)
        report.cases += 1
        if right_residual(pp, one) != pp or left_residual(one, pp) != pp:
            report.failures.append(f"residual-unit({p})")
    for p in _words_up_to(alphabet, 4):
        pp = Poly.word(p)
        for q in _words_up_to(alphabet, 3):
            for r in _words_up_to(alphabet, 3):
                report.cases += 1
                qr = concat_product(Poly.word(q), Poly.word(r))
                if right_residual(pp, qr) != right_residual(
                    right_residual(pp, Poly.word(q)), Poly.word(r)
                ):
                    report.failures.append(f"residual-right-action({p},{q},{r})")
                # suffixes peel innermost-first: (q r) peeled on the left
                # means r is removed from the end before q
                if left_residual(qr, pp) != left_residual(
                    Poly.word(q), left_residual(Poly.word(r), pp)
                ):
                    report.failures.append(f"residual-left-action({p},{q},{r})")
    return report


# -- derivation property ---------------------------------------------------

def run_derivation(alphabet: str = "ab", max_len: int = 5, jobs: int = 1) -> SuiteReport:
    """Residuals by a Lie polynomial are derivations of the shuffle
    product, for R in {a, b, ell(ab), ell(abb)}."""
    report = SuiteReport("derivation", {"alphabet": alphabet, "max_len": max_len})
    rs = [Poly.word("a"), Poly.word("b"), lie.ell("ab"), lie.ell("abb")]
    words = _words_up_to(alphabet, max_len)
    for p in words:
        pp = Poly.word(p)
        for q in words:
            qq = Poly.word(q)
            sh = shuffle(pp, qq)
            for r in rs:
                report.cases += 1
                lhs = right_residual(sh, r)
                rhs = shuffle(right_residual(pp, r), qq) + shuffle(
                    pp, right_residual(qq, r)
                )
                if lhs != rhs:
                    report.failures.append(f"derivation-right({p},{q})")
                lhs = left_residual(r, sh)
                rhs = shuffle(left_residual(r, pp), qq) + shuffle(
                    pp, left_residual(r, qq)
                )
                if lhs != rhs:
                    report.failures.append(f"derivation-left({p},{q})")
    return report


# -- rank laws -------------------------------------------------------------

def run_rank(alphabet: str = "ab", max_len: int = 8, jobs: int = 1) -> SuiteReport:
    """The adjoint images of the Lyndon words of each length are a basis
    of the degree-n image; proper shuffles span a complement."""
    report = SuiteReport("rank", {"alphabet": alphabet, "max_len": max_len})
    ab = Alphabet.of(alphabet)
    q = len(alphabet)
    for n in range(1, max_len + 1):
        lynd = lyndon_words(ab, n)
        report.cases += 1
        got = rank([lie.lambda_rec(l) for l in lynd])
        if got != len(lynd):
            report.failures.append(f"lyndon-rank(n={n}): {got} != {len(lynd)}")
        report.cases += 1
        got = rank([lie.lambda_rec(w) for w in _all_words(alphabet, n)])
        if got != len(lynd):
            report.failures.append(f"image-rank(n={n}): {got} != {len(lynd)}")
        if n <= min(max_len, 7) and n >= 2:
            shuffles = []
            for m in range(1, n):
                for u in _all_words(alphabet, m):
                    for v in _all_words(alphabet, n - m):
                        if u <= v:
                            shuffles.append(shuffle_words(u, v))
            report.cases += 1
            got = rank(shuffles)
            want = q**n - len(lynd)
            if got != want:
                report.failures.append(f"shuffle-rank(n={n}): {got} != {want}")
    return report


# -- lambda agreement (pascal / oracle / factors) --------------------------

def run_pascal(alphabet: str = "ab", max_len: int = 10, jobs: int = 1) -> SuiteReport:
    """Four-way agreement of the adjoint evaluators: the recursion against
    the scalar-product oracle and the factor expansion for every factor
    length (words up to length 8), and against the two-sum recursion on
    the a^k b u b a^l family (up to max_len)."""
    report = SuiteReport("pascal", {"alphabet": alphabet, "max_len": max_len})
    for w in _words_up_to(alphabet, min(max_len, 8)):
        expected = lie.lambda_rec(w)
        report.cases += 1
        if lie.lambda_oracle(w) != expected:
            report.failures.append(f"oracle({w})")
        for r in range(1, len(w) + 1):
            report.cases += 1
            if lie.lambda_factor_expansion(w, r=r) != expected:
                report.failures.append(f"factors({w},r={r})")
    for k, u, l in _pascal_family(max_len):
        report.cases += 1
        word = "a" * k + "b" + u + "b" + "a" * l
        if lie.lambda_pascal(k, u, l) != lie.lambda_rec(word):
            report.failures.append(f"pascal(k={k},u={u!r},l={l})")
    return report


def _pascal_family(max_len: int):
    for k in range(0, max_len - 1):
        for l in range(0, max_len - 1 - k):
            for m in range(0, max_len - 2 - k - l + 1):
                for u in _all_words("ab", m):
                    yield k, u, l


# -- e/d corollary ---------------------------------------------------------

def _equiv_zero(p: Poly) -> bool:
    return not lie.lambda_of_poly(p)


def run_ed_corollary(alphabet: str = "ab", max_len: int = 10, jobs: int = 1) -> SuiteReport:
    """The case table for d and e on the a^k b u b a^l family (k <= l,
    not both zero, word not an even palindrome), and the closed block
    formulas at the extreme indices when they are unambiguous."""
    report = SuiteReport("ed-corollary", {"alphabet": alphabet, "max_len": max_len})
    for k, u, l in _pascal_family(max_len):
        if k > l or (k == 0 and l == 0):
            continue
        word = "a" * k + "b" + u + "b" + "a" * l
        if len(word) % 2 == 0 and is_palindrome(word):
            continue
        report.cases += 1
        p = lie.lambda_rec(word)
        if not p:
            report.failures.append(f"ed-zero({word})")
            continue
        d, e = lie.e_d_invariants(word, "b", "a")
        bub = Poly.word("b" + u + "b")
        bub_zero = _equiv_zero(bub)
        want_e = k + l - 1 if bub_zero else k + l
        if e != want_e:
            report.failures.append(f"e({word}): {e} != {want_e}")
        if k < l:
            ubal_zero = _equiv_zero(Poly.word(u + "b" + "a" * l))
            want_d = k + 1 if ubal_zero else k
            if d != want_d:
                report.failures.append(f"d({word}): {d} != {want_d}")
        else:
            sign = 1 if (k + 1) % 2 == 0 else -1
            probe = poly_combine(
                sign, Poly.word(u + "b" + "a" * k), 1, Poly.word("a" * k + "b" + u)
            )
            if _equiv_zero(probe):
                if not d >= k + 1:
                    report.failures.append(f"d({word}): {d} < {k + 1}")
            elif d != k:
                report.failures.append(f"d({word}): {d} != {k}")
        _check_blocks(report, word, k, u, l, p, bub_zero)
    return report


def _check_blocks(report, word, k, u, l, p, bub_zero) -> None:
    from .poly import trailing_decomposition

    dec = trailing_decomposition(p, "b", "a")
    blocks = dec.blocks

    def got(i: int) -> Poly:
        return blocks.get(i, Poly.zero())

    lam = lie.lambda_rec
    sign_k = -1 if k % 2 else 1
    if l >= 1:
        if bub_zero:
            want = Poly.zero()
        else:
            want = sign_k * math.comb(k + l, k) * (lam("b" + u) - lam(u + "b"))
        report.cases += 1
        if got(k + l) != want:
            report.failures.append(f"block-top({word})")
    if l >= 2:
        if k < l:
            want = (-sign_k) * lam(u + "b" + "a" * l)
        else:
            want = poly_combine(
                -sign_k, lam(u + "b" + "a" * k), 1, lam("a" * k + "b" + u)
            )
        report.cases += 1
        if got(k) != want:
            report.failures.append(f"block-bottom({word})")
    if l >= 3:
        if not bub_zero:
            want = (-sign_k) * poly_combine(
                math.comb(k + l - 1, l - 1),
                lam(u + "b" + "a"),
                math.comb(k + l - 1, l),
                lam("a" + "b" + u),
            )
        elif len(set(u)) <= 1 and u.count("b") == len(u) and len(u) % 2 == 1:
            want = (-sign_k) * math.comb(k + l, k) * lam("ab" + u)
        else:
            want = (
                (-sign_k)
                * (math.comb(k + l - 1, l) - math.comb(k + l - 1, l - 1))
            ) * lam("ab" + u)
        report.cases += 1
        if got(k + l - 1) != want:
            report.failures.append(f"block-second({word})")
        if k < l:
            want = (-sign_k) * (k + 1) * lam(u + "b" + "a" * (l - 1))
            if l == k + 1:
                # the j = 0 term of the second sum lands on the same
                # trailing index, so it joins this block
                want = poly_combine(1, want, 1, lam("a" * k + "b" + u))
        else:
            want = (k + 1) * poly_combine(
                -sign_k, lam(u + "b" + "a" * (k - 1)), -1, lam("a" * (k - 1) + "b" + u)
            )
        report.cases += 1
        if got(k + 1) != want:
            report.failures.append(f"block-third({word})")


# -- gamma families --------------------------------------------------------

def run_gamma_families(alphabet: str = "ab", max_len: int = 0, jobs: int = 1) -> SuiteReport:
    """gamma(b (a^2k b^2)^m) = 1 and gamma((b a^2 b a^2k)^m b) odd."""
    report = SuiteReport("gamma-families", {})
    for k in (1, 2, 3):
        for m in (0, 1, 2):
            report.cases += 1
            w = "b" + ("a" * (2 * k) + "bb") * m
            if lie.gamma(w) != 1:
                report.failures.append(f"gamma({w}) != 1")
    for k in (2, 3):
        for m in (0, 1, 2):
            report.cases += 1
            w = ("b" + "aa" + "b" + "a" * (2 * k)) * m + "b"
            if lie.gamma(w) % 2 != 1:
                report.failures.append(f"gamma({w}) even")
    return report


# -- tabloid theorem -------------------------------------------------------

def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def run_tabloid_theorem3(max_n: int = 7, jobs: int = 1) -> SuiteReport:
    report = SuiteReport("tabloid-theorem3", {"max_n": max_n})
    for n in range(1, max_n + 1):
        for mu in _compositions(n):
            report.cases += 1
            sub = tabloids.verify_dynkin_tabloid(mu)
            if not sub.ok:
                report.failures.append(f"mu={mu}: {sub.counterexamples[:3]}")
    return report


# -- hard-coded paper identities ------------------------------------------

def run_vectors(alphabet: str = "ab", max_len: int = 0, jobs: int = 1) -> SuiteReport:
    report = SuiteReport("vectors", {})
    lam = lie.lambda_rec
    checks: list[tuple[str, bool]] = []

    checks.append(("lambda(abab) = -2 lambda(aabb)", lam("abab") == -2 * lam("aabb")))
    checks.append(("lambda(abab) = 2 lambda(bbaa)", lam("abab") == 2 * lam("bbaa")))
    checks.append(("lambda(abab) = -lambda(baba)", lam("abab") == -1 * lam("baba")))

    ba3, ba4 = lam("baaa"), lam("baaaa")
    want = poly_combine(
        3, concat_product(ba3, Poly.word("baa")), 6, concat_product(ba4, Poly.word("ba"))
    )
    checks.append(("lambda(abaabaa) expansion", lam("abaabaa") == want))
    want = poly_combine(
        -4, concat_product(ba3, Poly.word("baa")), -8, concat_product(ba4, Poly.word("ba"))
    )
    checks.append(("lambda(abaaaba) expansion", lam("abaaaba") == want))
    checks.append(
        ("4 abaabaa ~ -3 abaaaba", lie.lambda_proportional("abaabaa", "abaaaba") == (4, -3))
    )
    checks.append(
        ("16 abbaabbaa ~ ababababa", 16 * lam("abbaabbaa") == lam("ababababa"))
    )
    checks.append(("gamma(baabaa) = 3", lie.gamma("baabaa") == 3))
    ab = Alphabet.of("ab")
    for n in range(1, 9):
        for l in lyndon_words(ab, n):
            checks.append((f"gamma({l}) = 1", lie.gamma(l) == 1))

    report.cases = len(checks)
    report.failures = [name for name, ok in checks if not ok]
    return report


SUITES = {
    "support": run_support,
    "theorem2": run_theorem2,
    "adjoint": run_adjoint,
    "reversal": run_reversal,
    "shuffle-kernel": run_shuffle_kernel,
    "algebra": run_algebra,
    "derivation": run_derivation,
    "rank": run_rank,
    "pascal": run_pascal,
    "ed-corollary": run_ed_corollary,
    "gamma-families": run_gamma_families,
    "vectors": run_vectors,
}


def run_suite(name: str, *, alphabet: str = "ab", max_len: int | None = None,
              jobs: int = 1) -> SuiteReport:
    """Dispatch a named suite with its default bound unless overridden."""
    start = time.monotonic()
    if name == "tabloid-theorem3":
        report = run_tabloid_theorem3(max_n=max_len if max_len is not None else 7,
                                      jobs=jobs)
    elif name in SUITES:
        fn = SUITES[name]
        if max_len is None:
            report = fn(alphabet=alphabet, jobs=jobs)
        else:
            report = fn(alphabet=alphabet, max_len=max_len, jobs=jobs)
    else:
        raise KeyError(name)
    report.millis = int((time.monotonic() - start) * 1000)
    return report
