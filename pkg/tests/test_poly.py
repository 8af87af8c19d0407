import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liewords import (
    Poly,
    coefficient_gcd,
    concat_product,
    left_residual,
    parse_poly,
    poly_combine,
    rank,
    reverse_poly,
    right_residual,
    scalar_product,
    shuffle,
    shuffle_words,
    trailing_decomposition,
)

words_ab = st.text(alphabet="ab", min_size=0, max_size=5)
nonempty_ab = st.text(alphabet="ab", min_size=1, max_size=5)
polys_ab = st.dictionaries(
    words_ab, st.integers(min_value=-9, max_value=9).filter(bool), max_size=5
).map(Poly)


def test_constructors_and_basics():
    assert not Poly.zero()
    assert Poly.one().coeff("") == 1
    assert Poly.word("ab", 0) == Poly.zero()
    p = Poly.from_terms([("ab", 2), ("ab", -2), ("a", 1)])
    assert p == Poly({"a": 1})
    assert len(p) == 1
    assert p.support() == ["a"]


def test_term_order_is_length_then_lex():
    p = Poly({"b": 1, "aa": 1, "ab": 1, "": 1})
    assert p.support() == ["", "b", "aa", "ab"]


def test_str_pinned():
    assert str(Poly.zero()) == "0"
    assert str(Poly({"aba": -1, "baa": 1})) == "-1*aba + 1*baa"
    assert str(Poly({"": 2, "a": -3})) == "2*1 - 3*a"


@given(polys_ab, polys_ab)
def test_additive_group_laws(p, q):
    assert p + q == q + p
    assert p - q == p + (-q)
    assert p - p == Poly.zero()
    assert poly_combine(2, p, -1, q) == p + p - q
    assert 0 * p == Poly.zero()
    assert 1 * p == p


@given(polys_ab, polys_ab, polys_ab)
def test_concat_is_associative_and_distributive(p, q, r):
    assert concat_product(concat_product(p, q), r) == concat_product(
        p, concat_product(q, r)
    )
    assert concat_product(p, q + r) == concat_product(p, q) + concat_product(p, r)
    assert p * Poly.one() == p
    assert Poly.one() * p == p


def test_shuffle_pinned_values():
    assert shuffle_words("ab", "ab") == Poly({"abab": 2, "aabb": 4})
    assert shuffle_words("ab", "ba") == Poly(
        {"abba": 2, "abab": 1, "baba": 1, "baab": 2}
    )
    assert shuffle_words("a", "bb") == Poly({"abb": 1, "bab": 1, "bba": 1})
    assert shuffle_words("", "ab") == Poly.word("ab")


@given(nonempty_ab, nonempty_ab)
def test_shuffle_counts_and_commutativity(u, v):
    p = shuffle_words(u, v)
    assert p == shuffle_words(v, u)
    # total multiplicity is the binomial coefficient of the interleavings
    import math

    assert sum(p.terms.values()) == math.comb(len(u) + len(v), len(u))


@given(polys_ab, polys_ab, polys_ab)
def test_shuffle_bilinear_associative(p, q, r):
    assert shuffle(p, q) == shuffle(q, p)
    assert shuffle(shuffle(p, q), r) == shuffle(p, shuffle(q, r))
    assert shuffle(p, q + r) == shuffle(p, q) + shuffle(p, r)


@given(nonempty_ab, nonempty_ab)
def test_reversal_antimorphism(u, v):
    pu, pv = Poly.word(u), Poly.word(v)
    assert reverse_poly(concat_product(pu, pv)) == concat_product(
        Poly.word(v[::-1]), Poly.word(u[::-1])
    )
    assert reverse_poly(shuffle(pu, pv)) == shuffle_words(u[::-1], v[::-1])


def test_scalar_product():
    p = Poly({"ab": 2, "ba": -1})
    q = Poly({"ab": 3, "aa": 7})
    assert scalar_product(p, q) == 6
    assert scalar_product(p, p) == 5
    assert scalar_product(Poly.zero(), p) == 0


@given(nonempty_ab, nonempty_ab)
def test_residual_peels_words(u, v):
    # the defining identities on plain words
    assert right_residual(Poly.word(u + v), Poly.word(u)) == Poly.word(v)
    assert left_residual(Poly.word(u), Poly.word(v + u)) == Poly.word(v)
    assert right_residual(Poly.word(u), Poly.one()) == Poly.word(u)
    assert left_residual(Poly.one(), Poly.word(u)) == Poly.word(u)


@given(polys_ab, nonempty_ab, words_ab)
def test_residual_adjoint_to_concat(p, u, w):
    # (P |> Q, w) = (P, Qw) and (Q <| P, w) = (P, wQ)
    q = Poly.word(u)
    assert right_residual(p, q).coeff(w) == p.coeff(u + w)
    assert left_residual(q, p).coeff(w) == p.coeff(w + u)


def test_trailing_decomposition_roundtrip():
    p = Poly({"abba": 2, "bab": -1, "abaa": 5})
    dec = trailing_decomposition(p, "b", "a")
    assert (dec.d, dec.e) == (0, 2)
    assert sorted(dec.blocks) == [0, 1, 2]
    assert dec.recombine() == p
    with pytest.raises(ValueError):
        trailing_decomposition(Poly.zero(), "b", "a")
    with pytest.raises(ValueError):
        trailing_decomposition(p, "a", "a")
    with pytest.raises(ValueError):
        trailing_decomposition(Poly.word("aaa"), "b", "a")  # no pivot at all


def test_coefficient_gcd():
    assert coefficient_gcd(Poly.zero()) == 0
    assert coefficient_gcd(Poly({"a": -4, "b": 6})) == 2
    assert coefficient_gcd(Poly({"a": 7})) == 7


def test_rank_small_cases():
    a, b = Poly.word("a"), Poly.word("b")
    assert rank([]) == 0
    assert rank([Poly.zero()]) == 0
    assert rank([a, b]) == 2
    assert rank([a + b, a - b, 2 * a]) == 2
    assert rank([a + b, 2 * a + 2 * b]) == 1
    big = Poly({"a": 10**40, "b": 1})
    assert rank([big, a]) == 2


def test_rank_matches_known_dimension():
    # all 8 length-3 words are independent
    import itertools

    vecs = [Poly.word("".join(p)) for p in itertools.product("ab", repeat=3)]
    assert rank(vecs) == 8
    assert rank(vecs + [vecs[0] + vecs[1]]) == 8


def test_parse_pinned():
    assert parse_poly("ab") == Poly.word("ab")
    assert parse_poly("-1*aba + 1*baa") == Poly({"aba": -1, "baa": 1})
    assert parse_poly("2*1") == Poly({"": 2})
    assert parse_poly("1") == Poly.one()
    assert parse_poly("a - a") == Poly.zero()
    assert parse_poly("3*ab+ab") == Poly({"ab": 4})
    for bad in ("", "+", "2*", "a b", "2 3", "ab++a", "5"):
        with pytest.raises(ValueError):
            parse_poly(bad)


def test_print_parse_roundtrip_bulk():
    rng = random.Random(20260826)
    letters = "ab"
    for _ in range(1000):
        terms = {}
        for _ in range(rng.randint(0, 6)):
            w = "".join(rng.choice(letters) for _ in range(rng.randint(0, 5)))
            c = rng.randint(-50, 50)
            if c:
                terms[w] = c
        p = Poly(dict(terms))
        assert parse_poly(str(p)) == p


@given(polys_ab)
def test_print_parse_roundtrip(p):
    assert parse_poly(str(p)) == p
