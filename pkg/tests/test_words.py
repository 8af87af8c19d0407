import pytest
from hypothesis import given
from hypothesis import strategies as st

from liewords import (
    Alphabet,
    apply_literal_morphism,
    factorizations,
    is_lyndon,
    is_palindrome,
    lyndon_words,
    multi_degree,
    primitive_root,
    reverse,
    standard_factorization,
)

AB = Alphabet.of("ab")
words_ab = st.text(alphabet="ab", min_size=0, max_size=8)
nonempty_ab = st.text(alphabet="ab", min_size=1, max_size=8)


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet.of("")
    with pytest.raises(ValueError):
        Alphabet.of("aa")
    with pytest.raises(ValueError):
        Alphabet.of("aB")
    with pytest.raises(ValueError):
        AB.check_word("abc")
    assert AB.check_word("abba") == "abba"
    assert AB.index("b") == 1
    assert list(Alphabet.of("cab")) == ["c", "a", "b"]


def test_multi_degree():
    assert multi_degree("abba", AB) == (2, 2)
    assert multi_degree("", AB) == (0, 0)
    assert multi_degree("cac", Alphabet.of("abc")) == (1, 0, 2)


@given(words_ab)
def test_reverse_involution(w):
    assert reverse(reverse(w)) == w
    assert is_palindrome(w) == (w == reverse(w))


def test_primitive_root():
    assert primitive_root("abab") == ("ab", 2)
    assert primitive_root("aaa") == ("a", 3)
    assert primitive_root("aab") == ("aab", 1)
    with pytest.raises(ValueError):
        primitive_root("")


@given(nonempty_ab, st.integers(min_value=1, max_value=3))
def test_primitive_root_reconstructs(w, k):
    root, n = primitive_root(w * k)
    assert root * n == w * k
    assert primitive_root(root) == (root, 1)


def test_lyndon_small_tables():
    # pinned by direct inspection of the definition
    assert lyndon_words(AB, 1) == ["a", "b"]
    assert lyndon_words(AB, 2) == ["ab"]
    assert lyndon_words(AB, 3) == ["aab", "abb"]
    assert lyndon_words(AB, 4) == ["aaab", "aabb", "abbb"]
    assert lyndon_words(AB, 5) == [
        "aaaab", "aaabb", "aabab", "aabbb", "ababb", "abbbb",
    ]


@pytest.mark.parametrize("n", range(1, 9))
def test_lyndon_generation_matches_filter(n):
    # independent oracle: filter all words through the suffix definition
    import itertools

    expected = sorted(
        w
        for w in ("".join(p) for p in itertools.product("ab", repeat=n))
        if is_lyndon(w)
    )
    assert lyndon_words(AB, n) == expected


def test_lyndon_counts_three_letters():
    abc = Alphabet.of("abc")
    assert [len(lyndon_words(abc, n)) for n in range(1, 6)] == [3, 3, 8, 18, 48]


def test_standard_factorization_pinned():
    assert standard_factorization("ab") == ("a", "b")
    assert standard_factorization("aab") == ("a", "ab")
    assert standard_factorization("abb") == ("ab", "b")
    assert standard_factorization("aabb") == ("a", "abb")
    assert standard_factorization("aabab") == ("aab", "ab")
    assert standard_factorization("ababb") == ("ab", "abb")
    with pytest.raises(ValueError):
        standard_factorization("ba")
    with pytest.raises(ValueError):
        standard_factorization("a")


@pytest.mark.parametrize("n", range(2, 8))
def test_standard_factorization_properties(n):
    for w in lyndon_words(AB, n):
        l, m = standard_factorization(w)
        assert l + m == w
        assert is_lyndon(l) and is_lyndon(m)
        assert l < m


def test_factorizations_by_length():
    got = factorizations("abba", r=2)
    assert [tuple(f) for f in got] == [
        ("", "ab", "ba"), ("a", "bb", "a"), ("ab", "ba", ""),
    ]
    with pytest.raises(ValueError):
        factorizations("ab", r=3)
    with pytest.raises(ValueError):
        factorizations("ab")
    with pytest.raises(ValueError):
        factorizations("ab", r=1, alpha=(1, 0))


def test_factorizations_by_multidegree():
    got = factorizations("abba", alpha=(1, 1), alphabet=AB)
    assert [tuple(f) for f in got] == [("", "ab", "ba"), ("ab", "ba", "")]
    with pytest.raises(ValueError):
        factorizations("abba", alpha=(1, 1))


@given(nonempty_ab, st.integers(min_value=1, max_value=8))
def test_factorizations_cover_all_positions(w, r):
    if r > len(w):
        with pytest.raises(ValueError):
            factorizations(w, r=r)
        return
    got = factorizations(w, r=r)
    assert len(got) == len(w) - r + 1
    for s, u, t in got:
        assert s + u + t == w and len(u) == r


def test_literal_morphism():
    assert apply_literal_morphism("abc", {"a": "x", "b": "y", "c": "x"}) == "xyx"
    assert apply_literal_morphism("", {}) == ""
    with pytest.raises(ValueError):
        apply_literal_morphism("ab", {"a": "x"})
