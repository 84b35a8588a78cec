import pytest

from grigor.branch import (
    TWord,
    T_ATOM,
    build_level_quotient,
    certified_plateau,
    emb_pair,
    flatten,
    format_tword,
    k_generators,
    lift_first,
    lift_second,
    membership_in_K,
    parse_tword,
    random_tword,
    search_high_order,
    tword_order,
)
from grigor.decide import are_equal, is_trivial, order
from grigor.errors import SearchExhausted
from grigor.tree import decompose
from grigor.words import invert, multiply, reduce_word

from conftest import make_word


def test_k_generators():
    t, u, v = k_generators()
    assert t == reduce_word("abab")
    du, dv = decompose(u), decompose(v)
    assert du.active == 0 and are_equal(du.left, t) and is_trivial(du.right)
    assert dv.active == 0 and is_trivial(dv.left) and are_equal(dv.right, t)
    assert order(t).value == 8


def test_flatten():
    assert flatten(TWord()) == ""
    assert flatten(T_ATOM) == "abab"
    assert flatten(TWord((("", 1), ("", -1)))) == ""


def test_tword_algebra(rng):
    for _ in range(20):
        k1 = random_tword(rng, max_factors=2, conj_len=6)
        k2 = random_tword(rng, max_factors=2, conj_len=6)
        assert are_equal(flatten(k1 * k2), multiply(flatten(k1), flatten(k2)))
        assert are_equal(flatten(k1.inverse()), invert(flatten(k1)))
        w = reduce_word(make_word(rng, 6))
        assert are_equal(
            flatten(k1.conjugated(w)), reduce_word(invert(w) + flatten(k1) + w)
        )


def test_tword_literals():
    assert parse_tword("") == TWord()
    assert parse_tword("1^+1") == T_ATOM
    k = parse_tword("ab^-1;1^+1")
    assert k.factors == (("ab", -1), ("", 1))
    assert parse_tword(format_tword(k)) == k
    with pytest.raises(ValueError):
        parse_tword("ab")
    with pytest.raises(ValueError):
        parse_tword("ab^2")


def test_lift_examples():
    assert lift_first("a") == "b"
    assert lift_first("b") == "ada"
    assert lift_first("") == ""
    assert lift_second("b") == "d"
    assert lift_second("c") == "b"
    assert lift_second("") == ""


def test_lift_correctness(rng):
    for _ in range(30):
        g = reduce_word(make_word(rng, rng.randint(0, 16)))
        lifted = lift_first(g)
        assert lifted.count("a") % 2 == 0
        assert are_equal(decompose(lifted).left, g)
        mirrored = lift_second(g)
        assert mirrored.count("a") % 2 == 0
        assert are_equal(decompose(mirrored).right, g)


def test_emb_pair_examples():
    _, u, v = k_generators()
    assert emb_pair(T_ATOM, TWord()) == u
    assert emb_pair(TWord(), T_ATOM) == v
    assert emb_pair(TWord(), TWord()) == ""


def test_emb_pair_correctness(rng):
    for _ in range(15):
        k1 = random_tword(rng, max_factors=2, conj_len=6)
        k2 = random_tword(rng, max_factors=2, conj_len=6)
        d = decompose(emb_pair(k1, k2))
        assert d.active == 0
        assert are_equal(d.left, flatten(k1))
        assert are_equal(d.right, flatten(k2))


def test_level_quotient_orders():
    assert build_level_quotient(1).group_order == 2
    assert build_level_quotient(2).group_order == 8
    assert build_level_quotient(3).group_order == 128


def test_index_monotone_and_plateaus():
    indices = [build_level_quotient(n).k_image_index for n in range(1, 7)]
    assert indices == sorted(indices)
    for idx, g_order in zip(
        indices, (build_level_quotient(n).group_order for n in range(1, 7))
    ):
        assert g_order % idx == 0
    assert certified_plateau() is not None


def test_quotient_level_bounds():
    with pytest.raises(ValueError):
        build_level_quotient(0)
    with pytest.raises(ValueError):
        build_level_quotient(9)


def test_membership():
    assert membership_in_K("a").verdict == "outside"
    assert membership_in_K("abab").verdict == "inside"
    assert membership_in_K("b").verdict == "outside"
    assert membership_in_K("").verdict == "inside"


def test_membership_of_embeddings(rng):
    for _ in range(10):
        k1 = random_tword(rng, max_factors=2, conj_len=6)
        k2 = random_tword(rng, max_factors=2, conj_len=6)
        assert membership_in_K(emb_pair(k1, k2)).is_inside


def test_search_high_order():
    assert search_high_order(8, seed=1) == T_ATOM
    assert search_high_order(1, seed=1) == T_ATOM
    k = search_high_order(32, seed=1)
    result = tword_order(k)
    assert result.is_exact and result.value >= 32
    exact = search_high_order(32, seed=1, exact=True)
    assert tword_order(exact).value == 32
    with pytest.raises(ValueError):
        search_high_order(3)
    with pytest.raises(SearchExhausted):
        search_high_order(1 << 11, budget=3, seed=1)
