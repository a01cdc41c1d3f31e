"""
Test Characterization - alternating-block decompositions and confusable shapes
"""
import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.analysis.characterize import (
    D4Case,
    alternating_swap,
    classify_d4,
    decompose_pair,
    l3_confusable,
    predicted_distance,
    swap_inversion_gap,
    window_span,
)
from src.core.exceptions import IdenticalWords, InvalidReadLength, NotDistanceFour
from src.sequences.seqcore import Word, all_words, inversion_number, read_distance


def w(text, q=2):
    return Word.parse(text, q)


def distinct_pairs(n, q):
    return itertools.combinations(list(all_words(n, q)), 2)


# Decomposition examples

def test_decompose_single_block():
    ps = decompose_pair(w("0011"), w("0101"))
    assert ps.u == w("0")
    assert [(b.a, b.b, b.t) for b in ps.blocks] == [(0, 1, 2)]
    assert ps.w == w("1")
    assert ps.s == 0
    assert ps.predicted_d == 2 == read_distance(w("0011"), w("0101"), 2)


def test_decompose_two_adjacent_blocks():
    ps = decompose_pair(w("00"), w("11"))
    assert ps.u == w("")
    assert [(b.a, b.b, b.t, b.v.symbols) for b in ps.blocks] == [(0, 1, 1, ()), (0, 1, 1, ())]
    assert ps.s == 1
    assert ps.predicted_d == 3


def test_decompose_blocks_with_middle():
    ps = decompose_pair(w("000"), w("101"))
    assert ps.s == 1
    assert ps.blocks[0].v == w("0")
    assert ps.predicted_d == 4 == read_distance(w("000"), w("101"), 2)


def test_decompose_rejects_identical_words():
    with pytest.raises(IdenticalWords):
        decompose_pair(w("0110"), w("0110"))


def test_pair_structure_to_dict_key_order():
    ps = decompose_pair(w("0011"), w("0101"))
    assert list(ps.to_dict()) == ["u", "blocks", "w", "s", "predicted_d"]
    assert ps.to_dict()["blocks"] == [{"a": 0, "b": 1, "t": 2, "v": ""}]


@pytest.mark.parametrize("n,q", [(5, 2), (6, 2), (4, 3)])
def test_predicted_distance_matches_read_distance(n, q):
    for x, y in distinct_pairs(n, q):
        ps = decompose_pair(x, y)
        assert ps.reassemble() == (x, y)
        assert ps.boundary_holds()
        assert predicted_distance(ps) == read_distance(x, y, 2), (x, y)


# Distance-four shapes

def test_classify_d4_examples():
    case_a = classify_d4(w("000"), w("101"))
    assert case_a.tag is D4Case.CASE_A
    assert case_a.middle == w("0")
    case_b = classify_d4(w("000"), w("111"))
    assert case_b.tag is D4Case.CASE_B
    assert [b.t for b in case_b.blocks] == [1, 1, 1]
    assert case_b.to_dict()["tag"] == "CaseB"
    with pytest.raises(NotDistanceFour):
        classify_d4(w("01"), w("10"))


# Alternating swaps

def test_alternating_swap():
    assert alternating_swap(w("0110"), w("1001")) is None
    assert alternating_swap(w("0110"), w("1010")) == 2
    assert alternating_swap(w("0010"), w("0100")) == 2
    assert alternating_swap(w("01"), w("10")) == 2
    assert alternating_swap(w("00"), w("01")) == 1
    assert alternating_swap(w("00"), w("00")) is None
    assert alternating_swap(w("00"), w("11")) is None


# ell >= 3

def test_l3_confusable_examples():
    for a in (0, 1, 2):
        x, y = Word(3, (0, 1, a, 0, 1)), Word(3, (1, 0, a, 1, 0))
        structure = l3_confusable(x, y, 3)
        assert structure is not None
        assert structure.t == 1
        assert structure.middles == (Word(3, (a,)),)
        assert structure.swap_count == 2
    assert l3_confusable(w("000"), w("111"), 3) is None
    with pytest.raises(InvalidReadLength):
        l3_confusable(w("01"), w("10"), 2)


@pytest.mark.parametrize("n,q,ell", [(6, 2, 3), (5, 3, 3), (7, 2, 4)])
def test_l3_confusable_matches_brute_force(n, q, ell):
    for x, y in distinct_pairs(n, q):
        structure = l3_confusable(x, y, ell)
        assert (structure is None) == (read_distance(x, y, ell) > 2)
        if structure is not None:
            assert structure.swap_count == abs(inversion_number(x) - inversion_number(y))
            assert all(len(v) == ell - 2 for v in structure.middles)


# Window span

def test_window_span_examples():
    assert window_span(w("0100"), w("0010")) == 2
    assert window_span(w("0100"), w("0110")) == 1
    assert window_span(w("0100"), w("0010"), "indicator") == 3
    with pytest.raises(IdenticalWords):
        window_span(w("01"), w("01"))


def test_swap_inversion_gap():
    assert swap_inversion_gap(w("0101"), w("1010")) == 2


# Properties on longer random pairs

@st.composite
def word_pairs(draw, max_len=20):
    q = draw(st.integers(min_value=2, max_value=4))
    n = draw(st.integers(min_value=1, max_value=max_len))
    symbols = st.tuples(*[st.integers(min_value=0, max_value=q - 1)] * n)
    return Word(q, draw(symbols)), Word(q, draw(symbols))


@st.composite
def swapped_pairs(draw):
    """x = u ab v1 ab ... ab w and y with every ab turned into ba: always at ell-read distance 2"""
    q = draw(st.integers(min_value=2, max_value=3))
    ell = draw(st.integers(min_value=3, max_value=4))
    a, b = draw(st.permutations(range(q)))[:2]
    t = draw(st.integers(min_value=1, max_value=3))
    symbol = st.integers(min_value=0, max_value=q - 1)
    u = draw(st.lists(symbol, max_size=4))
    w_tail = draw(st.lists(symbol, max_size=4))
    middles = [draw(st.lists(symbol, min_size=ell - 2, max_size=ell - 2)) for _ in range(t)]
    x, y = list(u), list(u)
    for k in range(t + 1):
        x.extend([a, b])
        y.extend([b, a])
        if k < t:
            x.extend(middles[k])
            y.extend(middles[k])
    return Word(q, tuple(x + w_tail)), Word(q, tuple(y + w_tail)), ell


@pytest.mark.property_based
@given(word_pairs())
@settings(max_examples=300)
def test_decomposition_predicts_random_pairs(pair):
    x, y = pair
    assume(x != y)
    ps = decompose_pair(x, y)
    assert ps.reassemble() == (x, y)
    assert ps.boundary_holds()
    assert predicted_distance(ps) == read_distance(x, y, 2)


@pytest.mark.property_based
@given(swapped_pairs())
@settings(max_examples=200)
def test_evenly_spaced_swaps_are_confusable(case):
    x, y, ell = case
    assert read_distance(x, y, ell) == 2
    structure = l3_confusable(x, y, ell)
    assert structure is not None
    assert structure.swap_count == abs(inversion_number(x) - inversion_number(y))
