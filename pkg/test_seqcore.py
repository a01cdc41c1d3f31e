"""
Test Sequence Core - words, read vectors, syndromes and the batch kernels
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.exceptions import (
    EmptyWord,
    InvalidReadLength,
    InvalidSymbol,
    NotARealization,
    NotDistinct,
    ParseError,
    RankOutOfRange,
    ShapeMismatch,
)
from src.sequences import kernels
from src.sequences.seqcore import (
    Multiset,
    ReadVector,
    SyndromeVector,
    Word,
    all_words,
    alternating,
    even_subword,
    hamming_distance,
    in_all,
    indicator,
    indicator_inverse,
    inversion_number,
    is_good,
    max_alternating_run,
    multiset_rank,
    multiset_unrank,
    odd_subword,
    phi_inverse,
    phi_map,
    q_ell,
    read_distance,
    read_to_word,
    read_vector,
    vt_syndrome,
)


def w(text, q=2):
    return Word.parse(text, q)


# Parsing and text formats

def test_word_parse_digit_and_comma_forms():
    assert w("0101").symbols == (0, 1, 0, 1)
    assert w("0,1,1").symbols == (0, 1, 1)
    assert Word.parse("10,0,3", 11).symbols == (10, 0, 3)
    assert Word.parse("10,0,3", 11).to_text() == "10,0,3"
    assert w("").symbols == ()


def test_word_parse_rejects_bad_input():
    with pytest.raises(ParseError):
        w("01x")
    with pytest.raises(ParseError):
        w("-1,0")
    with pytest.raises(InvalidSymbol):
        w("012")


def test_multiset_and_read_vector_text():
    assert Multiset(2, (1, 0)).to_text() == "{0,1}"
    assert Multiset.parse("{1,0}", 2) == Multiset(2, (0, 1))
    R = ReadVector.parse("[{0,0},{0,1}]", 2, 2)
    assert R.to_text() == "[{0,0},{0,1}]"
    assert ReadVector.parse("[[0,0],[0,1]]", 2, 2) == R
    assert R.to_json() == [[0, 0], [0, 1]]
    with pytest.raises(ParseError):
        Multiset.parse("0,1", 2)


# Read vectors

def test_read_vector_examples():
    assert read_vector(w("010"), 2).to_text() == "[{0,0},{0,1},{0,1},{0,0}]"
    assert read_vector(w("10"), 3).to_text() == "[{0,0,1},{0,0,1},{0,0,1},{0,0,0}]"
    assert read_vector(w("0011"), 2).to_text() == "[{0,0},{0,0},{0,1},{1,1},{0,1}]"


def test_read_vector_of_empty_word_is_padding_only():
    assert read_vector(w(""), 2).to_text() == "[{0,0}]"
    assert read_vector(w(""), 3).to_text() == "[{0,0,0},{0,0,0}]"


def test_read_vector_rejects_short_reads():
    with pytest.raises(InvalidReadLength):
        read_vector(w("01"), 1)


def test_read_to_word_inverts_read_vector():
    R = ReadVector.parse("[{0,0},{0,1},{1,1},{0,1}]", 2, 2)
    assert read_to_word(R) == w("011")
    for ell in (2, 3):
        for x in all_words(5, 3):
            assert read_to_word(read_vector(x, ell)) == x


def test_read_to_word_detects_non_realizations():
    with pytest.raises(NotARealization):
        read_to_word(ReadVector.parse("[{0,1},{0,0},{0,0}]", 2, 2))


def test_read_distance_examples():
    assert read_distance(w("01"), w("10"), 2) == 2
    assert read_distance(w("0110"), w("0110"), 2) == 0
    assert read_distance(w("00"), w("11"), 2) == 3
    with pytest.raises(ShapeMismatch):
        read_distance(w("01"), w("010"), 2)
    with pytest.raises(ShapeMismatch):
        read_distance(w("01"), Word.parse("01", 3), 2)


def test_hamming_distance():
    assert hamming_distance(w("0101"), w("0011")) == 2


# Syndromes and transforms

def test_vt_syndrome_examples():
    assert vt_syndrome(w("101"), 0) == 2
    assert vt_syndrome(w("0101"), 1) == 6
    assert vt_syndrome(w("101"), 2) == 10


def test_inversion_number_examples():
    assert inversion_number(w("10")) == 1
    assert inversion_number(Word.parse("201", 3)) == 2
    assert inversion_number(Word.parse("001122", 3)) == 0


def test_indicator_and_inverse():
    assert indicator(Word.parse("122", 3)) == Word.parse("101", 3)
    assert indicator(w("011")) == w("010")
    assert indicator_inverse(Word.parse("101", 3)) == Word.parse("122", 3)
    assert indicator_inverse(w("111")) == w("101")
    assert indicator_inverse(w("")) == w("")
    for x in all_words(4, 3):
        assert indicator_inverse(indicator(x)) == x


def test_odd_and_even_subwords():
    x = Word.parse("1234", 5)
    assert odd_subword(x).symbols == (1, 3)
    assert even_subword(x).symbols == (2, 4)
    assert odd_subword(w("1")).symbols == (1,)
    assert even_subword(w("1")).symbols == ()


def test_syndrome_vector_holds():
    x = w("0101")
    sv = SyndromeVector.of(x, [0, 1], [3, 5])
    assert sv.residues == (2 % 3, 6 % 5)
    assert sv.holds(x)
    assert not sv.holds(w("1101"))


# Alternating runs and goodness

def test_alternating_examples():
    assert alternating(5, 0, 1) == w("01010")
    assert alternating(0, 0, 1) == w("")
    assert alternating(1, 2, 0, q=3) == Word.parse("2", 3)
    with pytest.raises(NotDistinct):
        alternating(3, 1, 1)


def test_max_alternating_run_examples():
    assert max_alternating_run(w("0100")) == 3
    assert max_alternating_run(Word.parse("222", 3)) == 1
    assert max_alternating_run(w("0101")) == 4
    with pytest.raises(EmptyWord):
        max_alternating_run(w(""))


def test_in_all_examples():
    assert not in_all(w("0101"), 3)
    assert in_all(w("0000"), 1)
    assert all(in_all(x, 4) for x in all_words(4, 2))


def test_is_good_examples():
    assert not is_good(w("01001"), 3, 1)
    assert all(is_good(w("00000"), 3, T) for T in (1, 2, 3))
    assert is_good(w("01001"), 3, 2)
    with pytest.raises(InvalidReadLength):
        is_good(w("0101"), 2, 1)


# Ranking

def test_multiset_rank_order():
    assert [multiset_rank(Multiset(2, e)) for e in ((0, 0), (0, 1), (1, 1))] == [0, 1, 2]
    assert q_ell(2, 3) == 4
    for q, ell in ((2, 2), (3, 2), (3, 3), (4, 3)):
        ranks = [multiset_rank(multiset_unrank(r, q, ell)) for r in range(q_ell(q, ell))]
        assert ranks == list(range(q_ell(q, ell)))
    with pytest.raises(RankOutOfRange):
        multiset_unrank(3, 2, 2)


def test_phi_map_examples():
    R = read_vector(w("01"), 2)
    assert phi_map(R) == Word.parse("011", 3)
    assert phi_inverse(phi_map(R), 2, 2) == R
    with pytest.raises(ShapeMismatch):
        phi_inverse(w("01"), 2, 2)


# Batch kernels agree with the scalar functions

@pytest.mark.parametrize("n,q", [(4, 2), (3, 3), (5, 2)])
def test_kernels_match_scalar_functions(n, q):
    W = kernels.word_matrix(n, q)
    words = list(all_words(n, q))
    assert kernels.matrix_to_words(W, q) == words

    R = kernels.read_rank_matrix(W, q, 2)
    assert [tuple(row) for row in R] == [phi_map(read_vector(x, 2)).symbols for x in words]

    for k in (0, 1, 2):
        assert list(kernels.vt_syndrome_batch(W, k)) == [vt_syndrome(x, k) for x in words]
    assert list(kernels.inversion_batch(W)) == [inversion_number(x) for x in words]
    assert [tuple(r) for r in kernels.indicator_batch(W, q)] == [indicator(x).symbols for x in words]
    assert [tuple(r) for r in kernels.odd_batch(W)] == [odd_subword(x).symbols for x in words]
    assert list(kernels.max_alternating_run_batch(W)) == [max_alternating_run(x) for x in words]
    assert list(kernels.good_batch(W, 3, 1)) == [is_good(x, 3, 1) for x in words]


def test_index_matrix_picks_lexicographic_rows():
    W = kernels.index_matrix(np.array([0, 5, 7]), 3, 2)
    assert [tuple(r) for r in W] == [(0, 0, 0), (1, 0, 1), (1, 1, 1)]


def test_vt_syndrome_batch_promotes_large_values():
    W = np.full((1, 40), 3, dtype=np.int64)
    assert int(kernels.vt_syndrome_batch(W, 12)[0]) == vt_syndrome(Word(4, (3,) * 40), 12)


# Properties on longer random words

@st.composite
def random_words(draw, max_len=24):
    q = draw(st.integers(min_value=2, max_value=5))
    symbols = draw(st.lists(st.integers(min_value=0, max_value=q - 1), max_size=max_len))
    return Word(q, tuple(symbols))


@pytest.mark.property_based
@given(random_words(), st.integers(min_value=2, max_value=4))
@settings(max_examples=200)
def test_read_vector_round_trip(x, ell):
    R = read_vector(x, ell)
    assert len(R.entries) == len(x) + ell - 1
    assert read_to_word(R) == x
    assert phi_inverse(phi_map(R), x.q, ell) == R


@pytest.mark.property_based
@given(random_words())
@settings(max_examples=200)
def test_indicator_is_a_bijection(x):
    assert indicator_inverse(indicator(x)) == x
    assert len(indicator(x)) == len(x)


@pytest.mark.property_based
@given(random_words(), st.data())
@settings(max_examples=200)
def test_single_substitution_moves_exactly_ell_reads(x, data):
    if len(x) == 0:
        return
    position = data.draw(st.integers(min_value=0, max_value=len(x) - 1))
    symbol = data.draw(st.integers(min_value=0, max_value=x.q - 1).filter(lambda s: s != x.symbols[position]))
    y = Word(x.q, x.symbols[:position] + (symbol,) + x.symbols[position + 1:])
    for ell in (2, 3):
        assert read_distance(x, y, ell) == ell


@st.composite
def word_batches(draw):
    q = draw(st.integers(min_value=2, max_value=4))
    n = draw(st.integers(min_value=1, max_value=14))
    rows = draw(st.lists(st.tuples(*[st.integers(min_value=0, max_value=q - 1)] * n), min_size=1, max_size=8))
    return [Word(q, row) for row in rows]


@pytest.mark.property_based
@given(word_batches())
@settings(max_examples=100)
def test_kernels_match_scalar_functions_on_random_rows(rows):
    q = rows[0].q
    W = kernels.words_to_matrix(rows)
    assert list(kernels.vt_syndrome_batch(W, 1)) == [vt_syndrome(x, 1) for x in rows]
    assert list(kernels.inversion_batch(W)) == [inversion_number(x) for x in rows]
    assert list(kernels.max_alternating_run_batch(W)) == [max_alternating_run(x) for x in rows]
    R = kernels.read_rank_matrix(W, q, 2)
    assert [tuple(r) for r in R] == [phi_map(read_vector(x, 2)).symbols for x in rows]
