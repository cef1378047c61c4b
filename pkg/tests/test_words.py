import pytest
from hypothesis import given
from hypothesis import strategies as st

from skword.errors import IndexOutOfRange, ZeroLetter
from skword.group import multiply
from skword.words import (
    comm_word,
    format_word,
    parse_word,
    word_concat,
    word_evaluate,
    word_invert,
    word_reduce,
)

from conftest import unipotent_pair

letters = st.integers(min_value=-3, max_value=3).filter(lambda x: x != 0)
raw_words = st.lists(letters, max_size=30)
# words that the two-generator fixtures can evaluate
eval_words = st.lists(
    st.sampled_from([1, -1, 2, -2]), max_size=20
)


def test_reduce_examples():
    assert word_reduce([1, -1]) == ()
    assert word_reduce([1, 2, -2, -1]) == ()
    assert word_reduce([1, 2, -1]) == (1, 2, -1)
    with pytest.raises(ZeroLetter):
        word_reduce([1, 0])


@given(raw_words)
def test_reduce_idempotent(raw):
    w = word_reduce(raw)
    assert word_reduce(w) == w
    assert all(w[i] != -w[i + 1] for i in range(len(w) - 1))


@given(raw_words, raw_words)
def test_concat_bounds(u_raw, v_raw):
    u, v = word_reduce(u_raw), word_reduce(v_raw)
    w = word_concat(u, v)
    assert len(w) <= len(u) + len(v)
    assert word_reduce(w) == w


@given(raw_words)
def test_invert(raw):
    w = word_reduce(raw)
    assert word_concat(w, word_invert(w)) == ()
    assert word_invert(()) == ()


@given(raw_words, raw_words)
def test_comm_word_length(u_raw, v_raw):
    u, v = word_reduce(u_raw), word_reduce(v_raw)
    assert len(comm_word(u, v)) <= 2 * (len(u) + len(v))
    assert comm_word(u, ()) == ()


def test_comm_word_example():
    assert comm_word((1,), (2,)) == (-1, -2, 1, 2)


@given(eval_words, eval_words)
def test_evaluate_homomorphism(u_raw, v_raw):
    gens = unipotent_pair(3, 2)
    u, v = word_reduce(u_raw), word_reduce(v_raw)
    lhs = word_evaluate(word_concat(u, v), gens)
    rhs = multiply(word_evaluate(u, gens), word_evaluate(v, gens))
    assert lhs.entries == rhs.entries


@given(eval_words, eval_words)
def test_comm_word_evaluates_to_commutator(u_raw, v_raw):
    from skword.group import commutator

    gens = unipotent_pair(5, 2)
    u, v = word_reduce(u_raw), word_reduce(v_raw)
    lhs = word_evaluate(comm_word(u, v), gens)
    rhs = commutator(word_evaluate(u, gens), word_evaluate(v, gens))
    assert lhs.entries == rhs.entries


def test_evaluate_basics():
    gens = unipotent_pair(3, 2)
    assert word_evaluate((), gens).is_identity()
    assert word_evaluate((1,), gens).entries == gens.elements[0].entries
    with pytest.raises(IndexOutOfRange):
        word_evaluate((7,), gens)


def test_word_text_roundtrip():
    w = (1, -2, 1, 1)
    assert format_word(w) == "1 -2 1 1"
    assert parse_word("1 -2 1 1") == w
    assert parse_word("") == ()
