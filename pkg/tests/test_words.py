import pytest

import skelcube as sk
from skelcube.words import (
    canon_key,
    facets,
    is_subword,
    one_step_cofaces,
    proper_subwords,
    signed_facets,
    sort_words,
    span_word,
    subwords,
    validate_word,
    word_dim,
    word_vertices,
)

from helpers import all_words, oracle_is_subface


def test_word_dim():
    assert word_dim("0101") == 0
    assert word_dim("*1*") == 2
    assert word_dim("") == 0


def test_validate_word():
    validate_word("01*", 3)
    with pytest.raises(sk.StructuralError):
        validate_word("01*", 2)
    with pytest.raises(sk.StructuralError):
        validate_word("01x", 3)
    with pytest.raises(sk.StructuralError):
        validate_word(123, 3)


def test_canonical_order_puts_star_last():
    assert sort_words(["*0", "00", "10", "1*"]) == ["00", "10", "1*", "*0"]
    assert canon_key("0") < canon_key("1") < canon_key("*")


def test_subword_matches_vertex_box_oracle():
    for p in all_words(3):
        for q in all_words(3):
            assert is_subword(p, q) == oracle_is_subface(p, q), (p, q)


def test_facets():
    assert sorted(facets("*1*")) == ["*10", "*11", "01*", "11*"]
    assert list(facets("010")) == []


def test_signed_facets_alternate_and_square_first_star_is_positive_one():
    got = dict(signed_facets("**"))
    assert got == {"1*": 1, "0*": -1, "*1": -1, "*0": 1}


def test_subwords_counts():
    assert len(set(subwords("**"))) == 9
    assert len(set(proper_subwords("***"))) == 26
    assert set(subwords("01")) == {"01"}


def test_word_vertices():
    assert sorted(word_vertices("*1*")) == ["010", "011", "110", "111"]
    assert list(word_vertices("10")) == ["10"]


def test_one_step_cofaces():
    assert sorted(one_step_cofaces("01")) == ["*1", "0*"]
    assert list(one_step_cofaces("**")) == []


def test_span_word():
    assert span_word(["000", "110"]) == "**0"
    assert span_word(["0*0"]) == "0*0"
    assert span_word(["01*", "000"]) == "0**"
    with pytest.raises(sk.StructuralError):
        span_word([])
