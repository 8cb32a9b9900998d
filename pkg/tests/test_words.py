import pytest

from topomonoid.words import ParseError, parse_word, render_word, word_sort_key


def test_parse_basic():
    assert parse_word("kcd") == "kcd"
    assert parse_word("") == ""
    assert parse_word("e") == ""
    assert parse_word("0") == "0"
    assert parse_word("1") == "1"
    assert parse_word(" k c d ") == "kcd"


def test_parse_rejects_unknown_character_with_position():
    with pytest.raises(ParseError) as exc:
        parse_word("kxd")
    assert exc.value.position == 2


def test_parse_rejects_mixed_constants():
    for text in ("k0d", "1k", "ke", "ee"):
        with pytest.raises(ParseError):
            parse_word(text)


def test_render_round_trip():
    for w in ("", "k", "kcd", "0", "1", "cidc"):
        assert parse_word(render_word(w)) == w
    assert render_word("") == "e"


def test_sort_key_orders_by_length_then_lex():
    words = ["k", "", "cidc", "ci", "d"]
    assert sorted(words, key=word_sort_key) == ["", "d", "k", "ci", "cidc"]
