import pytest

from topomonoid.corpus import (WITNESS_NAMES, build_corpus, parse_set_dsl,
                               random_tame, render_set, witness)
from topomonoid.realsets import interval, render
from topomonoid.words import ParseError


def test_witnesses_exist_and_render():
    assert render_set(witness("A18")) == "(1,2) u (2,3) u {4} u Q(5,6) u I(6,7)"
    assert render_set(witness("A22")) == "(1,2) u (2,3) u {4} u Q(5,6) u I(6,7) u V"
    assert render_set(witness("V")) == "V"
    assert render_set(witness("cV")) == "(-inf,inf) ∖ V"
    assert render_set(witness("empty")) == "{}"
    assert render_set(witness("full")) == "(-inf,inf)"
    with pytest.raises(ValueError):
        witness("A19")


def test_witnesses_round_trip_through_dsl():
    for name in WITNESS_NAMES:
        s = witness(name)
        assert parse_set_dsl(render_set(s)) == s


def test_dsl_examples():
    a18 = parse_set_dsl("(1,2) u (2,3) u {4} u Q(5,6) u I(6,7)")
    assert a18 == witness("A18")
    assert parse_set_dsl("V") == witness("V")
    assert parse_set_dsl("[1,2]").base == interval(1, 2, True, True)
    assert parse_set_dsl("(-inf, 0)").base == interval("-inf", 0)
    assert parse_set_dsl("(8,9) \\ V").mode == "minusV"
    assert parse_set_dsl("(0,1) \\ V").mode == "tame"  # V lives inside (8,10)
    assert parse_set_dsl("{1/2}").base.contains("1/2")
    assert parse_set_dsl("{}").base.is_empty()


def test_dsl_closed_trace_spans():
    # A closed span intersected with the rationals keeps its (rational)
    # endpoints; intersected with the irrationals it loses them.
    assert render_set(parse_set_dsl("Q[5,6]")) == "{5} u Q(5,6) u {6}"
    assert render_set(parse_set_dsl("I[5,6]")) == "I(5,6)"
    assert render_set(parse_set_dsl("Q[5,6)")) == "{5} u Q(5,6)"


def test_dsl_rejections():
    for text, why in [
        ("[2,1]", "reversed"),
        ("(2,2)", "degenerate open"),
        ("[-inf,0]", "closed infinite endpoint"),
        ("V u V", "two atoms"),
        ("(1,2) (2,3)", "missing u"),
        ("(1,2", "unterminated"),
        ("", "empty"),
        ("Q{4}", "trace of a point"),
        ("V \\ V", "atom on both sides"),
        ("hello", "garbage"),
    ]:
        with pytest.raises(ParseError):
            parse_set_dsl(text)


def test_dsl_error_position():
    with pytest.raises(ParseError) as exc:
        parse_set_dsl("(1,2) u (3,x)")
    assert exc.value.position == 12


def test_random_tame_deterministic():
    assert random_tame(7, 4) == random_tame(7, 4)
    distinct = {random_tame(seed, 4) for seed in range(100)}
    assert len(distinct) > 90


def test_random_tame_cell_bound():
    for seed in range(200):
        assert len(random_tame(seed, 4).cells) <= 4
        assert len(random_tame(seed, 1).cells) <= 1


def test_random_tame_round_trips():
    for seed in range(100):
        s = random_tame(seed, 4)
        assert parse_set_dsl(render(s)).base == s


def test_build_corpus_contents():
    corpus = build_corpus(size=12, seed=0)
    assert set(corpus.named) == set(WITNESS_NAMES)
    assert len(corpus.random) == 12
    assert len(corpus.all_sets()) == 18


def test_corpus_and_set_json():
    corpus = build_corpus(size=3, seed=5)
    data = corpus.to_json()
    assert data["named"]["V"] == "V"
    assert data["random"][2]["seed"] == 7
    assert parse_set_dsl(data["random"][0]["set"]).base == corpus.random[0]
    v = witness("V").to_json()
    assert v == {"base": "{}", "mode": "plusV", "w0": "(8,9)", "w1": "(8,10)"}
