import pytest

from topomonoid.corpus import build_corpus
from topomonoid.kinds import Kind, infer_kind, satisfies
from topomonoid.monoid import enumerate_monoid
from topomonoid.rules import BASE
from topomonoid.vitali import Undecidable, apply_word, sym_equal


@pytest.mark.parametrize("word,kind", [
    ("d", Kind.REG_CLOSED),
    ("ci", Kind.CLOSED),
    ("fk", Kind.NWD_CLOSED),
    ("", Kind.ARBITRARY),
    ("0", Kind.EMPTY),
    ("1", Kind.FULL),
    ("k", Kind.CLOSED),
    ("i", Kind.OPEN),
    ("ik", Kind.REG_OPEN),
    ("ki", Kind.REG_CLOSED),
    ("cfk", Kind.DENSE_OPEN),
    ("if", Kind.REG_OPEN),
])
def test_kind_examples(word, kind):
    assert infer_kind(word) is kind


def test_nwd_closed_is_not_regular_closed():
    assert satisfies(Kind.NWD_CLOSED, Kind.CLOSED)
    assert not satisfies(Kind.NWD_CLOSED, Kind.REG_CLOSED)
    assert satisfies(Kind.DENSE_OPEN, Kind.OPEN)
    assert not satisfies(Kind.DENSE_OPEN, Kind.REG_OPEN)


def test_empty_and_full_satisfy_both_sides():
    for kind in (Kind.EMPTY, Kind.FULL):
        assert satisfies(kind, Kind.OPEN)
        assert satisfies(kind, Kind.CLOSED)
    assert not satisfies(Kind.FULL, Kind.NWD_CLOSED)
    assert not satisfies(Kind.EMPTY, Kind.DENSE_OPEN)


def test_kind_soundness_on_corpus():
    """A closed classification means kw = w pointwise; dually for open."""
    corpus = build_corpus(size=60, seed=5)
    sets = corpus.all_sets()
    for w in enumerate_monoid("kcfd", BASE).elements:
        kind = infer_kind(w)
        for s in sets[:20]:
            try:
                img = apply_word(w, s)
                if satisfies(kind, Kind.CLOSED):
                    assert sym_equal(apply_word("k" + w, s), img), (w, s)
                if satisfies(kind, Kind.OPEN):
                    assert sym_equal(apply_word("i" + w, s), img), (w, s)
                if satisfies(kind, Kind.NWD_CLOSED):
                    assert apply_word("i" + w, s).base.is_empty(), (w, s)
            except Undecidable:
                continue
