import pytest

from topomonoid import realsets
from topomonoid.corpus import build_corpus, witness
from topomonoid.monoid import enumerate_monoid
from topomonoid.realsets import interval, point, union
from topomonoid.rules import BASE, PB
from topomonoid.vitali import (Undecidable, VitaliParams, apply_word,
                               distinguish, has_baire_property, is_meager,
                               minus_v, plus_v, render_symbolic, sym_apply,
                               sym_compare, sym_difference, sym_equal,
                               sym_intersect, sym_subset, sym_union, tame)

V = witness("V")
CV = witness("cV")
A22 = witness("A22")


def test_atom_axioms():
    assert render_symbolic(apply_word("d", V)) == "[8,9]"
    assert render_symbolic(apply_word("k", V)) == "[8,10]"
    assert apply_word("i", V).base.is_empty()
    assert render_symbolic(apply_word("d", CV)) == "(-inf,inf)"
    assert render_symbolic(apply_word("k", CV)) == "(-inf,inf)"


@pytest.mark.parametrize("word,expected", [
    ("idc", "(-inf,inf)"),
    ("cd", "(-inf,8) u (9,inf)"),
    ("cdc", "{}"),
    ("cidc", "{}"),
    ("id", "(8,9)"),
    ("kcd", "(-inf,8] u [9,inf)"),
])
def test_word_images_of_v(word, expected):
    assert render_symbolic(apply_word(word, V)) == expected


def test_d_of_a_witness():
    a18 = witness("A18")
    assert render_symbolic(apply_word("d", a18)) == "[1,3] u [6,7]"
    assert render_symbolic(apply_word("d", A22)) == "[1,3] u [6,7] u [8,9]"


def test_complement_swaps_modes():
    s = sym_apply("c", plus_v(interval(1, 2)))
    assert s.mode == "minusV"
    assert render_symbolic(s) == "(-inf,1] u [2,inf) ∖ V"
    assert sym_apply("c", s) == plus_v(interval(1, 2))


def test_canonical_collapses():
    assert plus_v(realsets.REALS).is_tame()
    assert minus_v(interval(0, 1)).is_tame()  # base misses W1
    assert not minus_v(interval(8, 9)).is_tame()


def test_mode_algebra_closure():
    for s in (V, CV, A22, tame(interval(0, 1))):
        for ch in "kicdf":
            assert sym_apply(ch, s).mode in ("tame", "plusV", "minusV")


def test_undecidable_isolated_point_inside_w1():
    s = minus_v(union(interval(8, 9, True, True), point(realsets.Fraction(19, 2))))
    with pytest.raises(Undecidable):
        sym_apply("k", s)
    # d ignores isolated points entirely, so it stays decidable.
    assert render_symbolic(sym_apply("d", s)) == "[8,9]"


def test_undecidable_interior_of_punctured_plus_v():
    s = plus_v(union(interval(8, realsets.Fraction(17, 2)),
                     interval(realsets.Fraction(17, 2), 9)))
    with pytest.raises(Undecidable):
        sym_apply("i", s)


def test_boundary_singleton_is_decidable():
    # 8 sits on the boundary of W1 = (8,10); V lives inside the open set.
    s = minus_v(union(point(8), interval(9, 10)))
    assert render_symbolic(sym_apply("k", s)) == "{8} u [9,10]"


def test_apply_word_error_carries_position():
    s = minus_v(union(interval(8, 9, True, True), point(realsets.Fraction(19, 2))))
    with pytest.raises(Undecidable) as exc:
        apply_word("ik", s)
    assert "position 2" in str(exc.value)


def test_subset_examples():
    assert sym_compare("subset", V, plus_v(realsets.EMPTY))
    assert sym_compare("equal", apply_word("cdc", V), tame(realsets.EMPTY))
    assert sym_compare("subset", apply_word("d", A22), apply_word("kik", A22))
    assert sym_subset(V, tame(interval(8, 10, True, True)))
    assert not sym_subset(V, tame(interval(8, 9, True, True)))
    assert not sym_subset(tame(realsets.REALS), V)


def test_equal_undecidable_on_single_rational_difference():
    a = plus_v(realsets.EMPTY)
    b = plus_v(point(9))
    with pytest.raises(Undecidable):
        sym_equal(a, b)
    # Two rational points cannot both sit in V: decidably different.
    c = plus_v(union(point(9), point(realsets.Fraction(17, 2))))
    assert not sym_equal(a, c)


def test_is_meager():
    assert is_meager(tame(interval(5, 6, density="rationals")))
    assert not is_meager(V)
    assert not is_meager(tame(interval(6, 7, density="irrationals")))


def test_has_baire_property():
    assert has_baire_property(witness("A18")) is True
    assert has_baire_property(V) is False
    assert has_baire_property(CV) is False
    assert has_baire_property(A22) is False
    assert has_baire_property(plus_v(realsets.REALS)) is True  # collapses to tame
    # V-part provably meager: conservative "unknown".
    assert has_baire_property(plus_v(interval(8, 9, True, True))) == "unknown"
    assert has_baire_property(minus_v(interval(9, 10, density="rationals"))) == "unknown"


def test_distinguish_counts():
    n, table = distinguish(witness("empty"), enumerate_monoid("kcd", BASE).elements)
    assert n == 2
    assert set(table.values()) == {"{}", "(-inf,inf)"}
    n, _ = distinguish(witness("A18"), enumerate_monoid("kcd", PB).elements)
    assert n == 18


def test_combinations():
    assert sym_union(V, tame(interval(0, 1))) == plus_v(interval(0, 1))
    assert sym_intersect(V, CV) == tame(realsets.EMPTY)
    assert sym_union(V, CV) == tame(realsets.REALS)
    assert sym_difference(CV, tame(realsets.REALS)) == tame(realsets.EMPTY)
    assert sym_intersect(A22, tame(interval(0, 5))) == tame(
        union(union(interval(1, 2), interval(2, 3)), point(4)))
    with pytest.raises(Undecidable):
        sym_union(CV, tame(interval(9, 10)))  # partly meets W1


def test_baire_equality_dichotomy_on_vitali():
    for lhs, rhs in (("idc", "cd"), ("id", "cdc"), ("d", "cidc"), ("dc", "kcd")):
        assert not sym_equal(apply_word(lhs, V), apply_word(rhs, V))


def test_d_overshoot_is_nonmeager_exactly_off_the_baire_sets():
    # dS - S meager characterizes the Baire property; V fails it.
    overshoot = sym_difference(apply_word("d", V), V)
    assert not is_meager(overshoot)
    assert not is_meager(sym_difference(apply_word("d", CV), CV))
    a18 = witness("A18")
    assert is_meager(sym_difference(apply_word("d", a18), a18))


def test_apply_word_normalization_consistency_on_corpus():
    from topomonoid.rewrite import normalize
    corpus = build_corpus(size=25, seed=9)
    words = ["kcd", "dcd", "ikic", "fkik", "dfk", "cidc", "ddc", "kikc"]
    for s in corpus.all_sets():
        for w in words:
            assert sym_equal(apply_word(w, s), apply_word(normalize(w, BASE), s))


def test_custom_params():
    params = VitaliParams.make(interval(0, 1), interval(0, 2))
    v = plus_v(realsets.EMPTY, params)
    assert render_symbolic(apply_word("d", v)) == "[0,1]"
    assert render_symbolic(apply_word("k", v)) == "[0,2]"
    with pytest.raises(ValueError):
        VitaliParams.make(interval(0, 1, True, True), interval(0, 2))
    with pytest.raises(ValueError):
        VitaliParams.make(interval(0, 3), interval(0, 2))
    with pytest.raises(ValueError):
        sym_equal(v, V)  # mixed parameters
