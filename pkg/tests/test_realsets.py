from fractions import Fraction

import pytest

from topomonoid import realsets
from topomonoid.corpus import random_tame
from topomonoid.realsets import (Cell, TameSet, apply_letter, closure, complement,
                                 difference, frontier, interior, intersect,
                                 interval, is_subset, point, render,
                                 second_category, union)

Q56 = interval(5, 6, density="rationals")
I67 = interval(6, 7, density="irrationals")
A18 = union(union(interval(1, 2), interval(2, 3)),
            union(point(4), union(Q56, I67)))


def rnd(n=300, start=0):
    return [random_tame(start + j, 4) for j in range(n)]


# -- normalization -------------------------------------------------------------


def test_merge_touching_full_cells():
    s = TameSet.from_cells([
        Cell(1, 2, False, False), Cell(2, 2, True, True), Cell(2, 3, False, False)])
    assert render(s) == "(1,3)"


def test_density_union_upgrades():
    s = TameSet.from_cells([
        Cell(5, 6, False, False, "rationals"), Cell(5, 6, False, False, "irrationals")])
    assert render(s) == "(5,6)"


def test_normalization_fixpoint():
    s = interval(0, 1)
    assert TameSet.from_cells(s.cells) == s


def test_singleton_merges_into_half_closed_interval():
    s = union(point(2), interval(2, 3))
    assert render(s) == "[2,3)"


def test_rational_trace_absorbs_interior_singleton():
    s = union(union(Q56, point(Fraction(11, 2))), interval(5, 6, density="rationals"))
    assert render(s) == "Q(5,6)"
    t = TameSet.from_cells([Cell(5, 6, True, True, "rationals")])
    assert render(t) == "{5} u Q(5,6) u {6}"


def test_irrational_trace_ignores_closed_flags():
    t = TameSet.from_cells([Cell(6, 7, True, True, "irrationals")])
    assert render(t) == "I(6,7)"


# -- operators -----------------------------------------------------------------


def test_operator_images_of_a_witness():
    assert render(closure(A18)) == "[1,3] u {4} u [5,7]"
    assert render(second_category(A18)) == "[1,3] u [6,7]"
    assert render(interior(A18)) == "(1,2) u (2,3)"


def test_d_of_rational_trace_is_empty():
    assert second_category(Q56).is_empty()
    assert render(second_category(I67)) == "[6,7]"


def test_frontier_of_closed_interval():
    assert render(frontier(interval(0, 1, True, True))) == "{0} u {1}"


def test_interior_merges_before_computing():
    s = union(union(interval(1, 2), point(2)), interval(2, 3))
    assert render(interior(s)) == "(1,3)"


def test_combine_examples():
    assert render(union(interval(1, 2), interval(2, 3))) == "(1,2) u (2,3)"
    assert render(intersect(interval(5, 6), Q56)) == "Q(5,6)"
    assert render(difference(interval(6, 7), interval(6, 7, density="rationals"))) == "I(6,7)"


def test_compare_examples():
    assert is_subset(second_category(A18), closure(A18))
    assert interior(closure(A18)) == union(interval(1, 3), interval(5, 7))
    assert not is_subset(interval(0, 1, True, True), interval(0, 1))


def test_unbounded_sets():
    r = realsets.REALS
    assert render(complement(interval(8, 9, True, True))) == "(-inf,8) u (9,inf)"
    assert closure(r) == r and interior(r) == r
    assert render(second_category(realsets.RATIONALS)) == "{}"
    assert render(second_category(realsets.IRRATIONALS)) == "(-inf,inf)"


def test_contains():
    assert A18.contains(4)
    assert A18.contains(Fraction(11, 2))
    assert not A18.contains(Fraction(13, 2))
    assert not A18.contains(2)


# -- algebraic laws over a seeded corpus ----------------------------------------


def test_idempotence_and_duality_laws():
    for s in rnd(1000):
        ks, is_, cs = closure(s), interior(s), complement(s)
        assert closure(ks) == ks
        assert interior(is_) == is_
        assert complement(cs) == s
        assert is_subset(s, ks) and is_subset(is_, s)
        assert interior(cs) == complement(ks)
        assert interior(s) == complement(closure(cs))  # i = ckc


def test_d_laws():
    sets = rnd()
    for s, t in zip(sets, sets[1:]):
        ds = second_category(s)
        assert closure(ds) == ds
        assert is_subset(ds, closure(s))
        assert second_category(interior(s)) == closure(interior(s))
        assert second_category(union(s, t)) == union(ds, second_category(t))
        assert second_category(difference(s, ds)).is_empty()
        assert s.is_meager() == ds.is_empty()
        assert second_category(ds) == ds
        assert second_category(closure(s)) == closure(interior(closure(s)))
        assert closure(interior(ds)) == ds


def test_baire_property_equalities_hold_on_tame_sets():
    for s in rnd(200):
        ds, dcs = second_category(s), second_category(complement(s))
        assert interior(dcs) == complement(ds)
        assert interior(ds) == complement(second_category(complement(ds)))
        assert second_category(difference(ds, s)).is_empty()


def test_frontier_is_closure_minus_interior():
    for s in rnd(1000):
        assert frontier(s) == difference(closure(s), interior(s))


def test_apply_letter_dispatch():
    s = interval(0, 1)
    assert apply_letter("k", s) == closure(s)
    with pytest.raises(ValueError):
        apply_letter("x", s)


def test_structural_equality_is_set_equality():
    a = union(interval(0, 1), interval(1, 2))
    b = TameSet.from_cells([Cell(0, 2, False, False)])
    assert a != b
    assert union(a, point(1)) == b


def test_float_endpoints_rejected():
    with pytest.raises(TypeError):
        interval(0.1, 0.5)
