"""Symbolic sets: the tame algebra extended by one axiomatized Vitali atom V.

V is never constructed.  It is a formal atom subject to the axioms

    V is a Vitali set:  exactly one representative of each coset of Q
                        in R, so V has at most one point in any single
                        coset, and exactly one rational point;
    V subset of W1, V dense in W1, kV = kW1, iV = empty;
    dV = kW0;
    every open U meets the complement of V in a nonmeager set
    (hence cV is dense and d(cV) = k(cV) = R),

for session parameters W0 subset of W1, both open with rational endpoints.
The evaluation universe is then

    tame(B)    = B            (a TameSet)
    plusV(B)   = B union V
    minusV(B)  = B minus V

which is closed under k, i, c, d, f:

  * c swaps plusV and minusV over the complemented base.
  * k(plusV(B)) = kB u kW1 by additivity of closure.
  * k(minusV(B)) = kB.  Justification, cell by cell of B: a full or
    irrationals cell stays dense in its span after removing V because
    every open U has U & cV nonmeager (for the irrationals trace, remove
    the meager rationals too); a rationals trace is a single coset of Q
    and loses at most one point to V; an isolated point p of B outside
    W1 is certainly kept (V lies inside the open set W1).  An isolated
    point strictly inside W1 is the one genuinely undecidable case —
    whether p is in V is not determined by the axioms — and the
    evaluator raises Undecidable instead of guessing.
  * d(plusV(B)) = dB u kW0 by finite additivity of d.
  * d(minusV(B)) = dB, with no undecidable case: full cells keep every
    neighborhood nonmeager (U & cV nonmeager), irrationals cells likewise
    (if (U minus Q) minus V were meager then U & cV would be meager),
    rationals traces and isolated points are meager with or without V.
  * i = c k c, so its undecidable case is an isolated point of the
    *complement* of a plusV base inside W1.
  * f(S) = k(S) & k(cS), always tame because k-images are tame.

Comparisons reduce to two questions about a tame remainder R:

    R subset of V?   False unless R is a finite set of (rational)
                     breakpoints: two rationals lie in one coset, any
                     interval or trace contains two points of one coset.
                     A single rational point inside W1 is undecidable.
    R disjoint from V?  Decided by intersecting with W1: V meets every
                     open interval of W1 and every irrationals trace in
                     W1 (V minus Q is still dense in W1); a rationals
                     trace or a finite point set inside W1 may or may
                     not catch V's single rational representative —
                     undecidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import realsets
from .realsets import TameSet, closure, complement, intersect, second_category, union
from .words import LETTERS, render_word


class Undecidable(Exception):
    """The axioms of the Vitali atom do not determine the answer."""


@dataclass(frozen=True)
class VitaliParams:
    """Session parameters of the atom: open W0 subset of W1, W1 nonempty."""

    w0: TameSet
    w1: TameSet
    kw0: TameSet
    kw1: TameSet

    @classmethod
    def make(cls, w0: TameSet, w1: TameSet) -> "VitaliParams":
        if not w0.is_open() or not w1.is_open():
            raise ValueError("W0 and W1 must be open")
        if w1.is_empty():
            raise ValueError("W1 must be nonempty")
        if not realsets.is_subset(w0, w1):
            raise ValueError("W0 must be a subset of W1")
        return cls(w0, w1, closure(w0), closure(w1))


DEFAULT_PARAMS = VitaliParams.make(realsets.interval(8, 9), realsets.interval(8, 10))

MODE_TAME = "tame"
MODE_PLUS = "plusV"
MODE_MINUS = "minusV"


@dataclass(frozen=True)
class SymbolicSet:
    base: TameSet
    mode: str = MODE_TAME
    params: VitaliParams | None = None

    def is_tame(self) -> bool:
        return self.mode == MODE_TAME

    def render(self) -> str:
        return render_symbolic(self)

    def to_json(self) -> dict:
        params = self.params if self.params is not None else DEFAULT_PARAMS
        return {
            "base": realsets.render(self.base),
            "mode": self.mode,
            "w0": realsets.render(params.w0),
            "w1": realsets.render(params.w1),
        }

    def __repr__(self):
        return f"SymbolicSet({render_symbolic(self)!r})"


def tame(base: TameSet) -> SymbolicSet:
    return SymbolicSet(base, MODE_TAME, None)


def plus_v(base: TameSet, params: VitaliParams = DEFAULT_PARAMS) -> SymbolicSet:
    """B u V, collapsed to tame when W1 (hence V) is inside B."""
    if realsets.is_subset(params.w1, base):
        return tame(base)
    return SymbolicSet(base, MODE_PLUS, params)


def minus_v(base: TameSet, params: VitaliParams = DEFAULT_PARAMS) -> SymbolicSet:
    """B minus V, collapsed to tame when B misses W1 (V lives inside open W1)."""
    if intersect(base, params.w1).is_empty():
        return tame(base)
    return SymbolicSet(base, MODE_MINUS, params)


def _params_of(*sets: SymbolicSet) -> VitaliParams:
    params = None
    for s in sets:
        if s.params is not None:
            if params is not None and params != s.params:
                raise ValueError("mixed Vitali parameters")
            params = s.params
    return params if params is not None else DEFAULT_PARAMS


# -- operator action -------------------------------------------------------


def _check_k_decidable(base: TameSet, params: VitaliParams) -> None:
    for p in base.isolated_points():
        if params.w1.contains(p):
            raise Undecidable(
                f"isolated point {p} lies inside W1: membership in V is not "
                f"determined by the atom's axioms")


def sym_apply(letter: str, s: SymbolicSet) -> SymbolicSet:
    if letter not in LETTERS:
        raise ValueError(f"unknown operator letter {letter!r}")
    if s.mode == MODE_TAME:
        return tame(realsets.apply_letter(letter, s.base))
    params = s.params
    if letter == "c":
        flip = minus_v if s.mode == MODE_PLUS else plus_v
        return flip(complement(s.base), params)
    if letter == "k":
        if s.mode == MODE_PLUS:
            return tame(union(closure(s.base), params.kw1))
        _check_k_decidable(s.base, params)
        return tame(closure(s.base))
    if letter == "d":
        if s.mode == MODE_PLUS:
            return tame(union(second_category(s.base), params.kw0))
        return tame(second_category(s.base))
    if letter == "i":
        return sym_apply("c", sym_apply("k", sym_apply("c", s)))
    # letter == "f": both closures are tame, so the frontier always is.
    k_img = sym_apply("k", s)
    kc_img = sym_apply("k", sym_apply("c", s))
    return tame(intersect(k_img.base, kc_img.base))


@lru_cache(maxsize=262144)
def _cached_apply(letter: str, s: SymbolicSet) -> SymbolicSet:
    return sym_apply(letter, s)


def apply_word(word: str, s: SymbolicSet) -> SymbolicSet:
    """Right-to-left fold of sym_apply; constants 0 and 1 are absolute."""
    cur = s
    for pos in range(len(word) - 1, -1, -1):
        ch = word[pos]
        if ch == "0":
            cur = tame(realsets.EMPTY)
        elif ch == "1":
            cur = tame(realsets.REALS)
        else:
            try:
                cur = _cached_apply(ch, cur)
            except Undecidable as exc:
                raise Undecidable(
                    f"{exc} [letter {ch!r} at position {pos + 1} of "
                    f"{render_word(word)!r}]") from None
    return cur


# -- three-valued V facts ---------------------------------------------------


def _subset_of_v(r: TameSet, params: VitaliParams):
    """Is the tame remainder r a subset of V?  True/False/None(undecidable)."""
    if r.is_empty():
        return True
    if any(g != realsets.NONE for g in r.gaps):
        return False  # any interval or trace holds two points of one coset
    points = [b for j, b in enumerate(r.breaks) if r.pts[j]]
    if len(points) > 1:
        return False  # two rationals share the coset Q; V holds at most one
    if not params.w1.contains(points[0]):
        return False  # V lies inside the open set W1
    return None


def _disjoint_from_v(r: TameSet, params: VitaliParams):
    """Is the tame set r disjoint from V?  True/False/None(undecidable)."""
    rw = intersect(r, params.w1)
    if rw.is_empty():
        return True
    if any(g in (realsets.FULL, realsets.IRRS) for g in rw.gaps):
        return False  # V (even minus its one rational) is dense in W1
    return None  # rational traces / points may or may not catch V's rational


def _and3(*vals):
    if any(v is False for v in vals):
        return False
    if any(v is None for v in vals):
        return None
    return True


def _subset3(a: SymbolicSet, b: SymbolicSet):
    params = _params_of(a, b)
    # Off V every mode reduces to its base; on V membership is mode-driven.
    off_v = _subset_of_v(realsets.difference(a.base, b.base), params)
    ma, mb = a.mode, b.mode
    if ma == MODE_MINUS or mb == MODE_PLUS:
        on_v = True
    elif ma == MODE_PLUS and mb == MODE_MINUS:
        on_v = False  # V is nonempty
    elif ma == MODE_PLUS:  # b tame: need V inside b
        on_v = _disjoint_from_v(complement(b.base), params)
    elif mb == MODE_MINUS:  # a tame: need V to miss a
        on_v = _disjoint_from_v(a.base, params)
    else:  # both tame
        on_v = _disjoint_from_v(realsets.difference(a.base, b.base), params)
    return _and3(off_v, on_v)


def _equal3(a: SymbolicSet, b: SymbolicSet):
    if a == b:
        return True
    return _and3(_subset3(a, b), _subset3(b, a))


def sym_subset(a: SymbolicSet, b: SymbolicSet) -> bool:
    res = _subset3(a, b)
    if res is None:
        raise Undecidable(
            f"subset of {render_symbolic(a)!r} in {render_symbolic(b)!r} is not "
            f"determined by the atom's axioms")
    return res


def sym_equal(a: SymbolicSet, b: SymbolicSet) -> bool:
    res = _equal3(a, b)
    if res is None:
        raise Undecidable(
            f"equality of {render_symbolic(a)!r} and {render_symbolic(b)!r} is not "
            f"determined by the atom's axioms")
    return res


def sym_compare(op: str, a: SymbolicSet, b: SymbolicSet) -> bool:
    if op == "subset":
        return sym_subset(a, b)
    if op == "equal":
        return sym_equal(a, b)
    raise ValueError(f"unknown comparison {op!r}")


# -- boolean combinations ----------------------------------------------------


def sym_union(a: SymbolicSet, b: SymbolicSet) -> SymbolicSet:
    params = _params_of(a, b)
    ma, mb = a.mode, b.mode
    if ma == MODE_TAME and mb == MODE_TAME:
        return tame(union(a.base, b.base))
    if MODE_PLUS in (ma, mb):
        # (X u V) u Y = (X u Y) u V whether or not Y subtracts V.
        return plus_v(union(a.base, b.base), params)
    if ma == MODE_MINUS and mb == MODE_MINUS:
        return minus_v(union(a.base, b.base), params)
    # minusV u tame: representable only when the tame side's relation to V is known.
    m, t = (a, b) if ma == MODE_MINUS else (b, a)
    if _disjoint_from_v(t.base, params) is True:
        return minus_v(union(m.base, t.base), params)
    if _disjoint_from_v(complement(t.base), params) is True:
        return tame(union(m.base, t.base))  # V inside the tame side
    raise Undecidable(
        f"union of {render_symbolic(m)!r} with {render_symbolic(t)!r} is not "
        f"representable: the tame part partly meets W1")


def sym_intersect(a: SymbolicSet, b: SymbolicSet) -> SymbolicSet:
    params = _params_of(a, b)
    ma, mb = a.mode, b.mode
    if ma == MODE_TAME and mb == MODE_TAME:
        return tame(intersect(a.base, b.base))
    if MODE_MINUS in (ma, mb) and MODE_TAME not in (ma, mb):
        # (X u V) & (Y - V) = (X & Y) - V ; (X-V) & (Y-V) = (X&Y) - V.
        return minus_v(intersect(a.base, b.base), params)
    if ma == MODE_PLUS and mb == MODE_PLUS:
        return plus_v(intersect(a.base, b.base), params)
    m, t = (a, b) if ma != MODE_TAME else (b, a)
    if m.mode == MODE_MINUS:
        return minus_v(intersect(m.base, t.base), params)
    # plusV & tame.
    if _disjoint_from_v(t.base, params) is True:
        return tame(intersect(m.base, t.base))
    if _disjoint_from_v(complement(t.base), params) is True:
        return plus_v(intersect(m.base, t.base), params)
    raise Undecidable(
        f"intersection of {render_symbolic(m)!r} with {render_symbolic(t)!r} is not "
        f"representable: the tame part partly meets W1")


def sym_difference(a: SymbolicSet, b: SymbolicSet) -> SymbolicSet:
    return sym_intersect(a, sym_apply("c", b))


# -- derived predicates ------------------------------------------------------


def is_meager(s: SymbolicSet) -> bool:
    """dS = empty (the d operator characterizes meagerness)."""
    return apply_word("d", s).base.is_empty()


def has_baire_property(s: SymbolicSet):
    """True / False / "unknown".

    Tame sets differ from an open set by a meager set.  A surviving
    plusV/minusV set fails the property whenever its V-part is nonmeager,
    which happens exactly when W0 minus the base (resp. base & W0) still
    has a full or irrationals gap.  When that part is provably meager the
    conservative answer is "unknown".
    """
    if s.mode == MODE_TAME:
        return True
    params = s.params
    if s.mode == MODE_PLUS:
        v_part = realsets.difference(params.w0, s.base)
    else:
        v_part = intersect(s.base, params.w0)
    if v_part.is_meager():
        return "unknown"
    return False


def distinguish(s: SymbolicSet, ops) -> tuple[int, dict[str, str]]:
    """Number of distinct images of s under the given words, plus the table."""
    reps: list[SymbolicSet] = []
    table: dict[str, str] = {}
    for w in ops:
        img = apply_word(w, s)
        if not any(sym_equal(img, r) for r in reps):
            reps.append(img)
        table[render_word(w)] = render_symbolic(img)
    return len(reps), table


def render_symbolic(s: SymbolicSet) -> str:
    if s.mode == MODE_TAME:
        return realsets.render(s.base)
    if s.mode == MODE_PLUS:
        if s.base.is_empty():
            return "V"
        return realsets.render(s.base) + " u V"
    return realsets.render(s.base) + " ∖ V"
