"""Exact algebra of tame subsets of the real line.

A TameSet is a finite union of cells: intervals with rational endpoints
carrying a density kind (full, rationals-trace, irrationals-trace), plus
isolated rational points.  The family is closed under closure k, interior
i, complement c, the Baire second-category operator d, and the frontier
f, and every one of them is computed exactly — no floating point anywhere,
so structural equality of normalized sets coincides with set equality.

Internally a set is a minimal *profile*:

    breaks : strictly increasing rational breakpoints b1 < ... < bn
    gaps   : the trace of the set on each of the n+1 open gaps
             (-inf,b1), (b1,b2), ..., (bn,inf); one of NONE, FULL,
             RATS (rationals of the gap), IRRS (irrationals of the gap)
    pts    : membership of each breakpoint

Minimality: a breakpoint is kept only if the traces on its two sides
differ, or its own membership differs from what the surrounding trace
would give a rational point.  Under that invariant the profile is an
intrinsic description of the set, which is what makes equality exact.

All five operators act gap-wise and point-wise on profiles:

  * k fills every nonempty gap and adds its endpoints;
  * i keeps only FULL gaps and interior breakpoints;
  * c swaps NONE<->FULL and RATS<->IRRS and negates memberships;
  * d fills FULL and IRRS gaps (a co-countable trace is locally
    nonmeager by the Baire category theorem) and kills RATS gaps and
    points (countable, hence meager);
  * f is k intersected with k of the complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

INF = float("inf")
NEG_INF = float("-inf")

# Trace of a set on an open interval.
NONE, FULL, RATS, IRRS = range(4)

DENSITY_NAMES = {FULL: "full", RATS: "rationals", IRRS: "irrationals"}
DENSITY_CODES = {"full": FULL, "rationals": RATS, "irrationals": IRRS}

# Whether a rational point inside a gap with the given trace lies in the set.
_NATURAL = (False, True, True, False)

# Pointwise union / intersection / subset of traces on a common open gap.
_UNION = (
    (NONE, FULL, RATS, IRRS),
    (FULL, FULL, FULL, FULL),
    (RATS, FULL, RATS, FULL),
    (IRRS, FULL, FULL, IRRS),
)
_INTER = (
    (NONE, NONE, NONE, NONE),
    (NONE, FULL, RATS, IRRS),
    (NONE, RATS, RATS, NONE),
    (NONE, IRRS, NONE, IRRS),
)
_COMPL = (FULL, NONE, IRRS, RATS)
_LE = (
    (True, True, True, True),
    (False, True, False, False),
    (False, True, True, False),
    (False, True, False, True),
)


def _coerce(x) -> Fraction | float:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        if x == "inf":
            return INF
        if x == "-inf":
            return NEG_INF
        return Fraction(x)
    if isinstance(x, float):
        if x == INF or x == NEG_INF:
            return x
        raise TypeError("finite endpoints must be exact (int, Fraction or string)")
    raise TypeError(f"bad endpoint {x!r}")


@dataclass(frozen=True)
class Cell:
    """One building block: an interval trace or an isolated point."""

    lo: Fraction | float
    hi: Fraction | float
    lo_closed: bool
    hi_closed: bool
    density: str = "full"

    def __post_init__(self):
        object.__setattr__(self, "lo", _coerce(self.lo))
        object.__setattr__(self, "hi", _coerce(self.hi))
        if self.density not in DENSITY_CODES:
            raise ValueError(f"unknown density {self.density!r}")
        if self.lo == NEG_INF and self.lo_closed or self.hi == INF and self.hi_closed:
            raise ValueError("infinite endpoints must be open")
        if self.lo > self.hi:
            raise ValueError(f"empty cell: lo {self.lo} > hi {self.hi}")
        if self.lo == self.hi:
            if not (isinstance(self.lo, Fraction) and self.lo_closed and self.hi_closed
                    and self.density == "full"):
                raise ValueError("degenerate cell must be a closed full singleton")


class TameSet:
    """A normalized finite union of cells; immutable and hashable."""

    __slots__ = ("breaks", "gaps", "pts", "_hash")

    def __init__(self, breaks, gaps, pts, _trusted=False):
        if not _trusted:
            raise TypeError("use from_cells/interval/point/empty/reals constructors")
        self.breaks = breaks
        self.gaps = gaps
        self.pts = pts
        self._hash = hash((breaks, gaps, pts))

    # -- constructors -------------------------------------------------

    @staticmethod
    def _raw(breaks, gaps, pts) -> "TameSet":
        return TameSet(tuple(breaks), tuple(gaps), tuple(pts), _trusted=True)

    @staticmethod
    def from_cells(cells: Iterable[Cell]) -> "TameSet":
        """Normalize an arbitrary (possibly overlapping) cell collection."""
        cells = list(cells)
        breaks = sorted({c.lo for c in cells if isinstance(c.lo, Fraction)}
                        | {c.hi for c in cells if isinstance(c.hi, Fraction)})
        gaps = []
        for i in range(len(breaks) + 1):
            lo = breaks[i - 1] if i > 0 else NEG_INF
            hi = breaks[i] if i < len(breaks) else INF
            t = NONE
            for c in cells:
                if c.lo <= lo and hi <= c.hi and c.lo < c.hi:
                    t = _UNION[t][DENSITY_CODES[c.density]]
            gaps.append(t)
        pts = [any(_cell_contains(c, b) for c in cells) for b in breaks]
        return _from_profile(breaks, gaps, pts)

    # -- basic protocol ------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, TameSet) and self.breaks == other.breaks
                and self.gaps == other.gaps and self.pts == other.pts)

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return any(self.pts) or any(g != NONE for g in self.gaps)

    def __repr__(self):
        return f"TameSet({render(self)!r})"

    # -- set operations --------------------------------------------------

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return complement(self)

    def is_empty(self) -> bool:
        return not self

    def contains(self, x) -> bool:
        x = _coerce(x)
        if not isinstance(x, Fraction):
            raise ValueError("membership is decided only at rational points")
        lo = 0
        for j, b in enumerate(self.breaks):
            if x == b:
                return self.pts[j]
            if x < b:
                break
            lo = j + 1
        return _NATURAL[self.gaps[lo]]

    @property
    def cells(self) -> tuple[Cell, ...]:
        return _cells(self)

    def render(self) -> str:
        return render(self)

    def is_open(self) -> bool:
        return self == interior(self)

    def is_closed(self) -> bool:
        return self == closure(self)

    def is_meager(self) -> bool:
        """Syntactic test: only rational traces and isolated points (countable)."""
        return all(g in (NONE, RATS) for g in self.gaps)

    def isolated_points(self) -> tuple[Fraction, ...]:
        return tuple(b for j, b in enumerate(self.breaks)
                     if self.pts[j] and self.gaps[j] == NONE and self.gaps[j + 1] == NONE)


def _cell_contains(c: Cell, p: Fraction) -> bool:
    if c.lo < p < c.hi:
        return c.density in ("full", "rationals")
    if (p == c.lo and c.lo_closed) or (p == c.hi and c.hi_closed):
        # Breakpoints are rational, so a closed endpoint of an
        # irrationals-trace contributes nothing.
        return c.density in ("full", "rationals")
    return False


def _from_profile(breaks: Sequence, gaps: Sequence[int], pts: Sequence[bool]) -> TameSet:
    keep = [j for j in range(len(breaks))
            if gaps[j] != gaps[j + 1] or pts[j] != _NATURAL[gaps[j]]]
    if len(keep) == len(breaks):
        return TameSet._raw(breaks, gaps, pts)
    new_breaks = [breaks[j] for j in keep]
    new_gaps = [gaps[0]] + [gaps[j + 1] for j in keep]
    new_pts = [pts[j] for j in keep]
    return TameSet._raw(new_breaks, new_gaps, new_pts)


EMPTY = TameSet._raw((), (NONE,), ())
REALS = TameSet._raw((), (FULL,), ())
RATIONALS = TameSet._raw((), (RATS,), ())
IRRATIONALS = TameSet._raw((), (IRRS,), ())


def interval(lo, hi, lo_closed=False, hi_closed=False, density="full") -> TameSet:
    return TameSet.from_cells([Cell(lo, hi, lo_closed, hi_closed, density)])


def point(x) -> TameSet:
    return TameSet.from_cells([Cell(x, x, True, True, "full")])


def empty() -> TameSet:
    return EMPTY


def reals() -> TameSet:
    return REALS


def normalize_cells(cells: Iterable[Cell]) -> TameSet:
    """Canonical form of an arbitrary cell list (alias of TameSet.from_cells)."""
    return TameSet.from_cells(cells)


# -- profile combinators -------------------------------------------------


def _expand(s: TameSet, breaks: Sequence) -> tuple[list[int], list[bool]]:
    gaps, pts = [], []
    j = 0
    for b in breaks:
        gaps.append(s.gaps[j])
        if j < len(s.breaks) and b == s.breaks[j]:
            pts.append(s.pts[j])
            j += 1
        else:
            pts.append(_NATURAL[s.gaps[j]])
    gaps.append(s.gaps[j])
    return gaps, pts


def _merged_breaks(a: TameSet, b: TameSet):
    if a.breaks == b.breaks:
        return a.breaks
    return sorted(set(a.breaks) | set(b.breaks))


def _combine(a: TameSet, b: TameSet, table, pt_op) -> TameSet:
    breaks = _merged_breaks(a, b)
    ga, pa = _expand(a, breaks)
    gb, pb = _expand(b, breaks)
    gaps = [table[x][y] for x, y in zip(ga, gb)]
    pts = [pt_op(x, y) for x, y in zip(pa, pb)]
    return _from_profile(breaks, gaps, pts)


def union(a: TameSet, b: TameSet) -> TameSet:
    return _combine(a, b, _UNION, lambda x, y: x or y)


def intersect(a: TameSet, b: TameSet) -> TameSet:
    return _combine(a, b, _INTER, lambda x, y: x and y)


def difference(a: TameSet, b: TameSet) -> TameSet:
    return intersect(a, complement(b))


def complement(s: TameSet) -> TameSet:
    return _from_profile(
        s.breaks,
        [_COMPL[g] for g in s.gaps],
        [not p for p in s.pts],
    )


def is_subset(a: TameSet, b: TameSet) -> bool:
    breaks = _merged_breaks(a, b)
    ga, pa = _expand(a, breaks)
    gb, pb = _expand(b, breaks)
    return (all(_LE[x][y] for x, y in zip(ga, gb))
            and all((not x) or y for x, y in zip(pa, pb)))


# -- the five operators ----------------------------------------------------


def closure(s: TameSet) -> TameSet:
    gaps = [FULL if g != NONE else NONE for g in s.gaps]
    pts = [s.pts[j] or s.gaps[j] != NONE or s.gaps[j + 1] != NONE
           for j in range(len(s.breaks))]
    return _from_profile(s.breaks, gaps, pts)


def interior(s: TameSet) -> TameSet:
    gaps = [FULL if g == FULL else NONE for g in s.gaps]
    pts = [s.pts[j] and s.gaps[j] == FULL and s.gaps[j + 1] == FULL
           for j in range(len(s.breaks))]
    return _from_profile(s.breaks, gaps, pts)


def second_category(s: TameSet) -> TameSet:
    """The Baire operator d: points whose every neighborhood meets s nonmeagerly.

    Gap-wise: a FULL or IRRS gap is locally nonmeager everywhere in its
    closed span (for IRRS because a co-countable subset of an interval is
    comeager there, and nonmeager by the Baire category theorem); a RATS
    gap and isolated points are countable, hence meager, and vanish.
    Finite additivity of d makes the gap-wise computation exact.
    """
    filled = [g in (FULL, IRRS) for g in s.gaps]
    gaps = [FULL if f else NONE for f in filled]
    pts = [filled[j] or filled[j + 1] for j in range(len(s.breaks))]
    return _from_profile(s.breaks, gaps, pts)


def frontier(s: TameSet) -> TameSet:
    return intersect(closure(s), closure(complement(s)))


_LETTER_OPS = {
    "k": closure,
    "i": interior,
    "c": complement,
    "d": second_category,
    "f": frontier,
}


def apply_letter(letter: str, s: TameSet) -> TameSet:
    try:
        op = _LETTER_OPS[letter]
    except KeyError:
        raise ValueError(f"unknown operator letter {letter!r}") from None
    return op(s)


# -- rendering ------------------------------------------------------------


def _fmt(x) -> str:
    if x == INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    return str(x)


def _cells(s: TameSet) -> tuple[Cell, ...]:
    bs: list = [NEG_INF, *s.breaks, INF]
    n = len(s.breaks)
    out: list[Cell] = []
    for j in range(n + 1):
        if j > 0 and s.pts[j - 1] and s.gaps[j - 1] != FULL and s.gaps[j] != FULL:
            out.append(Cell(bs[j], bs[j], True, True, "full"))
        g = s.gaps[j]
        if g == NONE:
            continue
        lo, hi = bs[j], bs[j + 1]
        if g == FULL:
            lo_cl = j > 0 and s.pts[j - 1] and s.gaps[j - 1] != FULL
            hi_cl = j < n and s.pts[j]
            out.append(Cell(lo, hi, lo_cl, hi_cl, "full"))
        else:
            out.append(Cell(lo, hi, False, False, DENSITY_NAMES[g]))
    return tuple(out)


def _render_cell(c: Cell) -> str:
    if c.lo == c.hi:
        return "{%s}" % _fmt(c.lo)
    body = "%s%s,%s%s" % ("[" if c.lo_closed else "(", _fmt(c.lo),
                          _fmt(c.hi), "]" if c.hi_closed else ")")
    if c.density == "rationals":
        return "Q" + body
    if c.density == "irrationals":
        return "I" + body
    return body


def render(s: TameSet) -> str:
    """Canonical text form, e.g. "[1,3] u {4} u Q(5,6) u I(6,7)"; "{}" is empty."""
    cs = _cells(s)
    if not cs:
        return "{}"
    return " u ".join(_render_cell(c) for c in cs)
