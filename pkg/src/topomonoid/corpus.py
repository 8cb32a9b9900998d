"""Canonical witness sets, seeded random tame sets, and the set-expression DSL.

Grammar of the DSL (whitespace-insensitive):

    set      := term ("u" term)*  [ "∖" "V" ]      backslash accepted too
    term     := interval | "{" num "}" | "{}" | "Q" interval | "I" interval | "V"
    interval := ("(" | "[") num "," num (")" | "]")
    num      := rational ("3", "-7/2", "0.5") | "-inf" | "inf"

"V" joins the Vitali atom (at most once); the trailing "minus V" form
builds the complementary mode.  "{}" denotes the empty set, which is
also how the empty set renders.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from . import realsets
from .realsets import Cell, TameSet
from .vitali import (DEFAULT_PARAMS, SymbolicSet, VitaliParams, minus_v, plus_v,
                     render_symbolic, tame)
from .words import ParseError

A18_TEXT = "(1,2) u (2,3) u {4} u Q(5,6) u I(6,7)"

WITNESS_NAMES = ("A18", "A22", "V", "cV", "empty", "full")


def witness(name: str, params: VitaliParams = DEFAULT_PARAMS) -> SymbolicSet:
    base18 = parse_set_dsl(A18_TEXT, params).base
    if name == "A18":
        return tame(base18)
    if name == "A22":
        return plus_v(base18, params)
    if name == "V":
        return plus_v(realsets.EMPTY, params)
    if name == "cV":
        return minus_v(realsets.REALS, params)
    if name == "empty":
        return tame(realsets.EMPTY)
    if name == "full":
        return tame(realsets.REALS)
    raise ValueError(f"unknown witness {name!r} (expected one of {WITNESS_NAMES})")


@dataclass(frozen=True)
class Corpus:
    named: dict[str, SymbolicSet]
    random: tuple[TameSet, ...]
    seed: int = 0

    def all_sets(self) -> list[SymbolicSet]:
        return list(self.named.values()) + [tame(s) for s in self.random]

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "seed": self.seed,
            "named": {name: s.render() for name, s in self.named.items()},
            "random": [{"seed": self.seed + j, "set": realsets.render(s)}
                       for j, s in enumerate(self.random)],
        }


def build_corpus(size: int = 1000, seed: int = 1729,
                 params: VitaliParams = DEFAULT_PARAMS) -> Corpus:
    named = {name: witness(name, params) for name in WITNESS_NAMES}
    randoms = tuple(random_tame(seed + j, 4) for j in range(size))
    return Corpus(named, randoms, seed)


# -- random generation --------------------------------------------------------

_GRID_SPAN = 10   # endpoints in [-10, 10]
_MAX_DEN = 8


def _grid_value(rng: random.Random) -> Fraction:
    den = rng.randint(1, _MAX_DEN)
    return Fraction(rng.randint(-_GRID_SPAN * den, _GRID_SPAN * den), den)


def random_tame(seed: int, n: int = 4) -> TameSet:
    """Deterministic for fixed (seed, n); at most n cells after normalization.

    Cells are laid over consecutive points of a sorted draw so spans never
    properly overlap, but shared endpoints (touching cells, isolated points
    on trace boundaries) occur often enough to exercise the merge logic.
    """
    if n < 1:
        raise ValueError("cell bound must be at least 1")
    rng = random.Random(f"tame:{seed}:{n}")
    k = rng.randint(1, n)
    points = sorted({_grid_value(rng) for _ in range(2 * k)})
    cells: list[Cell] = []
    for j in range(0, len(points) - 1, 2 if rng.random() < 0.5 else 1):
        if len(cells) >= k:
            break
        lo, hi = points[j], points[j + 1]
        roll = rng.random()
        if roll < 0.12:
            cells.append(Cell(lo, lo, True, True, "full"))
        elif roll < 0.55:
            cells.append(Cell(lo, hi, rng.random() < 0.5, rng.random() < 0.5, "full"))
        elif roll < 0.8:
            cells.append(Cell(lo, hi, False, False, "rationals"))
        else:
            cells.append(Cell(lo, hi, False, False, "irrationals"))
    if not cells:
        cells.append(Cell(points[0], points[0], True, True, "full"))
    return TameSet.from_cells(cells)


# -- DSL parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"""
    \s*(?:
      (?P<num>-?\d+(?:/\d+|\.\d+)?|-inf|inf)
    | (?P<punct>[(){}\[\],uQIV]|∖|\\)
    )""", re.VERBOSE)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].isspace():
                break
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos + 1)
        if m.group("num"):
            out.append(("num", m.group("num"), m.start("num") + 1))
        elif m.group("punct"):
            out.append(("punct", m.group("punct"), m.start("punct") + 1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def take(self, value=None, kind=None):
        tok_kind, tok_val, pos = self.peek()
        if tok_kind is None:
            raise ParseError("unexpected end of set expression")
        if value is not None and tok_val != value or kind is not None and tok_kind != kind:
            raise ParseError(f"unexpected token {tok_val!r}", position=pos)
        self.i += 1
        return tok_val, pos

    def number(self):
        val, pos = self.take(kind="num")
        if val == "inf":
            return realsets.INF, pos
        if val == "-inf":
            return realsets.NEG_INF, pos
        return Fraction(val), pos

    def interval(self, density: str) -> Cell:
        opener, pos = self.take(kind="punct")
        if opener not in "([":
            raise ParseError(f"expected an interval, got {opener!r}", position=pos)
        lo, lo_pos = self.number()
        self.take(value=",")
        hi, _ = self.number()
        closer, cpos = self.take(kind="punct")
        if closer not in ")]":
            raise ParseError(f"expected ')' or ']', got {closer!r}", position=cpos)
        lo_closed, hi_closed = opener == "[", closer == "]"
        if lo > hi:
            raise ParseError(f"malformed interval: {lo} > {hi}", position=lo_pos)
        if lo == hi and not (lo_closed and hi_closed):
            raise ParseError("degenerate interval must be closed on both ends",
                             position=lo_pos)
        try:
            return Cell(lo, hi, lo_closed, hi_closed, density)
        except ValueError as exc:
            raise ParseError(str(exc), position=lo_pos) from None


def parse_set_dsl(text: str, params: VitaliParams = DEFAULT_PARAMS) -> SymbolicSet:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty set expression")
    p = _Parser(tokens)
    cells: list[Cell] = []
    v_count = 0
    minus_mode = False

    def term():
        nonlocal v_count
        kind, val, pos = p.peek()
        if val == "V":
            p.take()
            v_count += 1
            if v_count > 1:
                raise ParseError("at most one V term", position=pos)
            return
        if val in ("Q", "I"):
            p.take()
            cells.append(p.interval("rationals" if val == "Q" else "irrationals"))
            return
        if val == "{":
            p.take()
            if p.peek()[1] == "}":
                p.take()
                return  # "{}": the empty set contributes nothing
            x, _ = p.number()
            p.take(value="}")
            cells.append(Cell(x, x, True, True, "full"))
            return
        if val in "([":
            cells.append(p.interval("full"))
            return
        raise ParseError(f"expected a set term, got {val!r}", position=pos)

    term()
    while True:
        kind, val, pos = p.peek()
        if val == "u":
            p.take()
            term()
            continue
        if val in ("∖", "\\"):
            p.take()
            _, vpos = p.take(value="V")
            if v_count:
                raise ParseError("V cannot appear on both sides", position=vpos)
            minus_mode = True
            kind, val, pos = p.peek()
            if kind is not None:
                raise ParseError(f"trailing input {val!r}", position=pos)
            break
        if kind is None:
            break
        raise ParseError(f"expected 'u' between terms, got {val!r}", position=pos)

    base = TameSet.from_cells(cells)
    if minus_mode:
        return minus_v(base, params)
    if v_count:
        return plus_v(base, params)
    return tame(base)


def render_set(s: SymbolicSet) -> str:
    return render_symbolic(s)
