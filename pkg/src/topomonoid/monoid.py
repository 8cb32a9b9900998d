"""Finite monoids of operator words: enumeration, Cayley tables, parity."""

from __future__ import annotations

from dataclasses import dataclass

from .rewrite import normalize
from .rules import AxiomSystem
from .words import LETTERS, render_word, word_sort_key


@dataclass(frozen=True)
class MonoidTable:
    generators: tuple[str, ...]
    axioms: str
    elements: tuple[str, ...]  # canonical words, (length, lex) order, e first
    left_cayley: dict[str, tuple[int, ...]]   # g -> index of g*w per element w
    right_cayley: dict[str, tuple[int, ...]]  # g -> index of w*g per element w

    @property
    def index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.elements)}

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "generators": list(self.generators),
            "axioms": self.axioms,
            "count": len(self.elements),
            "elements": [render_word(w) for w in self.elements],
            "left_cayley": {g: list(row) for g, row in self.left_cayley.items()},
            "right_cayley": {g: list(row) for g, row in self.right_cayley.items()},
        }


def enumerate_monoid(gens, ax: AxiomSystem) -> MonoidTable:
    """Breadth-first closure of {e} under left multiplication by the generators.

    Any product g1...gn is reached by left-multiplying in reverse order, so
    the closure is the whole generated monoid; the result is sorted and
    therefore independent of traversal order.
    """
    gens = tuple(sorted(set(gens)))
    for g in gens:
        if g not in LETTERS:
            raise ValueError(f"unknown generator {g!r}")
    seen = {""}
    frontier = [""]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = normalize(g + w, ax)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    elements = tuple(sorted(seen, key=word_sort_key))
    index = {w: i for i, w in enumerate(elements)}

    def row(products) -> tuple[int, ...]:
        out = []
        for p in products:
            u = normalize(p, ax)
            if u not in index:
                raise ValueError(
                    f"monoid not closed: {render_word(p)} reduces to "
                    f"{render_word(u)} outside the canonical set")
            out.append(index[u])
        return tuple(out)

    left = {g: row(g + w for w in elements) for g in gens}
    right = {g: row(w + g for w in elements) for g in gens}
    return MonoidTable(gens, ax.name, elements, left, right)


def parity(word: str) -> str:
    """"even" or "odd" by complement count, with i counting as ckc (two c's).

    Only defined on the {k, i, c, d} fragment: the frontier collapse
    fc -> f merges the parities, and the constants live outside the
    grading, so f, 0 and 1 are rejected.
    """
    if any(ch in "f01" for ch in word):
        raise ValueError(f"parity is defined on the k,i,c,d fragment only: "
                         f"{render_word(word)!r}")
    return "even" if word.count("c") % 2 == 0 else "odd"
