"""The pointwise partial order o1 <= o2 (o1 A inside o2 A for every A).

Two independent constructions that must agree at acceptance:

  * proved_relation — the closure of a small set of proved generator
    inequalities under transitivity, left composition by the monotone
    operators k, i, d, order reversal under a left c, right composition
    by any word, and normalization;
  * corpus_relation — the over-approximation "not refuted by any corpus
    witness", which shrinks toward the true order as witnesses are added.

Soundness (proved inside corpus, entrywise) is an invariant; equality on
the even operators is an acceptance criterion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monoid import enumerate_monoid
from .rewrite import normalize
from .rules import AxiomSystem
from .vitali import SymbolicSet, Undecidable, apply_word, render_symbolic, sym_subset
from .words import render_word, word_sort_key

# Proved generator inequalities: extensivity/contraction of closure and
# interior, then d <= kik, iki <= cdc, cdc <= id, cdc <= cidc, ki <= cidc,
# cidc <= d.
PROVED_SEEDS = (
    ("i", ""),
    ("", "k"),
    ("d", "kik"),
    ("iki", "cdc"),
    ("cdc", "id"),
    ("cdc", "cidc"),
    ("ki", "cidc"),
    ("cidc", "d"),
)


@dataclass
class OrderRelation:
    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    provenance: str  # proved-chain | corpus-only
    notes: tuple[str, ...] = ()

    def index(self, word: str) -> int:
        return self.elements.index(word)

    def holds(self, a: str, b: str) -> bool:
        return self.leq[self.index(a)][self.index(b)]

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "elements": [render_word(w) for w in self.elements],
            "leq": [list(row) for row in self.leq],
            "provenance": [[self.provenance if v else None for v in row]
                           for row in self.leq],
            "notes": list(self.notes),
        }


def _check_canonical(elements, ax: AxiomSystem) -> None:
    for w in elements:
        if normalize(w, ax) != w:
            raise ValueError(f"element {render_word(w)!r} is not canonical under {ax.name}")


def proved_relation(elements, ax: AxiomSystem) -> OrderRelation:
    """Reflexive-transitive closure of the proved inequalities, restricted."""
    elements = tuple(elements)
    _check_canonical(elements, ax)
    ambient = enumerate_monoid("kcd", ax).elements
    index = {w: j for j, w in enumerate(ambient)}
    for w in elements:
        if w not in index:
            raise ValueError(f"{render_word(w)!r} is outside the k,c,d monoid")
    n = len(ambient)
    leq = [[i == j for j in range(n)] for i in range(n)]
    stack = []

    def add(u: str, v: str) -> None:
        iu, iv = index[u], index[v]
        if not leq[iu][iv]:
            leq[iu][iv] = True
            stack.append((iu, iv))

    for lhs, rhs in PROVED_SEEDS:
        add(normalize(lhs, ax), normalize(rhs, ax))
    while stack:
        iu, iv = stack.pop()
        u, v = ambient[iu], ambient[iv]
        for g in "kid":  # monotone left compositions
            add(normalize(g + u, ax), normalize(g + v, ax))
        add(normalize("c" + v, ax), normalize("c" + u, ax))  # c reverses
        for w in ambient:  # right composition is pointwise-immediate
            add(normalize(u + w, ax), normalize(v + w, ax))
        for j in range(n):  # transitivity through the new pair
            if leq[iv][j]:
                add(u, ambient[j])
            if leq[j][iu]:
                add(ambient[j], v)
    rows = tuple(
        tuple(leq[index[a]][index[b]] for b in elements) for a in elements)
    return OrderRelation(elements, rows, "proved-chain")


def corpus_relation(elements, corpus_sets) -> OrderRelation:
    """leq(a, b) iff no corpus witness refutes aS inside bS; skips undecidables."""
    elements = tuple(elements)
    corpus_sets = list(corpus_sets)
    notes: list[str] = []
    images: dict[tuple[int, int], SymbolicSet | None] = {}
    for si, s in enumerate(corpus_sets):
        for wi, w in enumerate(elements):
            try:
                images[(si, wi)] = apply_word(w, s)
            except Undecidable:
                images[(si, wi)] = None
                notes.append(f"{render_word(w)} not evaluable on {render_symbolic(s)}")
    rows = []
    for ai, a in enumerate(elements):
        row = []
        for bi, b in enumerate(elements):
            holds = True
            for si, s in enumerate(corpus_sets):
                left, right = images[(si, ai)], images[(si, bi)]
                if left is None or right is None:
                    continue
                try:
                    if not sym_subset(left, right):
                        holds = False
                        break
                except Undecidable:
                    notes.append(
                        f"{render_word(a)} <= {render_word(b)} undecided on "
                        f"{render_symbolic(s)}; decided by the rest of the corpus")
                    continue
            row.append(holds)
        rows.append(tuple(row))
    return OrderRelation(elements, tuple(rows), "corpus-only", tuple(notes))


def hasse(rel: OrderRelation) -> list[tuple[str, str]]:
    """Transitive reduction: edge a -> b means a < b with nothing in between."""
    els = rel.elements
    n = len(els)
    leq = rel.leq
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise ValueError(
                    f"not antisymmetric: {render_word(els[i])} and {render_word(els[j])} "
                    f"compare both ways (canonicalization bug)")
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            if any(k not in (i, j) and leq[i][k] and leq[k][j] for k in range(n)):
                continue
            edges.append((els[i], els[j]))
    edges.sort(key=lambda e: (word_sort_key(e[0]), word_sort_key(e[1])))
    return edges


def emit_dot(edges, nodes) -> str:
    """Deterministic DOT digraph; isolated nodes are kept."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for w in nodes:
        lines.append(f'  "{render_word(w)}";')
    for a, b in edges:
        lines.append(f'  "{render_word(a)}" -> "{render_word(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
