"""Conservative classification of a word's output sets.

infer_kind(w) returns a Kind K such that the image of *every* input set
under w has property K.  Kinds drive the guarded rule schemas: a schema
like "drop a leading k when the rest of the word has closed output" is
only sound because the classification is conservative (ARBITRARY when
nothing stronger is known).

The kinds do not form a chain.  A nonempty nowhere-dense closed set is
closed but not regular closed, and a dense open proper subset is open but
not regular open, so `satisfies` encodes the true implication lattice
rather than a linear order.
"""

from __future__ import annotations

from enum import Enum

from .words import LETTERS


class Kind(Enum):
    ARBITRARY = "arbitrary"
    OPEN = "open"
    CLOSED = "closed"
    REG_OPEN = "regular-open"
    REG_CLOSED = "regular-closed"
    NWD_CLOSED = "nwd-closed"
    DENSE_OPEN = "dense-open"
    EMPTY = "empty"
    FULL = "full"


_K = Kind

# What each kind implies.  satisfies(k, req) == (req in _IMPLIES[k]).
_IMPLIES: dict[Kind, frozenset[Kind]] = {
    _K.ARBITRARY: frozenset({_K.ARBITRARY}),
    _K.OPEN: frozenset({_K.ARBITRARY, _K.OPEN}),
    _K.CLOSED: frozenset({_K.ARBITRARY, _K.CLOSED}),
    _K.REG_OPEN: frozenset({_K.ARBITRARY, _K.OPEN, _K.REG_OPEN}),
    _K.REG_CLOSED: frozenset({_K.ARBITRARY, _K.CLOSED, _K.REG_CLOSED}),
    _K.NWD_CLOSED: frozenset({_K.ARBITRARY, _K.CLOSED, _K.NWD_CLOSED}),
    _K.DENSE_OPEN: frozenset({_K.ARBITRARY, _K.OPEN, _K.DENSE_OPEN}),
    _K.EMPTY: frozenset(
        {_K.ARBITRARY, _K.OPEN, _K.CLOSED, _K.REG_OPEN, _K.REG_CLOSED,
         _K.NWD_CLOSED, _K.EMPTY}
    ),
    _K.FULL: frozenset(
        {_K.ARBITRARY, _K.OPEN, _K.CLOSED, _K.REG_OPEN, _K.REG_CLOSED,
         _K.DENSE_OPEN, _K.FULL}
    ),
}


def satisfies(kind: Kind, requirement: Kind) -> bool:
    """True when a set of the given kind necessarily meets the requirement."""
    return requirement in _IMPLIES[kind]


def _dual(kind: Kind) -> Kind:
    return {
        _K.OPEN: _K.CLOSED, _K.CLOSED: _K.OPEN,
        _K.REG_OPEN: _K.REG_CLOSED, _K.REG_CLOSED: _K.REG_OPEN,
        _K.NWD_CLOSED: _K.DENSE_OPEN, _K.DENSE_OPEN: _K.NWD_CLOSED,
        _K.EMPTY: _K.FULL, _K.FULL: _K.EMPTY,
        _K.ARBITRARY: _K.ARBITRARY,
    }[kind]


def _step_k(kind: Kind) -> Kind:
    if kind in (_K.EMPTY, _K.FULL, _K.NWD_CLOSED, _K.CLOSED, _K.REG_CLOSED):
        return kind  # closure fixes closed sets
    if kind is _K.DENSE_OPEN:
        return _K.FULL
    if kind in (_K.OPEN, _K.REG_OPEN):
        return _K.REG_CLOSED
    return _K.CLOSED


def _step_i(kind: Kind) -> Kind:
    if kind in (_K.EMPTY, _K.FULL, _K.DENSE_OPEN, _K.OPEN, _K.REG_OPEN):
        return kind  # interior fixes open sets
    if kind is _K.NWD_CLOSED:
        return _K.EMPTY
    if kind in (_K.CLOSED, _K.REG_CLOSED):
        return _K.REG_OPEN
    return _K.OPEN


def _step_d(kind: Kind) -> Kind:
    # d-images are regular closed; meager inputs die, locally comeager ones fill.
    if kind in (_K.EMPTY, _K.NWD_CLOSED):
        return _K.EMPTY
    if kind in (_K.FULL, _K.DENSE_OPEN):
        return _K.FULL
    return _K.REG_CLOSED


def _step_f(kind: Kind) -> Kind:
    if kind in (_K.EMPTY, _K.FULL):
        return _K.EMPTY
    if kind is _K.ARBITRARY:
        return _K.CLOSED
    # The frontier of an open or closed set is nowhere dense.
    return _K.NWD_CLOSED


_STEPS = {"k": _step_k, "i": _step_i, "c": _dual, "d": _step_d, "f": _step_f}


def infer_kind(word: str) -> Kind:
    """Kind of the image of an arbitrary set under `word` (fold right to left)."""
    kind = _K.ARBITRARY
    for ch in reversed(word):
        if ch == "0":
            kind = _K.EMPTY
        elif ch == "1":
            kind = _K.FULL
        elif ch in LETTERS:
            kind = _STEPS[ch](kind)
        else:
            raise ValueError(f"not an operator word: {word!r}")
    return kind
