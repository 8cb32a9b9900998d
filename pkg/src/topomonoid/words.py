"""Operator words over the letters k, i, c, d, f.

A word is a plain string of letters, applied right to left: "kc" maps a
set A to k(cA).  The empty string is the identity operator and renders as
"e".  Two constant operators exist as one-character words: "0" (sends
every set to the empty set) and "1" (sends every set to the whole line);
they only stand alone in parsed input, although they may appear inside
intermediate words during rewriting.
"""

from __future__ import annotations

LETTERS = "kicdf"
CONSTANTS = "01"
IDENTITY = ""


class ParseError(ValueError):
    """Input rejected by a parser; `position` is 1-based in the original text."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)
        self.position = position


def parse_word(text: str) -> str:
    """Parse an operator word.  Whitespace is ignored; "e", "0", "1" must stand alone."""
    found: list[tuple[str, int]] = []
    for pos, ch in enumerate(text, start=1):
        if ch.isspace():
            continue
        if ch in LETTERS or ch in CONSTANTS or ch == "e":
            found.append((ch, pos))
        else:
            raise ParseError(f"unknown character {ch!r}", position=pos)
    if not found:
        return IDENTITY
    for ch, pos in found:
        if ch in "e01" and len(found) > 1:
            raise ParseError(f"{ch!r} only stands alone as a whole word", position=pos)
    if len(found) == 1 and found[0][0] == "e":
        return IDENTITY
    return "".join(ch for ch, _ in found)


def render_word(word: str) -> str:
    """Inverse of parse_word on canonical words; the identity renders as "e"."""
    return word if word else "e"


def check_word(word: str) -> None:
    """Reject strings that are not valid internal words.

    Constants may appear inside intermediate words (products like c*1
    arise during enumeration); parse_word alone keeps them standalone.
    """
    for ch in word:
        if ch not in LETTERS and ch not in CONSTANTS:
            raise ValueError(f"not an operator word: {word!r}")


def word_sort_key(word: str) -> tuple[int, str]:
    """Deterministic (length, lexicographic) element order; identity first."""
    return (len(word), word)
