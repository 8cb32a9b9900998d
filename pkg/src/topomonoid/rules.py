"""Oriented rewrite rules and kind-guarded schemas for operator words.

Tiers:

  BASE  — identities valid for every subset of a Polish space assuming
          only dependent choice (Baire category theorem);
  PB    — one extra orientation, dc -> cid, valid when every set has the
          Baire property; it collapses the four dc-block words;
  CONST — absorption by the constant operators 0 and 1.

Orientation policy: c migrates leftward (DeMorgan rules kc -> ci and
ic -> ck), so canonical words carry at most one leading c plus, under
BASE only, irreducible trailing "dc" blocks.  Between equals the shorter
spelling wins, ties by the lexicographic order c < d < f < i < k.

Every rule and every schema instance is semantically validated against
the witness corpus by rewrite.validate_rules before being trusted; the
identities whose commonly printed forms fail that validation are listed
in TYPO_LEDGER together with the corrected forms actually shipped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kinds import Kind


@dataclass(frozen=True)
class RewriteRule:
    lhs: str
    rhs: str
    tier: str  # BASE | PB | CONST
    provenance: str
    status: str  # classical | derived


@dataclass(frozen=True)
class RuleSchema:
    """Prefix rewrite guarded by the kind of the entire remaining suffix."""

    name: str
    prefix: str
    replacement: str
    guard: tuple[Kind, ...]  # fires when the suffix kind satisfies any of these
    provenance: str


@dataclass(frozen=True)
class AxiomSystem:
    name: str
    rules: tuple[RewriteRule, ...]
    schemas: tuple[RuleSchema, ...]


def _r(lhs, rhs, tier, provenance, status="classical"):
    return RewriteRule(lhs, rhs, tier, provenance, status)


_BASE_CORE = (
    _r("cc", "", "BASE", "complement is an involution"),
    _r("kk", "k", "BASE", "closure is idempotent"),
    _r("ii", "i", "BASE", "interior is idempotent"),
    _r("kc", "ci", "BASE", "DeMorgan: closure of a complement is the complement of the interior"),
    _r("ic", "ck", "BASE", "DeMorgan: interior of a complement is the complement of the closure"),
    _r("kiki", "ki", "BASE", "classical closure-interior collapse"),
    _r("ikik", "ik", "BASE", "classical interior-closure collapse"),
    _r("kd", "d", "BASE", "d-images are closed"),
    _r("dd", "d", "BASE", "d is idempotent"),
    _r("di", "ki", "BASE", "on open sets d is the closure"),
    _r("dk", "kik", "BASE", "d of a closure: the nowhere-dense rim kA-ikA is d-null"),
    _r("kid", "d", "BASE", "d-images are regular closed"),
    # dc-blocks followed by a letter reduce via the kind of the suffix.
    _r("dcd", "kcd", "BASE", "cd-images are open, where d acts as closure", "derived"),
    _r("dck", "kck", "BASE", "ck-images are open", "derived"),
    _r("dcf", "kcf", "BASE", "cf-images are open", "derived"),
    _r("dci", "kikci", "BASE", "ci-images are closed, where d acts as kik", "derived"),
)

_BASE_FRONTIER = (
    _r("fff", "ff", "BASE", "double frontiers are nowhere dense, and f fixes them"),
    _r("fc", "f", "BASE", "a set and its complement share their frontier"),
    _r("kf", "f", "BASE", "frontier images are closed"),
    _r("ffk", "fk", "BASE", "frontier of a closed set is nowhere dense, and f fixes it"),
    _r("ifk", "0", "BASE", "frontier of a closed set has empty interior"),
    _r("df", "kif", "BASE", "frontier images are closed, where d acts as ki"),
    _r("fid", "fd", "BASE", "d-images are regular closed; i preserves their frontier"),
    _r("dfk", "0", "BASE", "frontier of a closed set is nowhere dense, hence meager"),
    _r("ffd", "fd", "BASE", "frontier of the closed d-image is nowhere dense", "derived"),
    _r("ffi", "fi", "BASE", "frontier of an open set is nowhere dense", "derived"),
    _r("ifd", "0", "BASE", "frontier of the closed d-image has empty interior", "derived"),
    _r("ifi", "0", "BASE", "frontier of an open set has empty interior", "derived"),
    _r("iff", "0", "BASE", "frontier of the closed f-image has empty interior", "derived"),
    _r("ikif", "if", "BASE", "if-images are regular open (interior of a closed set)", "derived"),
    _r("fkif", "fif", "BASE", "if-images are regular open; fk collapses to f on them", "derived"),
    # The transposed spellings fkik->fki / fiki->fik circulate in print;
    # the exact evaluator refutes them (see TYPO_LEDGER) and validates these.
    _r("fkik", "fik", "BASE", "ik-images are regular open; fk collapses to f on them", "derived"),
    _r("fiki", "fki", "BASE", "ki-images are regular closed; fi collapses to f on them", "derived"),
)

_CONST = tuple(
    [_r("0" + x, "0", "CONST", "constant operators absorb on the right") for x in "kicdf"]
    + [_r("1" + x, "1", "CONST", "constant operators absorb on the right") for x in "kicdf"]
    + [
        _r("k0", "0", "CONST", "closure of the empty set"),
        _r("i0", "0", "CONST", "interior of the empty set"),
        _r("d0", "0", "CONST", "the empty set is meager"),
        _r("f0", "0", "CONST", "frontier of the empty set"),
        _r("c0", "1", "CONST", "complement of the empty set"),
        _r("k1", "1", "CONST", "closure of the full space"),
        _r("i1", "1", "CONST", "interior of the full space"),
        _r("d1", "1", "CONST", "the full space is everywhere nonmeager"),
        _r("f1", "0", "CONST", "frontier of the full space"),
        _r("c1", "0", "CONST", "complement of the full space"),
    ]
)

_PB_EXTRA = (
    _r("dc", "cid", "PB", "with every set Baire-measurable, dc = cid"),
)

_K = Kind

SCHEMAS = (
    RuleSchema("G1", "k", "", (_K.CLOSED,), "closure fixes closed images"),
    RuleSchema("G2", "i", "", (_K.OPEN,), "interior fixes open images"),
    RuleSchema("G3", "d", "k", (_K.OPEN,), "on open images d is the closure"),
    RuleSchema("G4", "d", "ki", (_K.CLOSED,), "on closed images d acts as ki"),
    RuleSchema("G5", "if", "0", (_K.OPEN, _K.CLOSED),
               "frontier of an open or closed image has empty interior"),
    RuleSchema("G6", "ff", "f", (_K.OPEN, _K.CLOSED),
               "frontier of an open or closed image is nowhere dense; f fixes it"),
    RuleSchema("G7", "kik", "k", (_K.OPEN,), "kik collapses to k on open images"),
    RuleSchema("G8", "iki", "i", (_K.CLOSED,), "iki collapses to i on closed images"),
    RuleSchema("G9", "fi", "f", (_K.REG_CLOSED,),
               "interior of a regular-closed image has the same frontier"),
    RuleSchema("G10", "fk", "f", (_K.REG_OPEN,),
               "closure of a regular-open image has the same frontier"),
    RuleSchema("G11d", "d", "0", (_K.NWD_CLOSED, _K.EMPTY),
               "nowhere-dense closed images are meager, hence d-null"),
    RuleSchema("G11i", "i", "0", (_K.NWD_CLOSED, _K.EMPTY),
               "nowhere-dense closed images have empty interior"),
    RuleSchema("G12", "k", "1", (_K.DENSE_OPEN, _K.FULL),
               "dense images close to the whole space"),
)

BASE = AxiomSystem("BASE", _BASE_CORE + _BASE_FRONTIER + _CONST, SCHEMAS)
PB = AxiomSystem("PB", _BASE_CORE + _BASE_FRONTIER + _CONST + _PB_EXTRA, SCHEMAS)


def get_axioms(name: str) -> AxiomSystem:
    key = name.strip().upper()
    if key == "BASE":
        return BASE
    if key == "PB":
        return PB
    raise ValueError(f"unknown axiom system {name!r} (expected base or pb)")


def export_rules_json(ax: AxiomSystem) -> list[dict]:
    return [
        {"lhs": r.lhs, "rhs": r.rhs, "tier": r.tier,
         "provenance": r.provenance, "status": r.status}
        for r in ax.rules
    ]


# Identities whose printed forms the exact evaluator refutes, with the
# corrected forms shipped in the tables above.
TYPO_LEDGER = (
    {"printed": "fkik = fki", "corrected": "fkik = fik",
     "counterexample": "(0,1) u Q(1,2)"},
    {"printed": "fiki = fik", "corrected": "fiki = fki",
     "counterexample": "(0,1) u Q(1,2)"},
    {"printed": "ckik = kikc", "corrected": "ckik = ikic (and kikc = ciki)",
     "counterexample": "(1,2) u (2,3) u {4} u Q(5,6) u I(6,7)"},
    {"printed": "cdV = R - [8,10]", "corrected": "cdV = R - [8,9]",
     "counterexample": "complement of dV = [8,9]"},
    {"printed": "kcdV = R - (8,10)", "corrected": "kcdV = R - (8,9)",
     "counterexample": "closure of the complement of dV = [8,9]"},
)
