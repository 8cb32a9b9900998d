"""The self-contained verification suite behind `topomonoid verify`.

Every check rebuilds what it needs from seeds and fixed witnesses; no
prior state is read.  Expected values are frozen here: monoid counts and
element lists, the nine even-operator images of the A witness, the eight
Vitali rows, the Hasse edge sets, and the parity splits.  The typo
ledger is reported even when a run fails, to keep the oracle-over-print
policy visible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import corpus as corpus_mod
from .monoid import enumerate_monoid, parity
from .poset import corpus_relation, hasse, proved_relation
from .rewrite import completion_check, normalize, validate_rules, validate_schemas
from .rules import BASE, PB, TYPO_LEDGER, RewriteRule
from .tables import even_figure, vitali_figure
from .vitali import (DEFAULT_PARAMS, Undecidable, apply_word, distinguish,
                     has_baire_property, render_symbolic, sym_difference, sym_equal,
                     sym_subset, sym_union, tame)
from .words import render_word

DEFAULT_SEED = 1729
DEFAULT_CORPUS_SIZE = 1000

EXPECTED_COUNTS = (
    ("kc", "BASE", 14),
    ("kcd", "BASE", 22),
    ("kcd", "PB", 18),
    ("ki", "BASE", 7),
    ("kid", "BASE", 9),
    ("kcf", "BASE", 34),
    ("kifd", "BASE", 20),
    ("kcfd", "PB", 40),
    ("kcfd", "BASE", 46),
)

KCD_22 = frozenset((
    "", "i", "k", "ki", "ik", "iki", "kik", "d", "id",
    "c", "ci", "ck", "cki", "cik", "ciki", "ckik", "cd", "cid",
    "dc", "idc", "cdc", "cidc",
))

KCFD_BASE_MINUS_PB = frozenset(("dc", "idc", "cdc", "cidc", "fdc", "cfdc"))

EXPECTED_EVEN_FIGURE = (
    ("e", "(1,2) u (2,3) u {4} u Q(5,6) u I(6,7)"),
    ("i", "(1,2) u (2,3)"),
    ("k", "[1,3] u {4} u [5,7]"),
    ("ki", "[1,3]"),
    ("ik", "(1,3) u (5,7)"),
    ("iki", "(1,3)"),
    ("kik", "[1,3] u [5,7]"),
    ("d", "[1,3] u [6,7]"),
    ("id", "(1,3) u (6,7)"),
)

EXPECTED_VITALI_TABLE = (
    ("idcV", "(-inf,inf)"),
    ("idV", "(8,9)"),
    ("dV", "[8,9]"),
    ("dcV", "(-inf,inf)"),
    ("cdV", "(-inf,8) u (9,inf)"),
    ("cdcV", "{}"),
    ("cidcV", "{}"),
    ("kcdV", "(-inf,8] u [9,inf)"),
)

ZFC_EVENS = ("", "d", "i", "k", "id", "ik", "ki", "cdc", "iki", "kik", "cidc")
PB_EVENS = ("", "d", "i", "k", "id", "ik", "ki", "iki", "kik")

ZFC_HASSE = frozenset((
    ("i", "iki"), ("iki", "cdc"), ("i", ""), ("cdc", "id"), ("cdc", "cidc"),
    ("iki", "ki"), ("", "k"), ("ki", "cidc"), ("ik", "kik"), ("id", "ik"),
    ("id", "d"), ("d", "kik"), ("cidc", "d"), ("kik", "k"),
))

# The printed right-hand diagram is doubly mangled: one edge points at a
# node label (cdc) that no longer exists there, and one edge is printed
# twice in place of d -> kik.  With cdc = id under PB, the dangling edge
# is iki -> id, which the proved and corpus relations both force (it is
# even choice-free: i(dA) contains ik(iA) pointwise).
PB_HASSE_PRINTED = frozenset((
    ("i", "iki"), ("i", ""), ("iki", "ki"), ("", "k"), ("ik", "kik"),
    ("id", "ik"), ("id", "d"), ("d", "kik"), ("ki", "d"), ("kik", "k"),
))
PB_HASSE_REPAIRED_EDGE = ("iki", "id")
PB_HASSE = PB_HASSE_PRINTED | {PB_HASSE_REPAIRED_EDGE}

DOCUMENTED_REFUTATION = "(0,1) u Q(1,2)"
BAIRE_EQUALITIES = (("idc", "cd"), ("id", "cdc"), ("d", "cidc"), ("dc", "kcd"))


@dataclass
class Check:
    id: str
    description: str
    status: str  # pass | fail
    details: str = ""


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)
    typo_ledger: tuple = TYPO_LEDGER

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "checks": [vars(c) for c in self.checks],
            "typo_ledger": [dict(t) for t in self.typo_ledger],
        }

    def format_text(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"[{c.status.upper():4}] {c.id}: {c.description}")
            if c.details:
                lines.append(f"       {c.details}")
        lines.append("")
        lines.append("typo ledger (printed identities refuted by the exact evaluator):")
        for t in self.typo_ledger:
            lines.append(f"  printed {t['printed']!r} -> shipped {t['corrected']!r} "
                         f"[{t['counterexample']}]")
        lines.append("")
        lines.append("RESULT: " + ("all checks passed" if self.ok else "FAILURES PRESENT"))
        return "\n".join(lines)


def _check(checks, cid, description, problems, details=""):
    status = "pass" if not problems else "fail"
    if problems:
        details = "; ".join(problems[:4]) + (f" (+{len(problems)-4} more)" if len(problems) > 4 else "")
    checks.append(Check(cid, description, status, details))


# -- criterion 1 and 7 --------------------------------------------------------


def check_cardinalities(checks):
    problems = []
    for gens, ax_name, expected in EXPECTED_COUNTS:
        ax = BASE if ax_name == "BASE" else PB
        table = enumerate_monoid(gens, ax)
        if len(table.elements) != expected:
            problems.append(f"<{gens}> {ax_name}: {len(table.elements)} != {expected}")
    base22 = set(enumerate_monoid("kcd", BASE).elements)
    if base22 != set(KCD_22):
        problems.append(f"k,c,d BASE element set differs: {sorted(base22 ^ set(KCD_22))}")
    diff = set(enumerate_monoid("kcfd", BASE).elements) - set(enumerate_monoid("kcfd", PB).elements)
    if diff != set(KCFD_BASE_MINUS_PB):
        problems.append(f"BASE-PB difference is {sorted(diff)}")
    _check(checks, "1-monoid-cardinalities",
           "monoid sizes 14/22/18/7/9/34/20/40/46, the 22-word list, and the "
           "BASE-PB difference {dc, idc, cdc, cidc, fdc, cfdc}", problems)


def check_completion(checks):
    problems = []
    for gens, ax_name, expected in EXPECTED_COUNTS:
        ax = BASE if ax_name == "BASE" else PB
        report = completion_check(ax, gens)
        if not report.ok:
            problems.append(f"<{gens}> {ax_name}: {report.failures[0]}")
        elif report.size != expected:
            problems.append(f"<{gens}> {ax_name}: closed at {report.size} != {expected}")
    _check(checks, "7-completion",
           "canonical sets closed under left and right multiplication for all "
           "nine generator/axiom pairs", problems)


# -- criteria 2, 3, 4 ---------------------------------------------------------


def check_even_figure(checks, params):
    got = even_figure(params)
    problems = [f"{w}A = {img} (expected {exp})"
                for (w, img), (we, exp) in zip(got, EXPECTED_EVEN_FIGURE) if img != exp]
    _check(checks, "2-even-figure",
           "the nine even-operator images of the A witness match the reference rows",
           problems)


def check_distinctness(checks, params):
    problems = []
    a18 = corpus_mod.witness("A18", params)
    a22 = corpus_mod.witness("A22", params)
    for s, gens, ax, expected in (
            (a18, "kcd", PB, 18), (a22, "kcd", BASE, 22), (a22, "kcfd", BASE, 46)):
        words_list = enumerate_monoid(gens, ax).elements
        count, _ = distinguish(s, words_list)
        if count != expected:
            problems.append(f"{len(words_list)} ops on {render_symbolic(s)[:24]}...: "
                            f"{count} != {expected}")
    _check(checks, "3-distinctness",
           "distinguish(A, 18 PB ops) = 18, distinguish(A u V, 22) = 22, "
           "distinguish(A u V, 46) = 46", problems)


def check_vitali_table(checks, params):
    problems = []
    rows = vitali_figure(params)
    for (label, value, printed), (exp_label, exp_value) in zip(rows, EXPECTED_VITALI_TABLE):
        if label != exp_label or value != exp_value:
            problems.append(f"{label} = {value} (expected {exp_label} = {exp_value})")
    discrepant = {label for label, _, printed in rows if printed is not None}
    if discrepant != {"cdV", "kcdV"}:
        problems.append(f"discrepant rows {sorted(discrepant)} != ['cdV', 'kcdV']")
    ledger_printed = {t["printed"] for t in TYPO_LEDGER}
    expected_ledger = {"cdV = R - [8,10]", "kcdV = R - (8,10)",
                       "fkik = fki", "fiki = fik", "ckik = kikc"}
    if ledger_printed != expected_ledger:
        problems.append(f"typo ledger rows {sorted(ledger_printed)}")
    _check(checks, "4-vitali-table",
           "the eight V rows match the derived values; exactly cdV and kcdV "
           "disagree with print and the typo ledger holds those plus "
           "fkik/fiki/ckik", problems)


# -- criterion 5: property suites ---------------------------------------------


def _pairs(sets):
    return list(zip(sets, sets[1:] + sets[:1]))


def d_law_violations(sets) -> tuple[list[str], int]:
    """Oracle check of the d-operator laws, labelled:

    (a) S in T implies dS in dT        (b) dS closed and dS in kS
    (c) d = k on open sets             (d) d(S u T) = dS u dT
    (e) S - dS is meager               (f) dS empty iff S meager
    (g) ddS = dS                       (h) dkS = kikS
    (i) kidS = dS
    """
    problems = []
    skipped = 0

    def eq(tag, s, x, y):
        nonlocal skipped
        try:
            if not sym_equal(x, y):
                problems.append(f"({tag}) fails on {render_symbolic(s)}")
        except Undecidable:
            skipped += 1

    for s in sets:
        ds = apply_word("d", s)
        if not sym_equal(apply_word("kd", s), ds):
            problems.append(f"(b) dS not closed on {render_symbolic(s)}")
        if not sym_subset(ds, apply_word("k", s)):
            problems.append(f"(b) dS not in kS on {render_symbolic(s)}")
        eq("c", s, apply_word("di", s), apply_word("ki", s))
        eq("g", s, apply_word("dd", s), ds)
        eq("h", s, apply_word("dk", s), apply_word("kik", s))
        eq("i", s, apply_word("kid", s), ds)
        if s.is_tame() and s.base.is_meager() != ds.base.is_empty():
            problems.append(f"(f) meagerness mismatch on {render_symbolic(s)}")
        try:
            rest = sym_difference(s, ds)
            if not apply_word("d", rest).base.is_empty():
                problems.append(f"(e) S-dS not meager on {render_symbolic(s)}")
        except Undecidable:
            skipped += 1
    for s, t in _pairs(sets):
        try:
            u = sym_union(s, t)
        except Undecidable:
            skipped += 1
            continue
        du = apply_word("d", u)
        if not sym_subset(apply_word("d", s), du):
            problems.append(f"(a) monotonicity fails on {render_symbolic(s)}")
        try:
            both = sym_union(apply_word("d", s), apply_word("d", t))
            if not sym_equal(du, both):
                problems.append(f"(d) additivity fails on {render_symbolic(s)}")
        except Undecidable:
            skipped += 1
    return problems, skipped


def baire_equality_violations(sets) -> tuple[list[str], int]:
    problems = []
    checked = 0
    for s in sets:
        if has_baire_property(s) is not True:
            continue
        checked += 1
        rest = sym_difference(apply_word("d", s), s)
        if not apply_word("d", rest).base.is_empty():
            problems.append(f"(b) dS-S not meager on {render_symbolic(s)}")
        for lhs, rhs in BAIRE_EQUALITIES:
            if not sym_equal(apply_word(lhs, s), apply_word(rhs, s)):
                problems.append(f"{lhs} != {rhs} on {render_symbolic(s)}")
    return problems, checked


def check_property_suites(checks, corpus, params):
    sets = [tame(s) for s in corpus.random] + [
        corpus.named["V"], corpus.named["cV"], corpus.named["A22"]]
    problems, skipped = d_law_violations(sets)
    _check(checks, "5a-d-operator-laws",
           f"d-operator laws (a)-(i) hold on {len(sets)} corpus sets "
           f"({skipped} undecidable instances skipped)", problems)

    bp_sets = corpus.all_sets()
    problems, checked = baire_equality_violations(bp_sets)
    _check(checks, "5b-baire-equalities",
           f"Baire-property equalities hold on all {checked} property-true corpus sets",
           problems)

    problems = []
    v = corpus.named["V"]
    for lhs, rhs in BAIRE_EQUALITIES:
        left, right = apply_word(lhs, v), apply_word(rhs, v)
        if sym_equal(left, right):
            problems.append(f"{lhs}V unexpectedly equals {rhs}V")
    _check(checks, "5c-baire-failures-on-vitali",
           "each of the four Baire-property equalities fails on the Vitali witness "
           "(e.g. idcV = R while cdV = R - [8,9])", problems)


# -- criterion 6 ---------------------------------------------------------------


def check_rule_validation(checks, corpus, params):
    corpus_sets = corpus.all_sets()
    problems = []
    report = validate_rules(PB, corpus_sets)
    for res in report.failures():
        problems.append(f"rule {res.label} refuted on {res.counterexample[0]}")
    suffixes = enumerate_monoid("kcfd", BASE).elements
    schema_report = validate_schemas(BASE, suffixes, corpus_sets)
    for res in schema_report.failures():
        problems.append(f"schema {res.label} refuted on {res.counterexample[0]}")

    # The printed transposed forms must fail, with the documented witness.
    doc = corpus_mod.parse_set_dsl(DOCUMENTED_REFUTATION, params)
    for lhs, rhs in (("fkik", "fki"), ("fiki", "fik")):
        bad = validate_rules(
            [RewriteRule(lhs, rhs, "BASE", "printed form under test", "refuted")],
            [doc])
        if bad.ok:
            problems.append(f"printed {lhs}->{rhs} was not refuted")
    if render_symbolic(apply_word("fkik", doc)) != "{0} u {2}":
        problems.append("fkik image on the documented witness is not {0, 2}")
    if render_symbolic(apply_word("fki", doc)) != "{0} u {1}":
        problems.append("fki image on the documented witness is not {0, 1}")
    n_rules = len(report.results)
    n_schema = len(schema_report.results)
    _check(checks, "6-rule-validation",
           f"all {n_rules} rules and {n_schema} schema instances pass on the full "
           f"corpus; the printed fkik/fiki forms fail on {DOCUMENTED_REFUTATION}",
           problems)


# -- criterion 8 ---------------------------------------------------------------


def check_poset(checks, params):
    problems = []
    witness_sets = [corpus_mod.witness(n, params) for n in corpus_mod.WITNESS_NAMES]
    for name, ax, evens, expected_edges in (
            ("ZFC", BASE, ZFC_EVENS, ZFC_HASSE), ("PB", PB, PB_EVENS, PB_HASSE)):
        proved = proved_relation(evens, ax)
        empirical = corpus_relation(evens, witness_sets)
        if proved.leq != empirical.leq:
            diffs = [
                f"{render_word(a)}<={render_word(b)}"
                for i, a in enumerate(evens) for j, b in enumerate(evens)
                if proved.leq[i][j] != empirical.leq[i][j]]
            problems.append(f"{name}: proved != corpus at {diffs[:6]}")
            continue
        edges = frozenset(hasse(proved))
        if edges != expected_edges:
            problems.append(
                f"{name}: hasse edges differ: extra {sorted(edges - expected_edges)}, "
                f"missing {sorted(expected_edges - edges)}")
    _check(checks, "8-poset",
           "proved and corpus orders coincide on the 11 ZFC and 9 PB evens; "
           "Hasse edges match the reference diagrams (14 edges; 10 printed + the "
           "repaired dangling edge iki->id, forced because cdc = id under PB)",
           problems)


# -- criteria 9 and 10 -----------------------------------------------------------


def check_parity(checks):
    problems = []
    for ax, total, per_class in ((BASE, 22, 11), (PB, 18, 9)):
        elements = enumerate_monoid("kcd", ax).elements
        evens = sum(1 for w in elements if parity(w) == "even")
        odds = len(elements) - evens
        if (len(elements), evens, odds) != (total, per_class, per_class):
            problems.append(f"{ax.name}: {evens} even / {odds} odd of {len(elements)}")
    _check(checks, "9-parity",
           "the 22-element BASE monoid splits 11 even / 11 odd; the PB monoid 9 / 9",
           problems)


def check_rewrite_semantics(checks, corpus, seed):
    import random as _random

    problems = []
    for ax in (BASE, PB):
        rng = _random.Random(f"criterion-10:{seed}:{ax.name}")
        for t in range(500):
            word = "".join(rng.choice("kicdf") for _ in range(rng.randint(0, 8)))
            s = tame(corpus.random[t % len(corpus.random)])
            if not sym_equal(apply_word(word, s), apply_word(normalize(word, ax), s)):
                problems.append(f"{ax.name}: {render_word(word)} on {render_symbolic(s)}")
    _check(checks, "10-rewrite-semantics",
           "apply(normalize(w)) = apply(w) for 500 random word/set pairs per "
           "axiom system (words up to length 8)", problems)


# -- driver ----------------------------------------------------------------------


def run_verify(corpus_size: int = DEFAULT_CORPUS_SIZE, seed: int = DEFAULT_SEED,
               params=DEFAULT_PARAMS) -> VerifyReport:
    report = VerifyReport()
    checks = report.checks
    corpus = corpus_mod.build_corpus(corpus_size, seed, params)
    check_cardinalities(checks)
    check_even_figure(checks, params)
    check_distinctness(checks, params)
    check_vitali_table(checks, params)
    check_property_suites(checks, corpus, params)
    check_rule_validation(checks, corpus, params)
    check_completion(checks)
    check_poset(checks, params)
    check_parity(checks)
    check_rewrite_semantics(checks, corpus, seed)
    return report


def write_json(report: VerifyReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_json(), fh, indent=2, sort_keys=False)
        fh.write("\n")
