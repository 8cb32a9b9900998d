#!/usr/bin/env python3
"""Adding the frontier operator f: monoids of size 34, 20, 40 and 46.

fA = kA & k(cA) is always closed, and the frontier of an open or closed
set is nowhere dense.  Those two facts, plus the d-laws, collapse every
word over k, i, c, d, f onto a small canonical list.  Two identities are
sometimes printed with their right-hand sides swapped (fkik = fki and
fiki = fik); the exact evaluator refutes the printed forms and validates
the corrected ones, and the verification suite records the discrepancy
in its typo ledger.
"""

from topomonoid import (BASE, PB, TYPO_LEDGER, enumerate_monoid, normalize,
                        parse_set_dsl, apply_word, render_word)

for gens, ax in (("kcf", BASE), ("kifd", BASE), ("kcfd", PB), ("kcfd", BASE)):
    table = enumerate_monoid(gens, ax)
    print(f"<{','.join(gens)}> under {ax.name}: {len(table.elements)} elements")

print("\nkey frontier collapses:")
for word in ("fff", "fc", "kf", "ifk", "df", "dfk", "fkik", "fiki"):
    print(f"  {word} -> {render_word(normalize(word, BASE))}")

print("\nrefuting the transposed spelling fkik = fki on S = (0,1) u Q(1,2):")
s = parse_set_dsl("(0,1) u Q(1,2)")
for word in ("fkik", "fik", "fki"):
    print(f"  {word} S = {apply_word(word, s).render()}")

print("\ntypo ledger shipped with the verifier:")
for entry in TYPO_LEDGER:
    print(f"  printed {entry['printed']!r} -> corrected {entry['corrected']!r}")
