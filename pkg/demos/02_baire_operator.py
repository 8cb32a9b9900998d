#!/usr/bin/env python3
"""The Baire second-category operator d, exactly.

dA collects the points whose every neighborhood meets A in a nonmeager
set.  On tame sets (finite unions of intervals, rational traces,
irrational traces, isolated points) d is computable exactly: countable
pieces die, interval and co-countable pieces fill their closed spans.
"""

from topomonoid import BASE, parse_set_dsl, apply_word, is_meager, normalize, render_word

examples = [
    "(0,1)",            # open interval: d acts as closure
    "Q(0,1)",           # rationals trace: countable, meager, d kills it
    "I(0,1)",           # irrationals trace: comeager in its span
    "{4}",              # a point is meager
    "(1,2) u (2,3) u {4} u Q(5,6) u I(6,7)",
]
for text in examples:
    s = parse_set_dsl(text)
    print(f"  d {text:<40} = {apply_word('d', s).render()}")
    print(f"    meager? {is_meager(s)}")

print("\nlaws of d, as rewrite rules (each validated on a 1000-set corpus):")
for word in ("kd", "dd", "di", "dk", "kid"):
    print(f"  {word} -> {render_word(normalize(word, BASE))}")

# d composed with interior/closure never leaves a nine-element world:
from topomonoid import enumerate_monoid
table = enumerate_monoid("kid", BASE)
print(f"\n<k,i,d> closes at {len(table.elements)} elements: "
      + " ".join(render_word(w) for w in table.elements))
