#!/usr/bin/env python3
"""The size of <k,c,d> depends on the ambient set theory: 22 versus 18.

If every set of reals has the Baire property (consistent with ZF + DC),
the identity dc = cid holds universally and the monoid closes at 18
elements.  With full choice one can build a Vitali set V with prescribed
dV = [8,9] and kV = [8,10]; V breaks dc = cid and pushes the monoid to
22.  The toolkit never constructs V: it is an axiomatized atom whose
prescribed closure, d-image and density drive an exact evaluator.
"""

from topomonoid import (BASE, PB, enumerate_monoid, witness, apply_word,
                        distinguish, render_word, has_baire_property)

for ax in (PB, BASE):
    table = enumerate_monoid("kcd", ax)
    print(f"<k,c,d> under {ax.name}: {len(table.elements)} elements")

base_only = set(enumerate_monoid("kcd", BASE).elements) - set(enumerate_monoid("kcd", PB).elements)
print("the four operators alive only under BASE:",
      " ".join(sorted(render_word(w) for w in base_only)))

v = witness("V")
print(f"\nthe Vitali atom (dV = [8,9], kV = [8,10]); Baire property: "
      f"{has_baire_property(v)}")
for word in ("idc", "cd", "id", "cdc", "d", "cidc", "dc", "kcd"):
    print(f"  {word:>4} V = {apply_word(word, v).render()}")
print("each left column above differs from its Baire-property twin on the right.")

a22 = witness("A22")
count, _ = distinguish(a22, enumerate_monoid("kcd", BASE).elements)
print(f"\nA u V distinguishes all operators: {count} distinct images of "
      f"{a22.render()}")
