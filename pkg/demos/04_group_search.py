"""Classify perfect Euclidean codes by searching group homomorphisms.

A lattice tiling of Z^n by B(r) is the same thing as a homomorphism
Z^n -> G onto an Abelian group of order |B(r)| that is injective on the
ball.  Sweeping all groups and all generator images at each achievable
radius token therefore classifies perfect codes outright.
"""

from lpcodes.homsearch import abelian_groups_of_order, classify

print("Abelian groups of order 25:", [g.label() for g in abelian_groups_of_order(25)])
print()

for n, p, s_max in ((2, 2, 8), (3, 2, 3)):
    report = classify(n, p, s_max)
    print(f"n={n}, p={p}, s <= {s_max}: perfect codes at s in {report.found_tokens}")
    for o in report.outcomes:
        if o.status == "found":
            phi = o.homomorphism
            print(f"  s={o.token.power_value:>2}  {phi.group.label():<6}"
                  f" e_i -> {list(phi.images)}   kernel {list(o.kernel.basis)}")
        elif o.status == "exhausted":
            print(f"  s={o.token.power_value:>2}  exhausted after"
                  f" {o.candidates_examined} candidates over"
                  f" {len(o.groups_tried)} group(s)")
    print()

print("Every found kernel carries a PERFECT certificate:")
report = classify(2, 2, 8)
for o in report.outcomes:
    if o.status == "found":
        print(f"  s={o.token.power_value}: {o.certificate.status}")
