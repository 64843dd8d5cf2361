"""Weak cosets, the quotient by S and the natural map onto it; then a classical reduction map."""
from pathlib import Path

from nearness import (
    build_quotient_ring,
    check_kernel_ideal,
    coset_family,
    first_iso_check,
    kernel,
    natural_hom,
)
from nearness.document import load_document, load_example

doc = load_example()
R, S = doc.structure("R"), doc.subset("S")

family = coset_family(R, S, extended=True)
for c in family.cosets:
    print(f"{c.label}: {sorted(c.members)}")

Q = build_quotient_ring(R, S)
print("\nquotient addition:")
for row in Q.label_table("add"):
    print("  ", " ".join(row))
print("quotient multiplication:")
for row in Q.label_table("mul"):
    print("  ", " ".join(row))

nh = natural_hom(R, S)
print("\nnatural map:", {x: nh.mapping(x).label for x in R.upper_order}, "->", "hom" if nh.report.ok else "not a hom")

# a reduction Z4 -> Z2 described in two separate documents
data = Path(__file__).resolve().parent.parent / "tests" / "data"
z4 = load_document(data / "z4.json")
z2 = load_document(data / "z2.json")
R1, R2 = z4.structure("R"), z2.structure("R")
chi = z4.mapping("reduce", R1, R2)
print("\nkernel of reduction:", sorted(kernel(chi, R1, R2)))
print("kernel is an ideal:", check_kernel_ideal(chi, R1, R2).verdicts["kernel_ideal"])
res = first_iso_check(chi, R1, R2)
print("isomorphism check:", res.report.verdicts)
