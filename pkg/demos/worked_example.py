"""Walk through the bundled eight-object example: approximations, ring axioms, subrings."""
from nearness import (
    check_nearness_ring,
    check_subnearness_ring,
    is_descriptively_near,
    set_description,
)
from nearness.document import load_example

doc = load_example()
space = doc.system
R = doc.structure("R")

print("objects:", ", ".join(space.objects))
for name in ("R", "S", "T"):
    sub = doc.subset(name)
    print(f"{name} = {sorted(sub)}  upper = {sorted(space.upper_approx(sub))}  lower = {sorted(space.lower_approx(sub))}")

print("\ndescription of S:", sorted(set_description(space, doc.subset("S"))))
print("S near T:", is_descriptively_near(space, doc.subset("S"), doc.subset("T")))

print("\nring axioms on R (carrier plus its upper approximation):")
ring = check_nearness_ring(R)
for axiom, verdict in ring.verdicts.items():
    print(f"  {axiom}: {verdict}")
print("  zero:", ring.witnesses["zero"])

O = doc.structure("O")
assoc = check_nearness_ring(O).children["NR1"]
bad = assoc.failures("NG2")
print(f"\nthe full universe is not a near group: {len(bad)} associativity violations, e.g. {bad[0].detail}")

for name in ("S", "T"):
    rep = check_subnearness_ring(doc.subset(name), R, name)
    print(f"{name} subnearness ring of R: {rep.verdicts['subring']}")
