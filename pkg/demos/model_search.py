"""Enumerate small tables that satisfy the near axioms but are not ordinary rings."""
import sys

from nearness.search import search_structures

size = int(sys.argv[1]) if len(sys.argv) > 1 else 2
res = search_structures(size, exhaustive=size <= 3)
print(f"size {size} ({res.mode})")
print("  nearness rings that are not ordinary rings:", res.ring_models)
print("  near groups accepted:", res.near_group_models)
print("  candidates with several identities:", res.near_group_anomalies)
print("  theorem exceptions:", res.theorem_exceptions)
for ex in res.examples[:2]:
    print("  example:", ex)
