"""Set descriptions and descriptive nearness.

Descriptions always use the full probe list of the feature system.  Families
of sets are represented as collections of frozensets; the "upper
approximation" of a family keeps every candidate set that shares at least
one description with some member of the family.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterable

from .errors import ResourceError
from .nas import FeatureSystem

DEFAULT_POWERSET_MAX = 16


def powerset_bound() -> int:
    """Largest universe for which full-powerset candidate families are allowed."""
    raw = os.environ.get("NEARNESS_POWERSET_MAX")
    return DEFAULT_POWERSET_MAX if raw is None else int(raw)


def powerset(system: FeatureSystem) -> list[frozenset]:
    n = len(system.objects)
    if n > powerset_bound():
        raise ResourceError(
            f"powerset of {n} objects exceeds bound {powerset_bound()} "
            "(set NEARNESS_POWERSET_MAX to override)"
        )
    objs = system.objects
    return [
        frozenset(c)
        for c in chain.from_iterable(combinations(objs, k) for k in range(n + 1))
    ]


def set_description(system: FeatureSystem, A: Iterable) -> frozenset:
    return frozenset(system.describe(a) for a in A)


def descriptive_intersection(system: FeatureSystem, A: Iterable, B: Iterable) -> frozenset:
    A, B = frozenset(A), frozenset(B)
    common = set_description(system, A) & set_description(system, B)
    return frozenset(x for x in A | B if system.describe(x) in common)


def is_descriptively_near(system: FeatureSystem, A: Iterable, B: Iterable) -> bool:
    return not set_description(system, A).isdisjoint(set_description(system, B))


@dataclass(frozen=True)
class NearnessCollection:
    anchor: frozenset
    members: frozenset  # of frozensets


def _candidates(system, candidates):
    if candidates is None or candidates == "powerset":
        return powerset(system)
    return [frozenset(c) for c in candidates]


def nearness_collection(system: FeatureSystem, A: Iterable, candidates=None) -> NearnessCollection:
    """Candidates descriptively near ``A``; ``candidates=None`` means the full powerset."""
    A = frozenset(A)
    qa = set_description(system, A)
    members = frozenset(
        B for B in _candidates(system, candidates)
        if not qa.isdisjoint(set_description(system, B))
    )
    return NearnessCollection(A, members)


def family_upper_approx(system: FeatureSystem, family: Iterable[Iterable], candidates=None) -> frozenset:
    """Candidates descriptively near at least one member of ``family``."""
    described = set()
    for C in family:
        described |= set_description(system, C)
    return frozenset(
        B for B in _candidates(system, candidates)
        if not described.isdisjoint(set_description(system, B))
    )


def near_pairing(system: FeatureSystem, A: Iterable, family: Iterable[Iterable]):
    """First family member sharing a description with ``A``, with the shared
    descriptions; ``None`` if ``A`` is near no member."""
    qa = set_description(system, A)
    for C in family:
        shared = qa & set_description(system, C)
        if shared:
            return frozenset(C), shared
    return None
