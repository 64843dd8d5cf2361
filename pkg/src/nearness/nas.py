"""Nearness approximation spaces built from perceptual-object feature tables.

A :class:`FeatureSystem` holds the universe of objects, the probe functions
(one value per object and probe) and the integer ``r``.  Every ``r``-sized
subset of the probes induces an indiscernibility partition; lower and upper
approximations are unions of classes taken over *all* of those partitions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InputError

Obj = Hashable


@dataclass(frozen=True)
class Partition:
    """Indiscernibility classes generated by one probe subset."""

    probes: tuple[str, ...]
    classes: tuple[frozenset, ...]

    def class_of(self, x: Obj) -> frozenset:
        for c in self.classes:
            if x in c:
                return c
        raise InputError(f"unknown object {x!r}")


@dataclass(frozen=True)
class ApproximationResult:
    lower: frozenset
    upper: frozenset
    boundary: frozenset


class FeatureSystem:
    """Universe of perceptual objects plus probe functions and the parameter ``r``.

    ``features`` maps probe name -> {object -> value}; values are opaque
    symbols compared by equality.  Probe order follows the mapping order.
    """

    def __init__(
        self,
        objects: Sequence[Obj],
        features: Mapping[str, Mapping[Obj, Hashable]],
        r: int = 1,
    ):
        objects = tuple(objects)
        if not objects:
            raise InputError("universe must be nonempty", "objects")
        if len(set(objects)) != len(objects):
            seen, dup = set(), None
            for x in objects:
                if x in seen:
                    dup = x
                    break
                seen.add(x)
            raise InputError(f"duplicate object id {dup!r}", "objects")
        self.objects = objects
        self._index = {x: i for i, x in enumerate(objects)}

        probes = {}
        for name, values in features.items():
            missing = [x for x in objects if x not in values]
            if missing:
                raise InputError(
                    f"probe {name!r} has no value for {missing[0]!r}", f"features.{name}"
                )
            extra = [x for x in values if x not in self._index]
            if extra:
                raise InputError(f"unknown object {extra[0]!r}", f"features.{name}")
            probes[name] = MappingProxyType({x: values[x] for x in objects})
        self.features = MappingProxyType(probes)
        self.probes = tuple(probes)

        if isinstance(r, bool) or not isinstance(r, int):
            raise InputError(f"r must be an integer, got {r!r}", "r")
        if not 1 <= r <= len(self.probes):
            raise InputError(f"r={r} outside 1..{len(self.probes)}", "r")
        self.r = r

    def __repr__(self):
        return f"FeatureSystem({len(self.objects)} objects, probes={list(self.probes)}, r={self.r})"

    # -- ordering -----------------------------------------------------------

    def index(self, x: Obj) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise InputError(f"unknown object {x!r}") from None

    def sort(self, xs: Iterable[Obj]) -> list:
        """Canonical (universe) order."""
        return sorted(xs, key=self.index)

    def subset(self, xs: Iterable[Obj]) -> frozenset:
        """Validated frozenset of object ids."""
        xs = frozenset(xs)
        for x in xs:
            self.index(x)
        return xs

    # -- descriptions and partitions ----------------------------------------

    def _probe_names(self, probes) -> tuple[str, ...]:
        if probes is None:
            return self.probes
        probes = tuple(probes)
        for p in probes:
            if p not in self.features:
                raise InputError(f"unknown probe {p!r}")
        return probes

    def describe(self, x: Obj, probes: Sequence[str] | None = None) -> tuple:
        """Object description: probe values of ``x`` in probe order (all probes by default)."""
        self.index(x)
        return tuple(self.features[p][x] for p in self._probe_names(probes))

    def equivalence_class(self, x: Obj, probes: Sequence[str]) -> frozenset:
        probes = self._probe_names(probes)
        if not probes:
            raise InputError("probe subset must be nonempty")
        d = self.describe(x, probes)
        return frozenset(y for y in self.objects if self.describe(y, probes) == d)

    def partition(self, probes: Sequence[str]) -> Partition:
        probes = self._probe_names(probes)
        if not probes:
            raise InputError("probe subset must be nonempty")
        groups: dict[tuple, list] = {}
        for x in self.objects:
            groups.setdefault(self.describe(x, probes), []).append(x)
        return Partition(probes, tuple(frozenset(g) for g in groups.values()))

    @cached_property
    def _family(self) -> tuple[Partition, ...]:
        return tuple(self.partition(c) for c in combinations(self.probes, self.r))

    def partitions_family(self) -> tuple[Partition, ...]:
        """One partition per ``r``-subset of the probes, in lexicographic probe order."""
        return self._family

    @cached_property
    def _neighbourhood(self) -> Mapping[Obj, frozenset]:
        # union of the classes containing x across the whole family
        hood = {x: set() for x in self.objects}
        for part in self._family:
            for c in part.classes:
                for x in c:
                    hood[x] |= c
        return {x: frozenset(s) for x, s in hood.items()}

    @cached_property
    def _all_classes(self) -> tuple[frozenset, ...]:
        return tuple(c for part in self._family for c in part.classes)

    # -- approximations -----------------------------------------------------

    def upper_approx(self, X: Iterable[Obj]) -> frozenset:
        hood = self._neighbourhood
        out = set()
        for x in X:
            if x not in hood:
                raise InputError(f"unknown object {x!r}")
            out |= hood[x]
        return frozenset(out)

    def lower_approx(self, X: Iterable[Obj]) -> frozenset:
        X = self.subset(X)
        out = set()
        for c in self._all_classes:
            if c <= X:
                out |= c
        return frozenset(out)

    def boundary(self, X: Iterable[Obj]) -> frozenset:
        X = self.subset(X)
        return self.upper_approx(X) - self.lower_approx(X)

    def approximate(self, X: Iterable[Obj]) -> ApproximationResult:
        X = self.subset(X)
        lower, upper = self.lower_approx(X), self.upper_approx(X)
        return ApproximationResult(lower, upper, upper - lower)


def overlap(X: Iterable[Obj], Y: Iterable[Obj]) -> Fraction:
    """Jaccard overlap |X & Y| / |X | Y|, with overlap(empty, empty) == 1."""
    X, Y = frozenset(X), frozenset(Y)
    union = X | Y
    if not union:
        return Fraction(1)
    return Fraction(len(X & Y), len(union))
