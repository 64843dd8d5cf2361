"""Weak cosets, coset families and the weak-coset quotient nearness ring.

A weak coset ``x+S`` has member set ``{x+s | s in S, x+s in R} | {x}``; the
filter ``x+s in R`` is evaluated against the carrier ``R`` even when ``x``
only lies in the upper approximation of ``R``.  Cosets are identified by
their representative: two cosets with equal member sets but different
representatives are different elements, and the quotient report checks
whether the operations respect member-set equality instead of assuming it.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterable

from .descriptive import family_upper_approx, powerset, set_description
from .errors import ClosureError, InputError, PreconditionError, StructuralAnomaly
from .structures import (
    AxiomReport,
    BinaryOpTable,
    Counterexample,
    StructureCandidate,
    check_nearness_ring,
    check_subnearness_ring,
)


@dataclass(frozen=True)
class WeakCoset:
    representative: Any
    sub: frozenset
    members: frozenset
    ambient: StructureCandidate = field(compare=False, repr=False)
    sub_name: str = field(default="S", compare=False)

    @property
    def label(self) -> str:
        return f"{self.representative}+{self.sub_name}"

    def __str__(self):
        return self.label


def _members(x, S, R: StructureCandidate) -> frozenset:
    out = {x}
    for s in S:
        y = R.add(x, s)
        if y in R.carrier:
            out.add(y)
    return frozenset(out)


def _check_sub(S, R: StructureCandidate) -> frozenset:
    S = frozenset(S)
    if not S <= R.carrier:
        raise InputError(f"{R.space.sort(S - R.carrier)} not in {R.name}")
    return S


def weak_coset(x, S: Iterable, R: StructureCandidate, sub_name: str = "S") -> WeakCoset:
    S = _check_sub(S, R)
    if x not in R.carrier and x not in R.upper:
        raise InputError(f"{x!r} is neither in {R.name} nor in its upper approximation")
    return WeakCoset(x, S, _members(x, S, R), R, sub_name)


@dataclass
class CosetFamily:
    cosets: list
    ambient: StructureCandidate
    sub: frozenset
    extended: bool = False

    @property
    def representatives(self) -> list:
        return [c.representative for c in self.cosets]

    def coset(self, x) -> WeakCoset:
        for c in self.cosets:
            if c.representative == x:
                return c
        raise KeyError(x)

    def member_sets(self) -> list[frozenset]:
        return [c.members for c in self.cosets]

    def duplicates(self) -> list[list[WeakCoset]]:
        """Groups of cosets sharing one member set (only groups of size > 1)."""
        groups: dict[frozenset, list] = {}
        for c in self.cosets:
            groups.setdefault(c.members, []).append(c)
        return [g for g in groups.values() if len(g) > 1]


def coset_family(R: StructureCandidate, S: Iterable, extended: bool = False, sub_name: str = "S") -> CosetFamily:
    """``R/~`` (representatives from R) or ``(N*R)/~`` when ``extended``."""
    S = _check_sub(S, R)
    if not check_subnearness_ring(S, R, sub_name).ok:
        warnings.warn(f"{sub_name} is not a verified subnearness ring of {R.name}", stacklevel=2)
    reps = R.upper_order if extended else R.order
    return CosetFamily([WeakCoset(x, S, _members(x, S, R), R, sub_name) for x in reps], R, S, extended)


def _combine(a: WeakCoset, b: WeakCoset, which: str) -> WeakCoset:
    if a.sub != b.sub or a.ambient is not b.ambient:
        raise InputError("cosets belong to different families")
    R = a.ambient
    op = R.op(which)
    z = op(a.representative, b.representative)
    if z not in R.upper:
        raise ClosureError(
            f"{a.representative}{op.name}{b.representative} = {z} lies outside the upper approximation of {R.name}"
        )
    return WeakCoset(z, a.sub, _members(z, a.sub, R), R, a.sub_name)


def coset_sum(a: WeakCoset, b: WeakCoset) -> WeakCoset:
    return _combine(a, b, "add")


def coset_product(a: WeakCoset, b: WeakCoset) -> WeakCoset:
    return _combine(a, b, "mul")


class CosetSpace:
    """Weak cosets ``x+S`` for every object ``x``, used as an approximation space.

    Operations act on representatives.  The upper approximation of a family
    of cosets keeps the cosets with representative in the upper approximation
    of ``R`` whose member set is descriptively near some coset of the family,
    among the candidate sets (all coset member sets by default, or
    ``"powerset"``).
    """

    def __init__(self, R: StructureCandidate, S: Iterable, sub_name: str = "S", candidates=None):
        S = _check_sub(S, R)
        self.ring, self.sub, self.sub_name = R, S, sub_name
        self.system = R.space
        self.objects = tuple(WeakCoset(x, S, _members(x, S, R), R, sub_name) for x in R.space.objects)
        self._by_rep = {c.representative: c for c in self.objects}
        self._index = {c: i for i, c in enumerate(self.objects)}
        if candidates is None:
            self.candidates = list(dict.fromkeys(c.members for c in self.objects))
        elif candidates == "powerset":
            self.candidates = powerset(self.system)
        else:
            self.candidates = [frozenset(c) for c in candidates]
        by_rep = self._by_rep
        self.add = BinaryOpTable.from_function(
            "⊕", self.objects, lambda a, b: by_rep[R.add(a.representative, b.representative)])
        if R.mul is not None:
            self.mul = BinaryOpTable.from_function(
                "⊙", self.objects, lambda a, b: by_rep[R.mul(a.representative, b.representative)])
        else:
            self.mul = None

    def coset(self, x) -> WeakCoset:
        return self._by_rep[x]

    def index(self, c) -> int:
        try:
            return self._index[c]
        except (KeyError, TypeError):
            raise InputError(f"{c!r} is not a coset of this space") from None

    def sort(self, cs: Iterable) -> list:
        return sorted(cs, key=self.index)

    def upper_approx(self, family: Iterable[WeakCoset]) -> frozenset:
        near = family_upper_approx(self.system, [c.members for c in family], self.candidates)
        return frozenset(
            c for c in self.objects if c.representative in self.ring.upper and c.members in near
        )

    def structure(self, reps: Iterable, name: str | None = None) -> StructureCandidate:
        return StructureCandidate(
            self, frozenset(self.coset(x) for x in reps), self.add, self.mul,
            name or f"{self.ring.name}/{self.sub_name}",
        )


def check_quotient_hypothesis(
    R: StructureCandidate, S: Iterable, candidates=None, sub_name: str = "S"
) -> AxiomReport:
    """Every coset with representative in the upper approximation of R must be
    descriptively near some coset of R/~ (set-of-sets inclusion)."""
    space = CosetSpace(R, S, sub_name, candidates)
    base = [space.coset(x) for x in R.order]
    ext = [space.coset(x) for x in R.upper_order]
    system = R.space
    near = family_upper_approx(system, [c.members for c in base], space.candidates)

    rep = AxiomReport(f"quotient hypothesis for {R.name}/{sub_name}")
    rep.witnesses["family"] = {c.label: system.sort(c.members) for c in base}
    rep.witnesses["extended"] = {c.label: system.sort(c.members) for c in ext}
    pairings, cex = {}, []
    for c in ext:
        qc = set_description(system, c.members)
        partner = next((b for b in base if not qc.isdisjoint(set_description(system, b.members))), None)
        if partner is not None and c.members in near:
            shared = qc & set_description(system, partner.members)
            pairings[c.label] = {"near": partner.label, "shared": sorted(shared)}
        else:
            reason = "not a candidate set" if partner is not None else "shares no description with any coset"
            cex.append(Counterexample("inclusion", (c,), (), "membership", f"{c.label} {reason}"))
    rep.witnesses["pairings"] = pairings
    rep.record("inclusion", cex)
    return rep


@dataclass
class QuotientRing:
    family: CosetFamily
    extended: CosetFamily
    space: CosetSpace
    structure: StructureCandidate
    add_table: list
    mul_table: list
    report: AxiomReport
    hypothesis: AxiomReport

    @property
    def labels(self) -> list[str]:
        return [c.label for c in self.family.cosets]

    def label_table(self, which: str = "add") -> list[list[str]]:
        table = self.add_table if which == "add" else self.mul_table
        return [[c.label for c in row] for row in table]

    def collapsed(self):
        """Quotient tables after identifying cosets with equal member sets.

        Returns ``(classes, add, mul)`` where ``classes`` lists the distinct
        member sets in first-appearance order and the tables are indexed by
        class position.  Raises :class:`StructuralAnomaly` when the
        operations do not respect member-set equality.
        """
        classes = list(dict.fromkeys(c.members for c in self.family.cosets))
        pos = {m: i for i, m in enumerate(classes)}
        n = len(classes)
        tables = []
        for op in (coset_sum, coset_product):
            cells = [[None] * n for _ in range(n)]
            for a, b in product(self.family.cosets, repeat=2):
                i, j = pos[a.members], pos[b.members]
                value = op(a, b).members
                if value not in pos:
                    raise StructuralAnomaly(f"{a.label} {op.__name__} {b.label} leaves the family")
                k = pos[value]
                if cells[i][j] is None:
                    cells[i][j] = k
                elif cells[i][j] != k:
                    raise StructuralAnomaly(f"{op.__name__} is not well defined on equal cosets")
            tables.append(cells)
        return classes, tables[0], tables[1]


def _well_definedness(ext: list[WeakCoset], base: list[WeakCoset]) -> list[Counterexample]:
    out = []
    for i, a in enumerate(ext):
        for b in ext[i + 1:]:
            if a.members != b.members:
                continue
            for c in base:
                for name, op in (("⊕", coset_sum), ("⊙", coset_product)):
                    for left, right in ((op(a, c), op(b, c)), (op(c, a), op(c, b))):
                        if left.members != right.members:
                            out.append(Counterexample(
                                "well_defined", (a, b, c), (left, right), "equality",
                                f"{a.label} and {b.label} share members but give {left.label} != {right.label} under {name}",
                            ))
    return out


def build_quotient_ring(R: StructureCandidate, S: Iterable, candidates=None, sub_name: str = "S") -> QuotientRing:
    hyp = check_quotient_hypothesis(R, S, candidates, sub_name)
    if not hyp.ok:
        raise PreconditionError(
            f"quotient hypothesis fails for {R.name}/{sub_name}: "
            + "; ".join(c.detail for c in hyp.counterexamples)
        )
    space = CosetSpace(R, S, sub_name, candidates)
    S = space.sub
    family = CosetFamily([space.coset(x) for x in R.order], R, S)
    extended = CosetFamily([space.coset(x) for x in R.upper_order], R, S, extended=True)
    add_table = [[coset_sum(a, b) for b in family.cosets] for a in family.cosets]
    mul_table = [[coset_product(a, b) for b in family.cosets] for a in family.cosets]

    structure = space.structure(R.order)
    report = check_nearness_ring(structure)
    report.subject = f"quotient {R.name}/{sub_name}"
    report.children["hypothesis"] = hyp
    wd = _well_definedness(extended.cosets, family.cosets)
    if wd:
        report.anomalies.append("coset operations depend on the representative, not only on the member set")
        report.counterexamples.extend(wd)
    report.witnesses["member_sets"] = {c.label: R.space.sort(c.members) for c in extended.cosets}
    report.witnesses["duplicates"] = [[c.label for c in g] for g in extended.duplicates()]
    if report.ok:
        report.witnesses["label"] = f"{R.name}/_w{sub_name}"
    return QuotientRing(family, extended, space, structure, add_table, mul_table, report, hyp)

