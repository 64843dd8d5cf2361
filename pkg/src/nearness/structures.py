"""Axiom checkers for near groups, nearness rings, subrings and ideals.

Every checker enumerates the carrier exhaustively in canonical order and
returns an :class:`AxiomReport`.  A property "holds in the upper
approximation" when the demanded equalities hold as equalities of objects and
every result the axiom talks about lies in the upper approximation of the
carrier; both parts are kept in ``report.audit`` so either reading can be
inspected.

The checkers only need three things from the ambient space: ``objects``,
``sort`` and ``upper_approx``.  :class:`~nearness.nas.FeatureSystem` provides
them for objects and :class:`~nearness.quotient.CosetSpace` for weak cosets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .errors import InputError, StructuralAnomaly, StructuralError

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"

_OP_ALIASES = {"add": "add", "+": "add", "mul": "mul", "·": "mul", "*": "mul", ".": "mul"}


class BinaryOpTable:
    """A total operation table ``(x, y) -> x op y``."""

    __slots__ = ("name", "table")

    def __init__(self, name: str, table: Mapping[tuple, Hashable]):
        self.name = name
        self.table = dict(table)

    @classmethod
    def from_matrix(cls, name, objects: Sequence, rows: Sequence[Sequence], path=None):
        """Row-major matrix: ``rows[i][j] = objects[i] op objects[j]``."""
        path = path or f"operations.{name}"
        objects = list(objects)
        known = set(objects)
        if len(rows) != len(objects):
            raise InputError(f"expected {len(objects)} rows, got {len(rows)}", path)
        table = {}
        for i, (x, row) in enumerate(zip(objects, rows)):
            if len(row) != len(objects):
                raise InputError(f"expected {len(objects)} entries, got {len(row)}", f"{path}[{i}]")
            for j, (y, z) in enumerate(zip(objects, row)):
                if z not in known:
                    raise InputError(f"unknown object {z!r}", f"{path}[{i}][{j}]")
                table[x, y] = z
        return cls(name, table)

    @classmethod
    def from_function(cls, name, objects: Iterable, fn: Callable):
        objects = list(objects)
        return cls(name, {(x, y): fn(x, y) for x in objects for y in objects})

    def __call__(self, x, y):
        try:
            return self.table[x, y]
        except KeyError:
            raise InputError(f"{self.name} undefined on ({x!r}, {y!r})") from None

    def to_matrix(self, order: Sequence) -> list[list]:
        return [[self(x, y) for y in order] for x in order]

    def __repr__(self):
        return f"BinaryOpTable({self.name!r}, {len(self.table)} entries)"


@dataclass(frozen=True, eq=False)
class StructureCandidate:
    """A carrier subset of the space together with its operation tables."""

    space: Any
    carrier: frozenset
    add: BinaryOpTable
    mul: BinaryOpTable | None = None
    name: str = "R"

    def __post_init__(self):
        carrier = frozenset(self.carrier)
        if not carrier:
            raise InputError(f"carrier {self.name} must be nonempty")
        for x in carrier:
            self.space.index(x)
        object.__setattr__(self, "carrier", carrier)

    @cached_property
    def upper(self) -> frozenset:
        return frozenset(self.space.upper_approx(self.carrier))

    @cached_property
    def order(self) -> list:
        return self.space.sort(self.carrier)

    @cached_property
    def upper_order(self) -> list:
        return self.space.sort(self.upper)

    def op(self, which: str) -> BinaryOpTable:
        key = _OP_ALIASES.get(which)
        if key is None:
            raise InputError(f"unknown operation {which!r}")
        table = getattr(self, key)
        if table is None:
            raise InputError(f"structure {self.name} has no {key} table")
        return table

    def restrict(self, carrier: Iterable, name: str | None = None) -> "StructureCandidate":
        """Same space and tables, different carrier."""
        return StructureCandidate(self.space, frozenset(carrier), self.add, self.mul, name or self.name)

    def __repr__(self):
        return f"StructureCandidate({self.name}={self.order})"


@dataclass(frozen=True)
class Counterexample:
    axiom: str
    elements: tuple
    values: tuple = ()
    kind: str = "equality"
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "elements": [str(e) for e in self.elements],
            "values": [str(v) for v in self.values],
            "kind": self.kind,
            "detail": self.detail,
        }


@dataclass
class AxiomReport:
    """Per-axiom verdicts with witnesses and counterexamples.

    Verdicts listed in ``optional`` (commutativity, identity, classification
    flags) are reported but do not count towards :attr:`ok`.
    """

    subject: str
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    optional: set = field(default_factory=set)
    anomalies: list = field(default_factory=list)
    audit: dict = field(default_factory=dict)
    children: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v == PASS for k, v in self.verdicts.items() if k not in self.optional)

    def passed(self, axiom: str) -> bool:
        return self.verdicts.get(axiom) == PASS

    def failures(self, axiom: str | None = None) -> list[Counterexample]:
        return [c for c in self.counterexamples if axiom is None or c.axiom == axiom]

    def record(self, axiom: str, cex: list, optional=False):
        self.verdicts[axiom] = FAIL if cex else PASS
        self.counterexamples.extend(cex)
        if optional:
            self.optional.add(axiom)

    def skip(self, axiom: str, reason: str, optional=False):
        self.verdicts[axiom] = NA
        self.witnesses.setdefault("not_applicable", {})[axiom] = reason
        if optional:
            self.optional.add(axiom)

    def absorb(self, prefix: str, child: "AxiomReport"):
        for c in child.counterexamples:
            self.counterexamples.append(
                Counterexample(f"{prefix}/{c.axiom}", c.elements, c.values, c.kind, c.detail)
            )
        self.anomalies.extend(child.anomalies)
        for k, v in child.audit.items():
            self.audit[f"{prefix}/{k}"] = v

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "verdicts": dict(self.verdicts),
            "optional": sorted(self.optional),
            "witnesses": _jsonable(self.witnesses),
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "anomalies": list(self.anomalies),
            "audit": _jsonable(self.audit),
            "children": {k: v.to_dict() for k, v in self.children.items()},
        }


def _jsonable(value):
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(str(v) for v in value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


# -- primitive checks ---------------------------------------------------------
# Each returns the list of violations in canonical tuple order; ``first`` stops
# at the first one.


def _closure(order, op, target, axiom, first=False):
    out = []
    for x in order:
        for y in order:
            z = op(x, y)
            if z not in target:
                out.append(Counterexample(
                    axiom, (x, y), (z,), "membership",
                    f"{x}{op.name}{y} = {z} lies outside the upper approximation",
                ))
                if first:
                    return out
    return out


def _associativity(order, op, upper, axiom, first=False):
    out = []
    eq_ok = mem_ok = True
    s = op.name
    for x, y, z in product(order, repeat=3):
        left = op(op(x, y), z)
        right = op(x, op(y, z))
        if left != right:
            eq_ok = False
            out.append(Counterexample(
                axiom, (x, y, z), (left, right), "equality",
                f"({x}{s}{y}){s}{z} = {left} != {right} = {x}{s}({y}{s}{z})",
            ))
            if first:
                break
        if left not in upper or right not in upper:
            mem_ok = False
            out.append(Counterexample(
                axiom, (x, y, z), (left, right), "membership",
                f"associativity results {left}, {right} not both in the upper approximation",
            ))
            if first:
                break
    return out, {"equality": PASS if eq_ok else FAIL, "membership": PASS if mem_ok else FAIL}


def _commutativity(order, op, axiom, first=False):
    out = []
    for i, x in enumerate(order):
        for y in order[i + 1:]:
            a, b = op(x, y), op(y, x)
            if a != b:
                out.append(Counterexample(
                    axiom, (x, y), (a, b), "equality", f"{x}{op.name}{y} = {a} != {b} = {y}{op.name}{x}"
                ))
                if first:
                    return out
    return out


def identities(order, candidates, op) -> list:
    """Elements of ``candidates`` acting as two-sided identity on every element of ``order``."""
    return [e for e in candidates if all(op(x, e) == x and op(e, x) == x for x in order)]


def _identity_failures(order, candidates, op, axiom):
    out = []
    for e in candidates:
        for x in order:
            a, b = op(x, e), op(e, x)
            if a != x or b != x:
                out.append(Counterexample(
                    axiom, (e, x), (a, b), "existence", f"{e} is not an identity: {x}{op.name}{e} = {a}, {e}{op.name}{x} = {b}"
                ))
                break
    return out


def inverse_candidates(order, op, e) -> dict:
    """x -> every y in ``order`` with x op y = y op x = e."""
    return {x: [y for y in order if op(x, y) == e and op(y, x) == e] for x in order}


# -- near semigroups and near groups -------------------------------------------


def is_groupoid(S: Iterable, op: BinaryOpTable) -> bool:
    S = frozenset(S)
    return all(op(x, y) in S for x in S for y in S)


def closed_in_upper(R: StructureCandidate, which: str = "add") -> AxiomReport:
    op = R.op(which)
    rep = AxiomReport(f"closure of {R.name} under {op.name}")
    rep.record("closure", _closure(R.order, op, R.upper, "closure"))
    rep.witnesses["upper"] = R.upper_order
    return rep


def check_near_semigroup(S: StructureCandidate, which: str = "mul", first: bool = False) -> AxiomReport:
    op = S.op(which)
    rep = AxiomReport(f"near semigroup ({S.name}, {op.name})")
    cl = _closure(S.order, op, S.upper, "NS1", first)
    rep.record("NS1", cl)
    if first and cl:
        rep.skip("NS2", "closure failed")
        return rep
    cex, audit = _associativity(S.order, op, S.upper, "NS2", first)
    rep.record("NS2", cex)
    rep.audit["NS2"] = audit
    return rep


def check_near_group(
    G: StructureCandidate,
    which: str = "add",
    anomalies: str = "raise",
    first: bool = False,
) -> AxiomReport:
    """Near group axioms NG1-NG4 plus the (optional) abelian flag.

    When the structure satisfies NG1-NG4 but more than one element of the
    upper approximation is an identity on ``G`` the identity is not unique,
    which contradicts the uniqueness theorem for near groups.  With
    ``anomalies="raise"`` this raises :class:`StructuralAnomaly`; with
    ``"report"`` it is listed in ``report.anomalies``.
    """
    op = G.op(which)
    order, upper = G.order, G.upper
    rep = AxiomReport(f"near group ({G.name}, {op.name})")

    cl = _closure(order, op, upper, "NG1", first)
    rep.record("NG1", cl)
    if first and cl:
        return rep

    cex, audit = _associativity(order, op, upper, "NG2", first)
    rep.record("NG2", cex)
    rep.audit["NG2"] = audit
    if first and cex:
        return rep

    ids = identities(order, G.upper_order, op)
    if ids:
        rep.record("NG3", [])
    else:
        rep.record("NG3", _identity_failures(order, G.upper_order, op, "NG3"))
        rep.skip("NG4", "no identity")
        if first:
            return rep
    if ids:
        rep.witnesses["identity"] = ids[0]
        if len(ids) > 1:
            rep.witnesses["identities"] = ids

        chosen = None
        for e in ids:
            cands = inverse_candidates(order, op, e)
            if all(cands.values()):
                chosen = (e, cands)
                break
        if chosen is None:
            e = ids[0]
            cands = inverse_candidates(order, op, e)
            rep.record("NG4", [
                Counterexample("NG4", (x,), (e,), "existence", f"{x} has no inverse in {G.name} for identity {e}")
                for x in order if not cands[x]
            ])
        else:
            e, cands = chosen
            rep.witnesses["identity"] = e
            rep.witnesses["inverses"] = {x: ys[0] for x, ys in cands.items()}
            rep.record("NG4", [])
            multi = {x: ys for x, ys in cands.items() if len(ys) > 1}
            if multi:
                rep.witnesses["inverse_candidates"] = multi
        if first and not rep.ok:
            return rep

    rep.record("abelian", _commutativity(order, op, "abelian", first), optional=True)

    if rep.ok:
        problems = []
        if len(ids) > 1:
            problems.append(f"identity not unique in the upper approximation of {G.name}: {ids}")
        multi = rep.witnesses.get("inverse_candidates")
        if multi:
            problems.append(f"inverses not unique: {multi}")
        if problems:
            if anomalies == "raise":
                raise StructuralAnomaly("; ".join(problems))
            rep.anomalies.extend(problems)
    return rep


def additive_identity(R: StructureCandidate):
    """The unique additive near identity of ``R`` in its upper approximation."""
    ids = identities(R.order, R.upper_order, R.add)
    if not ids:
        raise StructuralError(f"{R.name} has no additive identity in its upper approximation")
    if len(ids) > 1:
        raise StructuralAnomaly(f"{R.name} has several additive identities: {ids}")
    return ids[0]


def negative(R: StructureCandidate, z, zero=None):
    """Additive inverse of ``z``: searched in the carrier first, then the upper
    approximation.  ``None`` when there is none."""
    if zero is None:
        zero = additive_identity(R)
    add = R.add
    for u in R.order + [u for u in R.upper_order if u not in R.carrier]:
        if add(z, u) == zero and add(u, z) == zero:
            return u
    return None


def _carrier_negatives(R: StructureCandidate, elements: Iterable, zero=None) -> dict:
    if zero is None:
        zero = additive_identity(R)
    out = {}
    for y in elements:
        cands = [u for u in R.order if R.add(y, u) == zero and R.add(u, y) == zero]
        if not cands:
            raise StructuralError(f"{y} has no additive inverse in {R.name}")
        out[y] = cands[0]
    return out


# -- nearness rings ----------------------------------------------------------


def _distributivity(order, add, mul, upper, first=False):
    out = []
    eq_ok = mem_ok = True
    for x, y, z in product(order, repeat=3):
        yz = add(y, z)
        a = mul(x, yz)
        xy, xz = mul(x, y), mul(x, z)
        b = add(xy, xz)
        left_mem = all(v in upper for v in (yz, a, xy, xz, b))
        xy_ = add(x, y)
        c = mul(xy_, z)
        yz_ = mul(y, z)
        d = add(xz, yz_)
        right_mem = all(v in upper for v in (xy_, c, yz_, d))
        if a != b:
            eq_ok = False
            out.append(Counterexample(
                "NR3", (x, y, z), (a, b), "equality",
                f"{x}·({y}+{z}) = {a} != {b} = {x}·{y}+{x}·{z}",
            ))
        if c != d:
            eq_ok = False
            out.append(Counterexample(
                "NR3", (x, y, z), (c, d), "equality",
                f"({x}+{y})·{z} = {c} != {d} = {x}·{z}+{y}·{z}",
            ))
        if not (left_mem and right_mem):
            mem_ok = False
            out.append(Counterexample(
                "NR3", (x, y, z), (a, b, c, d), "membership",
                "distributive-law intermediate results leave the upper approximation",
            ))
        if first and out:
            break
    return out, {"equality": PASS if eq_ok else FAIL, "membership": PASS if mem_ok else FAIL}


def check_nearness_ring(R: StructureCandidate, anomalies: str = "report", first: bool = False) -> AxiomReport:
    """NR1-NR3 (required) and the NR4 commutative / NR5 identity flags."""
    if R.mul is None:
        raise InputError(f"structure {R.name} needs both operation tables")
    add, mul = R.add, R.mul
    rep = AxiomReport(f"nearness ring {R.name}")
    rep.witnesses["upper"] = R.upper_order

    ng = check_near_group(R, "add", anomalies=anomalies, first=first)
    rep.children["NR1"] = ng
    rep.absorb("NR1", ng)
    rep.verdicts["NR1"] = PASS if ng.ok and ng.passed("abelian") else FAIL
    if "identity" in ng.witnesses:
        rep.witnesses["zero"] = ng.witnesses["identity"]
    if "inverses" in ng.witnesses:
        rep.witnesses["negatives"] = ng.witnesses["inverses"]
    if first and rep.verdicts["NR1"] != PASS:
        return rep

    ns = check_near_semigroup(R, "mul", first=first)
    rep.children["NR2"] = ns
    rep.absorb("NR2", ns)
    rep.verdicts["NR2"] = PASS if ns.ok else FAIL
    if first and not ns.ok:
        return rep

    cex, audit = _distributivity(R.order, add, mul, R.upper, first)
    rep.record("NR3", cex)
    rep.audit["NR3"] = audit
    if first and cex:
        return rep

    rep.record("NR4", _commutativity(R.order, mul, "NR4"), optional=True)

    ones = identities(R.order, R.upper_order, mul)
    if ones:
        rep.record("NR5", [], optional=True)
        rep.witnesses["one"] = ones[0]
        if len(ones) > 1:
            rep.witnesses["ones"] = ones
    else:
        rep.record("NR5", _identity_failures(R.order, R.upper_order, mul, "NR5"), optional=True)
    return rep


def check_element_props(R: StructureCandidate) -> AxiomReport:
    """Zero and sign rules, applicable when 0 lies in R and 0·x, x·0 stay in R."""
    rep = AxiomReport(f"element properties of {R.name}")
    names = ("zero_absorbs", "sign_rule", "double_negative")
    ring = check_nearness_ring(R)
    rep.children["ring"] = ring
    if not ring.ok:
        for a in names:
            rep.skip(a, f"{R.name} is not a nearness ring")
        return rep
    zero = ring.witnesses["zero"]
    rep.witnesses["zero"] = zero
    if zero not in R.carrier:
        for a in names:
            rep.skip(a, f"additive identity {zero} is not in {R.name}")
        return rep
    mul = R.mul
    outside = [x for x in R.order if mul(zero, x) not in R.carrier or mul(x, zero) not in R.carrier]
    if outside:
        for a in names:
            rep.skip(a, f"0·{outside[0]} or {outside[0]}·0 leaves {R.name}")
        return rep

    neg = ring.witnesses["negatives"]

    def minus(z):
        return neg[z] if z in neg else negative(R, z, zero)

    rep.record("zero_absorbs", [
        Counterexample("zero_absorbs", (x,), (mul(x, zero), mul(zero, x)), "equality",
                       f"{x}·0 = {mul(x, zero)}, 0·{x} = {mul(zero, x)}")
        for x in R.order if not (mul(x, zero) == zero == mul(zero, x))
    ])
    sign, double = [], []
    for x, y in product(R.order, repeat=2):
        a, b, c = mul(x, neg[y]), mul(neg[x], y), minus(mul(x, y))
        if c is None or not (a == b == c):
            sign.append(Counterexample("sign_rule", (x, y), (a, b, c), "equality",
                                       f"{x}·(-{y}) = {a}, (-{x})·{y} = {b}, -({x}·{y}) = {c}"))
        d = mul(neg[x], neg[y])
        if d != mul(x, y):
            double.append(Counterexample("double_negative", (x, y), (d, mul(x, y)), "equality",
                                         f"(-{x})·(-{y}) = {d} != {mul(x, y)} = {x}·{y}"))
    rep.record("sign_rule", sign)
    rep.record("double_negative", double)
    return rep


def _subset_of(S, R: StructureCandidate, label: str) -> frozenset:
    S = frozenset(S)
    if not S:
        raise InputError(f"{label} must be nonempty")
    if not S <= R.carrier:
        extra = R.space.sort(S - R.carrier)
        raise InputError(f"{label} is not contained in {R.name}: {extra}")
    return S


def upper_groupoid_failures(S: StructureCandidate) -> list[Counterexample]:
    """Pairs of the upper approximation of ``S`` whose sum or product leaves it."""
    out = []
    for table in (S.add, S.mul):
        if table is not None:
            out += _closure(S.upper_order, table, S.upper, "hypothesis", first=True)
    return out


def check_subnearness_ring(S: Iterable, R: StructureCandidate, name: str = "S") -> AxiomReport:
    """Subring criterion: with a groupoid upper approximation, S is a subnearness
    ring iff it contains the additive inverse (within R) of each element."""
    S = _subset_of(S, R, name)
    sub = R.restrict(S, name)
    rep = AxiomReport(f"subnearness ring {name} of {R.name}")
    bad = upper_groupoid_failures(sub)
    if bad:
        rep.counterexamples.extend(bad)
        rep.skip("subring", f"upper approximation of {name} is not a groupoid")
        return rep
    ring = check_nearness_ring(R)
    rep.children["ambient"] = ring
    if not ring.ok:
        rep.skip("subring", f"{R.name} is not a nearness ring")
        return rep
    neg = ring.witnesses["negatives"]
    rep.witnesses["negatives"] = {x: neg[x] for x in sub.order}
    rep.record("subring", [
        Counterexample("subring", (x,), (neg[x],), "membership", f"-{x} = {neg[x]} is not in {name}")
        for x in sub.order if neg[x] not in S
    ])
    cross = check_nearness_ring(sub)
    rep.children["cross_check"] = cross
    if rep.passed("subring") and not cross.ok:
        rep.anomalies.append(f"{name} meets the inverse criterion but is not itself a nearness ring")
    if not rep.passed("subring") and cross.ok:
        rep.anomalies.append(f"{name} is a nearness ring but fails the inverse criterion")
    return rep


def check_ideal(I: Iterable, R: StructureCandidate, side: str = "both", name: str = "I") -> AxiomReport:
    """Left, right or two-sided nearness ideal."""
    if side in ("two-sided", "both"):
        sides = ("left", "right")
    elif side in ("left", "right"):
        sides = (side,)
    else:
        raise InputError(f"unknown side {side!r}")
    I = _subset_of(I, R, name)
    ideal = R.restrict(I, name)
    order, upper = ideal.order, ideal.upper
    neg = _carrier_negatives(R, order)
    rep = AxiomReport(f"{side} nearness ideal {name} of {R.name}")
    rep.witnesses["upper"] = ideal.upper_order
    rep.witnesses["negatives"] = neg

    diff = []
    for x, y in product(order, repeat=2):
        d = R.add(x, neg[y])
        if d not in upper:
            diff.append(Counterexample("difference", (x, y), (d,), "membership", f"{x}-{y} = {d} not in upper({name})"))
    rep.record("difference", diff)
    for s in sides:
        cex = []
        for r, x in product(R.order, order):
            p = R.mul(r, x) if s == "left" else R.mul(x, r)
            if p not in upper:
                shown = f"{r}·{x}" if s == "left" else f"{x}·{r}"
                cex.append(Counterexample(s, (r, x), (p,), "membership", f"{shown} = {p} not in upper({name})"))
        rep.record(s, cex)
    return rep


def check_intersection_theorem(parts: Iterable[Iterable], R: StructureCandidate, kind: str = "subring") -> AxiomReport:
    """Intersection of subrings (or ideals) whose upper approximations meet
    exactly in the upper approximation of the intersection."""
    if kind not in ("subring", "ideal"):
        raise InputError(f"unknown kind {kind!r}")
    parts = [frozenset(p) for p in parts]
    if not parts:
        raise InputError("need at least one part")
    rep = AxiomReport(f"intersection of {len(parts)} {kind}s of {R.name}")
    inter = frozenset.intersection(*parts)
    rep.witnesses["intersection"] = R.space.sort(inter)
    if not inter:
        rep.skip("intersection", "intersection is empty")
        return rep

    def check(p, name):
        if kind == "subring":
            return check_subnearness_ring(p, R, name)
        return check_ideal(p, R, "both", name)

    uppers = []
    for i, p in enumerate(parts):
        c = check(p, f"S{i + 1}")
        rep.children[f"part{i + 1}"] = c
        if not c.ok:
            rep.skip("intersection", f"part {i + 1} is not a {kind}")
            return rep
        sub = R.restrict(p, f"S{i + 1}")
        if upper_groupoid_failures(sub):
            rep.skip("intersection", f"upper approximation of part {i + 1} is not a groupoid")
            return rep
        uppers.append(sub.upper)
    lhs = frozenset.intersection(*uppers)
    rhs = R.space.upper_approx(inter)
    rep.witnesses["upper_intersection"] = R.space.sort(lhs)
    rep.witnesses["upper_of_intersection"] = R.space.sort(rhs)
    if lhs != rhs:
        rep.skip("intersection", "intersection of upper approximations differs from upper approximation of intersection")
        return rep
    result = check(inter, "S")
    rep.children["result"] = result
    rep.verdicts["intersection"] = PASS if result.ok else FAIL
    if not result.ok:
        rep.counterexamples.append(Counterexample(
            "intersection", tuple(R.space.sort(inter)), (), "theorem", f"intersection fails the {kind} check"))
        rep.anomalies.append(f"intersection theorem violated for {kind}s")
    return rep


def classify_units(R: StructureCandidate) -> AxiomReport:
    """Nearness units and the division-ring / field flags."""
    rep = AxiomReport(f"units of {R.name}")
    flags = ("division_ring", "field")
    ring = check_nearness_ring(R)
    rep.children["ring"] = ring
    if not ring.ok or not ring.passed("NR5"):
        rep.witnesses["units"] = []
        reason = "no multiplicative identity" if ring.ok else f"{R.name} is not a nearness ring"
        for f in flags:
            rep.skip(f, reason, optional=True)
        return rep
    one, zero, mul = ring.witnesses["one"], ring.witnesses["zero"], R.mul
    units = [
        x for x in R.order
        if any(mul(y, x) == one for y in R.upper_order) and any(mul(x, z) == one for z in R.upper_order)
    ]
    rep.witnesses["one"] = one
    rep.witnesses["units"] = units
    nonzero = R.carrier - {zero}
    if not nonzero:
        for f in flags:
            rep.skip(f, "carrier is {0}", optional=True)
        return rep
    star = check_near_group(R.restrict(nonzero, f"{R.name}*"), "mul", anomalies="report")
    rep.children["multiplicative"] = star
    division = star.ok and not star.anomalies
    rep.record("division_ring", [] if division else star.counterexamples[:1] or [
        Counterexample("division_ring", (), (), "anomaly", "; ".join(star.anomalies))], optional=True)
    if division:
        rep.record("field", [] if star.passed("abelian") else star.failures("abelian")[:1], optional=True)
    else:
        rep.skip("field", "not a division ring", optional=True)
    return rep
