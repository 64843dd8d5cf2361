"""Nearness ring homomorphisms, kernels and the restricted isomorphism theorem.

Maps are explicit finite tables from the upper approximation of the source
carrier to the upper approximation of the target carrier.  Preservation laws
bind on pairs of the source carrier (``strict=True`` also binds on every
pair of the domain whose results stay in the domain).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .errors import InputError, NearnessError
from .quotient import QuotientRing, build_quotient_ring, check_quotient_hypothesis
from .structures import (
    NA,
    PASS,
    AxiomReport,
    Counterexample,
    StructureCandidate,
    additive_identity,
    check_ideal,
    check_nearness_ring,
    check_subnearness_ring,
    negative,
    upper_groupoid_failures,
)


@dataclass(frozen=True)
class MappingTable:
    domain: frozenset
    codomain: frozenset
    mapping: Mapping

    def __post_init__(self):
        missing = [x for x in self.domain if x not in self.mapping]
        if missing:
            raise InputError(f"map undefined on {missing[0]!s}")
        stray = [x for x in self.domain if self.mapping[x] not in self.codomain]
        if stray:
            raise InputError(f"image of {stray[0]!s} ({self.mapping[stray[0]]!s}) is outside the codomain")
        object.__setattr__(self, "mapping", {x: self.mapping[x] for x in self.domain})

    @classmethod
    def between(cls, mapping: Mapping, R1: StructureCandidate, R2: StructureCandidate) -> "MappingTable":
        """Map from the upper approximation of ``R1`` to that of ``R2``."""
        return cls(R1.upper, R2.upper, mapping)

    def __call__(self, x):
        try:
            return self.mapping[x]
        except KeyError:
            raise InputError(f"{x!s} is outside the domain of the map") from None

    def image(self, X: Iterable) -> frozenset:
        return frozenset(self(x) for x in X)


def _laws(m, pairs, R1, R2, skip_outside=False):
    out = []
    for which, label in (("add", "additive"), ("mul", "multiplicative")):
        op1, op2 = R1.op(which), R2.op(which)
        for x, y in pairs:
            s = op1(x, y)
            if s not in m.domain:
                if skip_outside:
                    continue
                raise InputError(f"{x}{op1.name}{y} = {s} is outside the domain of the map")
            lhs, rhs = m(s), op2(m(x), m(y))
            if lhs != rhs:
                out.append(Counterexample(
                    label, (x, y), (lhs, rhs), "equality",
                    f"map({x}{op1.name}{y}) = {lhs} != {rhs} = map({x}){op2.name}map({y})",
                ))
    return out


def check_nearness_hom(
    m: MappingTable, R1: StructureCandidate, R2: StructureCandidate, strict: bool = False
) -> AxiomReport:
    """Both preservation laws plus mono / epi / iso flags."""
    rep = AxiomReport(f"nearness homomorphism {R1.name} -> {R2.name}")
    cex = _laws(m, list(product(R1.order, repeat=2)), R1, R2)
    if strict:
        dom = R1.space.sort(m.domain)
        extra = [(x, y) for x, y in product(dom, repeat=2) if not (x in R1.carrier and y in R1.carrier)]
        cex += _laws(m, extra, R1, R2, skip_outside=True)
    for law in ("additive", "multiplicative"):
        rep.record(law, [c for c in cex if c.axiom == law])
    mono = len(m.image(m.domain)) == len(m.domain)
    epi = m.image(m.domain) == m.codomain
    for flag, value in (("mono", mono), ("epi", epi), ("iso", mono and epi)):
        rep.verdicts[flag] = PASS if value else "fail"
        rep.optional.add(flag)
    return rep


def kernel(m: MappingTable, R1: StructureCandidate, R2: StructureCandidate) -> frozenset:
    """Carrier elements of ``R1`` sent to the additive near identity of ``R2``."""
    zero = additive_identity(R2)
    return frozenset(x for x in R1.order if m(x) == zero)


def check_hom_properties(m: MappingTable, R1: StructureCandidate, R2: StructureCandidate) -> AxiomReport:
    """Zero goes to zero and negatives go to negatives."""
    rep = AxiomReport(f"homomorphism properties {R1.name} -> {R2.name}")
    zero1, zero2 = additive_identity(R1), additive_identity(R2)
    rep.witnesses["zero"] = {"source": zero1, "target": zero2}
    rep.record("zero", [] if m(zero1) == zero2 else [
        Counterexample("zero", (zero1,), (m(zero1), zero2), "equality", f"map({zero1}) = {m(zero1)} != {zero2}")
    ])
    cex = []
    for x in R1.order:
        nx = negative(R1, x, zero1)
        target = negative(R2, m(x), zero2)
        if nx is None or target is None or m(nx) != target:
            cex.append(Counterexample(
                "negation", (x,), (nx if nx is None else m(nx), target), "equality",
                f"map(-{x}) = {None if nx is None else m(nx)} but -map({x}) = {target}",
            ))
    rep.record("negation", cex)
    return rep


def check_image_subring(
    m: MappingTable, S: Iterable, R1: StructureCandidate, R2: StructureCandidate, name: str = "S"
) -> AxiomReport:
    S = frozenset(S)
    rep = AxiomReport(f"image of {name} under the map")
    pre = check_subnearness_ring(S, R1, name)
    rep.children["source"] = pre
    if not pre.ok:
        rep.skip("image_subring", f"{name} is not a subnearness ring of {R1.name}")
        return rep
    sub = R1.restrict(S, name)
    image = m.image(S)
    lhs = m.image(sub.upper)
    rhs = frozenset(R2.space.upper_approx(image))
    rep.witnesses["image"] = R2.space.sort(image)
    rep.witnesses["image_of_upper"] = R2.space.sort(lhs)
    rep.witnesses["upper_of_image"] = R2.space.sort(rhs)
    if lhs != rhs:
        rep.skip("image_subring", "image of the upper approximation differs from the upper approximation of the image")
        return rep
    if not image <= R2.carrier:
        rep.skip("image_subring", f"image is not contained in {R2.name}")
        return rep
    target = check_subnearness_ring(image, R2, f"map({name})")
    rep.children["image"] = target
    rep.verdicts["image_subring"] = target.verdicts["subring"]
    if target.verdicts["subring"] != PASS:
        rep.counterexamples.extend(target.counterexamples)
    if check_nearness_ring(sub).passed("NR4"):
        image_ring = check_nearness_ring(R2.restrict(image, f"map({name})"))
        rep.record("image_commutative", image_ring.failures("NR4"), optional=True)
    else:
        rep.skip("image_commutative", f"{name} is not commutative", optional=True)
    return rep


def check_kernel_ideal(m: MappingTable, R1: StructureCandidate, R2: StructureCandidate) -> AxiomReport:
    rep = AxiomReport(f"kernel of the map {R1.name} -> {R2.name}")
    K = kernel(m, R1, R2)
    rep.witnesses["kernel"] = R1.space.sort(K)
    if not K:
        rep.skip("kernel_ideal", "kernel is empty")
        return rep
    bad = upper_groupoid_failures(R1.restrict(K, "Ker"))
    if bad:
        rep.counterexamples.extend(bad)
        rep.skip("kernel_ideal", "upper approximation of the kernel is not a groupoid")
        return rep
    ideal = check_ideal(K, R1, "both", "Ker")
    rep.children["ideal"] = ideal
    rep.verdicts["kernel_ideal"] = PASS if ideal.ok else "fail"
    if not ideal.ok:
        rep.counterexamples.extend(ideal.counterexamples)
        rep.anomalies.append("kernel is not a nearness ideal although the groupoid hypothesis holds")
    return rep


@dataclass
class NaturalHom:
    mapping: MappingTable
    quotient: QuotientRing
    report: AxiomReport


def natural_hom(R: StructureCandidate, S: Iterable, candidates=None, sub_name: str = "S") -> NaturalHom:
    """``x -> x+S`` from the upper approximation of R into the quotient."""
    q = build_quotient_ring(R, S, candidates, sub_name)
    target = q.structure
    m = MappingTable(R.upper, target.upper, {x: q.space.coset(x) for x in R.upper})
    rep = check_nearness_hom(m, R, target)
    if not rep.ok:
        rep.anomalies.append("natural map fails a preservation law")
    return NaturalHom(m, q, rep)


def check_restricted_hom(
    m: MappingTable, S: Iterable, R1: StructureCandidate, R2: StructureCandidate
) -> AxiomReport:
    """Preservation laws over pairs of ``S`` only."""
    S = frozenset(S)
    if not S:
        raise InputError("restriction set must be nonempty")
    if not S <= m.domain:
        raise InputError("restriction set is not inside the domain of the map")
    order = R1.space.sort(S)
    rep = AxiomReport(f"restricted homomorphism on {len(S)} elements")
    cex = []
    for which, label in (("add", "additive"), ("mul", "multiplicative")):
        op1, op2 = R1.op(which), R2.op(which)
        for x, y in product(order, repeat=2):
            s = op1(x, y)
            if s not in m.domain:
                cex.append(Counterexample(label, (x, y), (s,), "membership", f"{x}{op1.name}{y} = {s} is outside the domain"))
                continue
            lhs, rhs = m(s), op2(m(x), m(y))
            if lhs != rhs:
                cex.append(Counterexample(
                    label, (x, y), (lhs, rhs), "equality",
                    f"map({x}{op1.name}{y}) = {lhs} != {rhs} = map({x}){op2.name}map({y})",
                ))
    for law in ("additive", "multiplicative"):
        rep.record(law, [c for c in cex if c.axiom == law])
    return rep


@dataclass
class IsoResult:
    report: AxiomReport
    quotient: QuotientRing | None = None
    image: StructureCandidate | None = None
    eta: MappingTable | None = None


def first_iso_check(
    chi: MappingTable, R1: StructureCandidate, R2: StructureCandidate, candidates=None
) -> IsoResult:
    """Quotient of R1 by the kernel of ``chi`` versus the image ``chi(R1)``.

    Builds the case-split map on the upper approximation of the quotient:
    cosets with representative in the upper approximation of R1 go to
    ``chi(representative)``, everything else to the additive identity of the
    image.  Well-definedness on cosets with equal member sets and the
    restricted preservation laws are verified rather than assumed.
    """
    rep = AxiomReport(f"restricted isomorphism {R1.name}/Ker -> image")
    res = IsoResult(rep)
    verdict = "restricted_iso"

    hom = check_nearness_hom(chi, R1, R2)
    rep.children["hom"] = hom
    if not hom.ok:
        rep.skip(verdict, "map is not a nearness homomorphism")
        return res
    K = kernel(chi, R1, R2)
    rep.witnesses["kernel"] = R1.space.sort(K)
    if not K:
        rep.skip(verdict, "kernel is empty")
        return res
    if upper_groupoid_failures(R1.restrict(K, "Ker")):
        rep.skip(verdict, "upper approximation of the kernel is not a groupoid")
        return res
    hyp = check_quotient_hypothesis(R1, K, candidates, "Ker")
    rep.children["quotient_hypothesis"] = hyp
    if not hyp.ok:
        rep.skip(verdict, "quotient hypothesis fails")
        return res
    image = chi.image(R1.carrier)
    if frozenset(R2.space.upper_approx(image)) != chi.image(R1.upper):
        rep.skip(verdict, "upper approximation of the image differs from the image of the upper approximation")
        return res

    q = build_quotient_ring(R1, K, candidates, "Ker")
    im = R2.restrict(image, f"{R2.name}|image")
    try:
        e = additive_identity(im)
    except NearnessError as exc:
        rep.skip(verdict, f"image has no unique additive identity: {exc}")
        return res
    domain = q.structure.upper
    ext_reps = R1.upper
    eta = MappingTable(
        domain, im.upper,
        {A: chi(A.representative) if A.representative in ext_reps else e for A in domain},
    )
    res.quotient, res.image, res.eta = q, im, eta

    wd = []
    dom = q.space.sort(domain)
    for i, A in enumerate(dom):
        for B in dom[i + 1:]:
            if A.members == B.members and eta(A) != eta(B):
                wd.append(Counterexample("well_defined", (A, B), (eta(A), eta(B)), "equality",
                                         f"{A.label} and {B.label} are equal sets with images {eta(A)} != {eta(B)}"))
    rep.record("well_defined", wd)
    restricted = check_restricted_hom(eta, q.structure.carrier, q.structure, im)
    rep.children["restricted"] = restricted
    rep.absorb("restricted", restricted)
    rep.verdicts["restricted_hom"] = PASS if restricted.ok else "fail"
    rep.verdicts[verdict] = PASS if rep.ok else "fail"

    rep.witnesses["eta"] = {A.label: eta(A) for A in dom}
    classes = list(dict.fromkeys(A.members for A in q.family.cosets))
    images = {}
    for A in q.family.cosets:
        images.setdefault(A.members, set()).add(eta(A))
    bijective = all(len(v) == 1 for v in images.values()) and len(
        {next(iter(v)) for v in images.values()}) == len(classes) and {
        next(iter(v)) for v in images.values()} == image
    rep.witnesses["classes"] = [R1.space.sort(c) for c in classes]
    rep.witnesses["bijective_on_classes"] = bijective
    return res
