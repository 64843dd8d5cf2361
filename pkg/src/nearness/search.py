"""Small-structure search: nearness rings hiding inside non-rings.

Whether a carrier ``G`` passes a checker depends only on the operation
tables and on ``D``, the upper approximation of ``G``.  Any ``D`` containing
``G`` is produced by a single probe that gives ``D`` one shared value and
every other object its own value, so the exhaustive search walks
``(G, D)`` pairs instead of feature tables.

Tables are explored lazily: a checker runs against partially filled tables
and every read of an empty cell branches over all objects.  A finished run
is a *partial model*; each of its completions gets the same verdict.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import InputError, ResourceError, StructuralAnomaly
from .nas import FeatureSystem
from .rings import MAX_ORDER, is_ordinary_ring, labelled_rings
from .structures import (
    BinaryOpTable,
    StructureCandidate,
    check_near_group,
    check_nearness_ring,
    identities,
    inverse_candidates,
)

EXHAUSTIVE_MAX = 3


class UnassignedEntry(Exception):
    """Raised when a checker reads an empty cell; deliberately not a NearnessError."""

    def __init__(self, table, key):
        super().__init__(f"{table}{key}")
        self.table, self.key = table, key


class PartialOpTable:
    def __init__(self, name, cells=None):
        self.name = name
        self.cells = dict(cells or {})

    def __call__(self, x, y):
        try:
            return self.cells[x, y]
        except KeyError:
            raise UnassignedEntry(self.name, (x, y)) from None


def lazy_models(run, tables: dict, values):
    """Yield ``(assignment, result)`` for every partial model of ``run``.

    ``tables`` maps a name to a :class:`PartialOpTable`; ``run()`` must only
    read cells through them.  Branches are explored depth first with values
    in the given order, so the output order is deterministic.
    """
    values = list(values)
    start = {name: dict(t.cells) for name, t in tables.items()}
    stack = [start]
    while stack:
        cells = stack.pop()
        for name, t in tables.items():
            t.cells = cells[name]
        try:
            result = run()
        except UnassignedEntry as miss:
            for v in reversed(values):
                nxt = {k: dict(c) for k, c in cells.items()}
                nxt[miss.table][miss.key] = v
                stack.append(nxt)
            continue
        yield {k: dict(c) for k, c in cells.items()}, result


def carrier_space(n: int, hood: frozenset) -> FeatureSystem:
    """Objects ``0..n-1`` with one probe whose only non-singleton class is ``hood``."""
    values = {x: ("near" if x in hood else f"v{x}") for x in range(n)}
    return FeatureSystem(list(range(n)), {"phi": values}, 1)


def _pairs(n: int):
    objs = range(n)
    for k in range(1, n):
        for g in combinations(objs, k):
            rest = [x for x in objs if x not in g]
            for j in range(len(rest) + 1):
                for extra in combinations(rest, j):
                    yield frozenset(g), frozenset(g) | frozenset(extra)


def near_group_theorems(G: StructureCandidate, op, report) -> dict:
    """Identity and inverse uniqueness, double inverse and cancellation on a near group."""
    order = G.order
    ids = identities(order, G.upper_order, op)
    e = report.witnesses["identity"]
    cands = inverse_candidates(order, op, e)
    inv = {x: ys[0] for x, ys in cands.items()}
    cancel = all(
        x == y
        for x, y, z in product(order, repeat=3)
        if op(x, z) == op(y, z) or op(z, x) == op(z, y)
    )
    return {
        "identity_unique": len(ids) == 1,
        "inverse_unique": all(len(ys) == 1 for ys in cands.values()),
        "double_inverse": all(inv[inv[x]] == x for x in order),
        "cancellation": cancel,
    }


@dataclass
class SearchResult:
    size: int
    mode: str
    seed: int | None
    ring_models: int = 0
    ring_structures: int = 0
    near_group_models: int = 0
    near_group_structures: int = 0
    near_group_anomalies: int = 0
    anomaly_structures: int = 0
    theorem_exceptions: dict = field(default_factory=dict)
    examples: list = field(default_factory=list)
    anomaly_examples: list = field(default_factory=list)
    samples: int = 0

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _consistent_rings(n, add_cells, mul_cells) -> int:
    count = 0
    for add, mul in labelled_rings(n):
        if all(add[x][y] == v for (x, y), v in add_cells.items()) and all(
            mul[x][y] == v for (x, y), v in mul_cells.items()
        ):
            count += 1
    return count


def _describe(G, D, add_cells, mul_cells=None) -> dict:
    out = {
        "carrier": sorted(G),
        "upper": sorted(D),
        "add": {f"{x}+{y}": v for (x, y), v in sorted(add_cells.items())},
    }
    if mul_cells is not None:
        out["mul"] = {f"{x}·{y}": v for (x, y), v in sorted(mul_cells.items())}
    return out


def _exhaustive(n: int, max_examples: int) -> SearchResult:
    res = SearchResult(n, "exhaustive", None)
    res.theorem_exceptions = dict.fromkeys(("identity_unique", "inverse_unique", "double_inverse", "cancellation"), 0)
    free_total = 2 * n * n
    for G, D in _pairs(n):
        space = carrier_space(n, D)
        add, mul = PartialOpTable("+"), PartialOpTable("·")

        ring = StructureCandidate(space, G, add, mul, "G")

        def run_ring():
            return check_nearness_ring(ring, anomalies="report", first=True).ok

        for cells, ok in lazy_models(run_ring, {"+": add, "·": mul}, range(n)):
            if not ok:
                continue
            a, m = cells["+"], cells["·"]
            completions = n ** (free_total - len(a) - len(m)) - _consistent_rings(n, a, m)
            if completions <= 0:
                continue
            res.ring_models += 1
            res.ring_structures += completions
            if len(res.examples) < max_examples:
                res.examples.append(_describe(G, D, a, m) | {"completions": completions})

        grp_table = PartialOpTable("+")
        grp = StructureCandidate(space, G, grp_table, None, "G")

        def run_group():
            try:
                rep = check_near_group(grp, "add", anomalies="raise", first=True)
            except StructuralAnomaly as exc:
                return "anomaly", str(exc)
            if not rep.ok:
                return "fail", None
            return "pass", near_group_theorems(grp, grp_table, rep)

        for cells, (status, info) in lazy_models(run_group, {"+": grp_table}, range(n)):
            completions = n ** (n * n - len(cells["+"]))
            if status == "anomaly":
                res.near_group_anomalies += 1
                res.anomaly_structures += completions
                if len(res.anomaly_examples) < max_examples:
                    res.anomaly_examples.append(_describe(G, D, cells["+"]) | {"reason": info})
            elif status == "pass":
                res.near_group_models += 1
                res.near_group_structures += completions
                for k, v in info.items():
                    if not v:
                        res.theorem_exceptions[k] += 1
    return res


def _random_table(rng, n):
    return [[rng.randrange(n) for _ in range(n)] for _ in range(n)]


def _random(n: int, seed: int, samples: int, max_examples: int) -> SearchResult:
    rng = random.Random(seed)
    res = SearchResult(n, "random", seed, samples=samples)
    res.theorem_exceptions = dict.fromkeys(("identity_unique", "inverse_unique", "double_inverse", "cancellation"), 0)
    objs = list(range(n))
    for _ in range(samples):
        add_rows, mul_rows = _random_table(rng, n), _random_table(rng, n)
        nprobes = rng.randint(1, 3)
        features = {f"phi{i + 1}": {x: rng.randrange(n) for x in objs} for i in range(nprobes)}
        r = rng.randint(1, nprobes)
        if is_ordinary_ring(add_rows, mul_rows):
            continue
        space = FeatureSystem(objs, features, r)
        add = BinaryOpTable.from_matrix("+", objs, add_rows)
        mul = BinaryOpTable.from_matrix("·", objs, mul_rows)
        for k in range(1, n):
            for g in combinations(objs, k):
                cand = StructureCandidate(space, frozenset(g), add, mul, "G")
                if check_nearness_ring(cand, anomalies="report", first=True).ok:
                    res.ring_models += 1
                    res.ring_structures += 1
                    if len(res.examples) < max_examples:
                        res.examples.append({
                            "carrier": list(g), "upper": cand.upper_order, "r": r,
                            "features": {p: [v[x] for x in objs] for p, v in features.items()},
                            "add": add_rows, "mul": mul_rows,
                        })
                try:
                    ng = check_near_group(cand, "add", anomalies="raise")
                except StructuralAnomaly:
                    res.near_group_anomalies += 1
                    res.anomaly_structures += 1
                    continue
                if ng.ok:
                    res.near_group_models += 1
                    res.near_group_structures += 1
                    for name, v in near_group_theorems(cand, add, ng).items():
                        if not v:
                            res.theorem_exceptions[name] += 1
    return res


def search_structures(size: int, seed: int = 0, exhaustive: bool = False,
                      samples: int = 200, max_examples: int = 5) -> SearchResult:
    """Find carriers passing the nearness-ring check inside tables that are not rings.

    Exhaustive mode counts (carrier, upper approximation, table pair)
    triples exactly and also runs the near-group theorem suite on every
    near group; it is limited to ``size <= 3``.  Random mode samples
    ``samples`` table pairs with random probe tables, seeded.
    """
    if isinstance(size, bool) or not isinstance(size, int) or size < 1:
        raise InputError(f"size must be a positive integer, got {size!r}", "size")
    if size > MAX_ORDER:
        raise ResourceError(f"size {size} exceeds the search bound {MAX_ORDER}")
    if exhaustive:
        if size > EXHAUSTIVE_MAX:
            raise ResourceError(f"exhaustive search is limited to size {EXHAUSTIVE_MAX}")
        return _exhaustive(size, max_examples)
    return _random(size, seed, samples, max_examples)
