"""JSON structure documents in, report documents out.

A structure document looks like::

    {"objects": [...], "features": {probe: {obj: value}}, "r": 1,
     "operations": {"add": [[...]], "mul": [[...]]},
     "subsets": {name: [...]}, "maps": {name: {obj: obj}}, "meta": {...},
     "expected_tables": {...}}

Matrices are row-major with the row as the left operand, in object order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any

from .errors import InputError
from .morphisms import MappingTable
from .nas import FeatureSystem
from .structures import BinaryOpTable, StructureCandidate

_SYMBOLS = {"add": "+", "mul": "·"}
_KNOWN_KEYS = {"objects", "features", "r", "operations", "subsets", "maps", "meta", "expected_tables"}


def _expect(value, kind, path):
    if not isinstance(value, kind):
        name = kind.__name__ if isinstance(kind, type) else " or ".join(k.__name__ for k in kind)
        raise InputError(f"expected {name}, got {type(value).__name__}", path)
    return value


@dataclass
class StructureDocument:
    objects: list
    features: dict
    r: int
    operations: dict
    subsets: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)
    expected_tables: dict = field(default_factory=dict)
    source: str = "<document>"

    def __post_init__(self):
        self._system = FeatureSystem(self.objects, self.features, self.r)
        self._tables = {
            name: BinaryOpTable.from_matrix(_SYMBOLS.get(name, name), self.objects, rows, f"operations.{name}")
            for name, rows in self.operations.items()
        }
        for name, ids in self.subsets.items():
            for i, x in enumerate(ids):
                if x not in self._system._index:
                    raise InputError(f"unknown object {x!r}", f"subsets.{name}[{i}]")
        # map values are checked against the target document when the map is used
        for name, mapping in self.maps.items():
            for k in mapping:
                if k not in self._system._index:
                    raise InputError(f"unknown object {k!r}", f"maps.{name}")

    @property
    def system(self) -> FeatureSystem:
        return self._system

    def table(self, name: str) -> BinaryOpTable:
        try:
            return self._tables[name]
        except KeyError:
            raise InputError(f"no operation named {name!r}", "operations") from None

    def subset(self, name: str) -> frozenset:
        if name not in self.subsets:
            raise InputError(f"no subset named {name!r}", "subsets")
        return frozenset(self.subsets[name])

    def structure(self, carrier: str) -> StructureCandidate:
        add = self.table("add")
        mul = self._tables.get("mul")
        return StructureCandidate(self._system, self.subset(carrier), add, mul, carrier)

    def mapping(self, name: str, source: StructureCandidate, target: StructureCandidate) -> MappingTable:
        if name not in self.maps:
            raise InputError(f"no map named {name!r}", "maps")
        try:
            return MappingTable.between(self.maps[name], source, target)
        except InputError as exc:
            raise InputError(str(exc), f"maps.{name}") from None


def parse_document(text: str, source: str = "<document>") -> StructureDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}", source) from None
    return document_from_dict(data, source)


def document_from_dict(data: Any, source: str = "<document>") -> StructureDocument:
    _expect(data, dict, "$")
    unknown = sorted(set(data) - _KNOWN_KEYS)
    if unknown:
        raise InputError(f"unknown key {unknown[0]!r}", unknown[0])
    for key in ("objects", "features", "operations"):
        if key not in data:
            raise InputError("missing required key", key)
    objects = _expect(data["objects"], list, "objects")
    for i, x in enumerate(objects):
        _expect(x, str, f"objects[{i}]")
    features = _expect(data["features"], dict, "features")
    for name, values in features.items():
        _expect(values, dict, f"features.{name}")
    r = data.get("r", 1)
    operations = _expect(data["operations"], dict, "operations")
    if "add" not in operations:
        raise InputError("an 'add' table is required", "operations.add")
    for name, rows in operations.items():
        _expect(rows, list, f"operations.{name}")
        for i, row in enumerate(rows):
            _expect(row, list, f"operations.{name}[{i}]")
    subsets = _expect(data.get("subsets", {}), dict, "subsets")
    for name, ids in subsets.items():
        _expect(ids, list, f"subsets.{name}")
    maps = _expect(data.get("maps", {}), dict, "maps")
    for name, m in maps.items():
        _expect(m, dict, f"maps.{name}")
    return StructureDocument(
        objects, features, r, operations, subsets, maps,
        _expect(data.get("meta", {}), dict, "meta"),
        _expect(data.get("expected_tables", {}), dict, "expected_tables"),
        source,
    )


def load_document(path: str) -> StructureDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", path) from None
    return parse_document(text, path)


def example_text() -> str:
    return resources.files("nearness").joinpath("data/worked_example.json").read_text(encoding="utf-8")


def load_example() -> StructureDocument:
    """The bundled eight-object document with subsets R and S."""
    return parse_document(example_text(), "worked_example.json")


# -- reports ----------------------------------------------------------------


@dataclass
class ReportDocument:
    command: str
    verdicts: dict = field(default_factory=dict)
    required: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    deviations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.verdicts[k] == "pass" for k in self.required)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "verdicts": self.verdicts,
            "required": self.required,
            "witnesses": self.witnesses,
            "counterexamples": self.counterexamples,
            "tables": self.tables,
            "deviations": self.deviations,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        data = json.loads(text)
        return cls(**data)


def render_report(rep: ReportDocument, fmt: str = "text") -> str:
    if fmt == "json":
        return rep.to_json() + "\n"
    if fmt != "text":
        raise InputError(f"unknown format {fmt!r}")
    lines = [f"command: {rep.command}"]
    if rep.verdicts:
        width = max(len(k) for k in rep.verdicts)
        for k, v in rep.verdicts.items():
            tag = "" if k in rep.required else "  (informational)"
            lines.append(f"  {k:<{width}}  {v}{tag}")
    else:
        lines.append("no checks requested")
    for k, v in rep.witnesses.items():
        lines.append(f"{k}: {_inline(v)}")
    for name, tab in rep.tables.items():
        lines.append("")
        lines.append(name)
        lines.extend(_grid(tab))
    if rep.counterexamples:
        lines.append("")
        lines.append(f"counterexamples ({len(rep.counterexamples)}):")
        for c in rep.counterexamples[:20]:
            lines.append(f"  [{c['axiom']}] {c['detail']}")
        if len(rep.counterexamples) > 20:
            lines.append(f"  ... {len(rep.counterexamples) - 20} more")
    if rep.deviations:
        lines.append("")
        lines.append("deviations:")
        for d in rep.deviations:
            lines.append(f"  {d['item']}: printed {_inline(d['printed'])}, computed {_inline(d['computed'])}")
    for n in rep.notes:
        lines.append(f"note: {n}")
    return "\n".join(lines) + "\n"


def _inline(v) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_inline(x)}" for k, x in v.items()) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    return str(v)


def _grid(tab: dict) -> list[str]:
    """``{"op": "+", "rows": [...], "cols": [...], "cells": [[...]]}`` as a bordered grid."""
    cols, rows, cells = tab["cols"], tab["rows"], tab["cells"]
    w = max(len(str(x)) for x in [tab["op"], *cols, *rows, *(c for row in cells for c in row)])
    head = f"{tab['op']:>{w}} | " + " ".join(f"{c:>{w}}" for c in cols)
    out = [head, "-" * len(head)]
    for r, row in zip(rows, cells):
        out.append(f"{r:>{w}} | " + " ".join(f"{c:>{w}}" for c in row))
    return out
