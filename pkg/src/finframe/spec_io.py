"""FrameSpec ingestion: a JSON description of a frame and its builders.

Supported kinds:

* ``topology``  payload ``{"points": [...], "opens": [[...], ...]}``
* ``poset``     payload ``{"elements": [...], "covers": [[lo, hi], ...]}``
* ``lattice``   payload ``{"elements": [...], "leq": [[x, y], ...]}`` with an
  optional ``"tables": {"meet": [[...]], "join": [[...]], "heyting": [[...]]}``
  override that is ingested as-is (integrity checks then run on the result)
* ``standard``  payload ``{"family": "chain" | "boolean", "n": int}``
* ``product``   payload ``{"factors": [spec, spec]}`` with nested FrameSpecs

Every spec may carry an optional top-level ``"name"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .builders import (
    PosetSpec,
    TopologySpec,
    downset_frame,
    from_topology,
    product_frame,
    standard_frame,
)
from .errors import MalformedJson, UnknownKind
from .frame import Frame, build_frame, frame_from_tables

__all__ = ["FrameSpec", "parse_frame_spec", "serialize_frame_spec", "build_from_spec"]

KINDS = ("topology", "poset", "lattice", "standard", "product")


@dataclass(frozen=True)
class FrameSpec:
    kind: str
    payload: dict
    name: str | None = None


def _expect(cond: bool, where: str, what: str) -> None:
    if not cond:
        raise MalformedJson(f"{where}: {what}")


def _string_list(value, where: str) -> list:
    _expect(isinstance(value, list) and all(isinstance(x, str) for x in value),
            where, "expected a list of strings")
    return value


def _validate_payload(kind: str, payload, where: str) -> dict:
    _expect(isinstance(payload, dict), where, "payload must be an object")
    if kind == "topology":
        _expect(set(payload) <= {"points", "opens"}, where,
                f"unexpected fields {sorted(set(payload) - {'points', 'opens'})}")
        _string_list(payload.get("points"), f"{where}.points")
        opens = payload.get("opens")
        _expect(isinstance(opens, list), f"{where}.opens", "expected a list of lists")
        for i, o in enumerate(opens):
            _string_list(o, f"{where}.opens[{i}]")
    elif kind == "poset":
        _expect(set(payload) <= {"elements", "covers"}, where, "unexpected fields")
        _string_list(payload.get("elements"), f"{where}.elements")
        covers = payload.get("covers", [])
        _expect(isinstance(covers, list), f"{where}.covers", "expected a list of pairs")
        for i, c in enumerate(covers):
            _expect(isinstance(c, list) and len(c) == 2 and
                    all(isinstance(x, str) for x in c),
                    f"{where}.covers[{i}]", "expected a [lower, upper] pair of names")
    elif kind == "lattice":
        _expect(set(payload) <= {"elements", "leq", "tables"}, where, "unexpected fields")
        elements = _string_list(payload.get("elements"), f"{where}.elements")
        leq = payload.get("leq", [])
        _expect(isinstance(leq, list), f"{where}.leq", "expected a list of pairs")
        for i, c in enumerate(leq):
            _expect(isinstance(c, list) and len(c) == 2 and
                    all(isinstance(x, str) for x in c),
                    f"{where}.leq[{i}]", "expected a [lower, upper] pair of names")
        tables = payload.get("tables")
        if tables is not None:
            _expect(isinstance(tables, dict) and set(tables) == {"meet", "join", "heyting"},
                    f"{where}.tables", "expected meet, join and heyting tables")
            size = len(elements)
            for key in ("meet", "join", "heyting"):
                t = tables[key]
                _expect(isinstance(t, list) and len(t) == size and
                        all(isinstance(row, list) and len(row) == size and
                            all(isinstance(v, int) for v in row) for row in t),
                        f"{where}.tables.{key}", f"expected a {size}x{size} table of ids")
    elif kind == "standard":
        _expect(set(payload) <= {"family", "n"}, where, "unexpected fields")
        _expect(payload.get("family") in ("chain", "boolean"),
                f"{where}.family", "expected 'chain' or 'boolean'")
        _expect(isinstance(payload.get("n"), int) and not isinstance(payload["n"], bool),
                f"{where}.n", "expected an integer")
    elif kind == "product":
        _expect(set(payload) <= {"factors"}, where, "unexpected fields")
        factors = payload.get("factors")
        _expect(isinstance(factors, list) and len(factors) == 2,
                f"{where}.factors", "expected exactly two nested frame specs")
        for i, f in enumerate(factors):
            _spec_from_obj(f, f"{where}.factors[{i}]")
    return payload


def _spec_from_obj(obj, where: str) -> FrameSpec:
    _expect(isinstance(obj, dict), where, "expected an object")
    _expect(set(obj) <= {"kind", "payload", "name"}, where,
            f"unexpected fields {sorted(set(obj) - {'kind', 'payload', 'name'})}")
    kind = obj.get("kind")
    _expect(isinstance(kind, str), f"{where}.kind", "missing or non-string kind")
    if kind not in KINDS:
        raise UnknownKind(f"{where}.kind: unknown kind {kind!r}; expected one of {KINDS}")
    name = obj.get("name")
    _expect(name is None or isinstance(name, str), f"{where}.name", "expected a string")
    payload = _validate_payload(kind, obj.get("payload"), f"{where}.payload")
    return FrameSpec(kind, payload, name)


def parse_frame_spec(text: str) -> FrameSpec:
    """Parse and structurally validate a frame description."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return _spec_from_obj(obj, "$")


def serialize_frame_spec(spec: FrameSpec) -> str:
    """Canonical JSON for a spec; parse(serialize(s)) == s."""
    obj = {"kind": spec.kind, "payload": spec.payload}
    if spec.name is not None:
        obj["name"] = spec.name
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def build_from_spec(spec: FrameSpec) -> Frame:
    """Build the frame a spec describes, running the matching builder's validation."""
    if spec.kind == "topology":
        p = spec.payload
        return from_topology(TopologySpec(tuple(p["points"]),
                                          tuple(tuple(o) for o in p["opens"]),
                                          name=spec.name))
    if spec.kind == "poset":
        p = spec.payload
        return downset_frame(PosetSpec(tuple(p["elements"]),
                                       tuple(tuple(c) for c in p.get("covers", [])),
                                       name=spec.name))
    if spec.kind == "lattice":
        p = spec.payload
        elements = list(p["elements"])
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise MalformedJson("$.payload.elements: duplicate element names")
        pairs = []
        for lo, hi in p.get("leq", []):
            if lo not in index or hi not in index:
                raise MalformedJson(f"$.payload.leq: unknown element in pair [{lo!r}, {hi!r}]")
            pairs.append((index[lo], index[hi]))
        tables = p.get("tables")
        if tables is None:
            frame = build_frame(len(elements), pairs, labels=tuple(elements), name=spec.name)
        else:
            frame = frame_from_tables(len(elements), pairs,
                                      tables["meet"], tables["join"], tables["heyting"],
                                      labels=tuple(elements), name=spec.name)
        return frame
    if spec.kind == "standard":
        frame = standard_frame(spec.payload["family"], spec.payload["n"])
        if spec.name is not None:
            return Frame(frame.size, frame.up, frame.meet_table, frame.join_table,
                         frame.heyting_table, frame.bottom, frame.top, frame.labels,
                         spec.name)
        return frame
    if spec.kind == "product":
        left = build_from_spec(_spec_from_obj(spec.payload["factors"][0], "$.factors[0]"))
        right = build_from_spec(_spec_from_obj(spec.payload["factors"][1], "$.factors[1]"))
        frame = product_frame(left, right)
        if spec.name is not None:
            return Frame(frame.size, frame.up, frame.meet_table, frame.join_table,
                         frame.heyting_table, frame.bottom, frame.top, frame.labels,
                         spec.name)
        return frame
    raise UnknownKind(f"unknown kind {spec.kind!r}")


def default_name(spec: FrameSpec, frame: Frame) -> str:
    return spec.name or frame.name or f"{spec.kind}-{frame.size}"
