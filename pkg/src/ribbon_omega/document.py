"""JSON graph documents.

A document looks like::

    {
      "metadata": {"name": "E1", "plane": true},
      "vertices": [["e1.1"], ["e1.2"]],
      "edges": {"e1": {"darts": ["e1.1", "e1.2"], "twisted": false, "singular": false}}
    }

``metadata`` is optional, as are ``twisted`` and ``singular`` (default false).
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from typing import Any

from .ribbon import Edge, InvalidGraphError, RibbonGraph, natural_key, validate


class GraphFormatError(ValueError):
    """Malformed document text or a structurally invalid graph."""


def from_dict(doc: Mapping[str, Any]) -> RibbonGraph:
    if not isinstance(doc, Mapping):
        raise GraphFormatError("document must be a JSON object")
    problems = []
    verts = doc.get("vertices")
    if not isinstance(verts, list) or not all(
        isinstance(r, list) and all(isinstance(d, str) for d in r) for r in verts
    ):
        problems.append("$.vertices: expected a list of lists of dart ids")
        verts = []
    raw_edges = doc.get("edges", {})
    if not isinstance(raw_edges, Mapping):
        problems.append("$.edges: expected an object keyed by edge id")
        raw_edges = {}
    edges: dict[str, Edge] = {}
    singular = set()
    for eid, rec in raw_edges.items():
        where = f"$.edges.{eid}"
        if not isinstance(rec, Mapping):
            problems.append(f"{where}: expected an object")
            continue
        darts = rec.get("darts")
        if not isinstance(darts, list) or len(darts) != 2 or not all(isinstance(d, str) for d in darts):
            problems.append(f"{where}.darts: expected two dart ids")
            continue
        for flag in ("twisted", "singular"):
            if not isinstance(rec.get(flag, False), bool):
                problems.append(f"{where}.{flag}: expected a boolean")
        edges[eid] = Edge((darts[0], darts[1]), bool(rec.get("twisted", False)))
        if rec.get("singular", False):
            singular.add(eid)
    if problems:
        raise GraphFormatError("; ".join(problems))
    G = RibbonGraph(tuple(tuple(r) for r in verts), edges, frozenset(singular))
    diags = validate(G)
    if diags:
        raise GraphFormatError("invalid graph: " + "; ".join(diags))
    return G


def parse(text: str) -> RibbonGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return from_dict(doc)


def metadata_of(text: str) -> dict[str, Any]:
    doc = json.loads(text)
    return dict(doc.get("metadata", {})) if isinstance(doc, Mapping) else {}


def to_dict(G: RibbonGraph, name: str | None = None, plane: bool | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {}
    meta = {}
    if name is not None:
        meta["name"] = name
    if plane is not None:
        meta["plane"] = plane
    if meta:
        doc["metadata"] = meta
    doc["vertices"] = [list(r) for r in G.vertices]
    doc["edges"] = {
        eid: {"darts": list(G.edges[eid].darts), "twisted": G.edges[eid].twisted, "singular": eid in G.singular}
        for eid in sorted(G.edges, key=natural_key)
    }
    return doc


def serialize(G: RibbonGraph, name: str | None = None, plane: bool | None = None) -> str:
    if validate(G):
        raise InvalidGraphError(validate(G))
    return json.dumps(to_dict(G, name, plane), indent=2) + "\n"
