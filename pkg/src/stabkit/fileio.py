"""JSON point-set and graph files.

Points: ``{"points": [[x, y], ...]}``; graphs add ``"edges": [[u, v], ...]``.
Array position is the point's label.
"""
from __future__ import annotations

import json
from pathlib import Path

from .geom_core import GeometryError, PointSet
from .geom_graph import GeometricGraph, GraphError


class InputError(ValueError):
    pass


def _read(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    return data


def _int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def parse_points(data: dict, where: str = "<input>") -> PointSet:
    pts = data.get("points")
    if not isinstance(pts, list):
        raise InputError(f"{where}: field 'points' must be a list")
    for i, p in enumerate(pts):
        if not (isinstance(p, list) and len(p) == 2 and all(_int(c) for c in p)):
            raise InputError(f"{where}: field 'points[{i}]' must be [x, y] with integer coordinates")
    try:
        return PointSet(pts)
    except GeometryError as exc:
        raise InputError(f"{where}: {exc}") from exc


def parse_graph(data: dict, where: str = "<input>") -> GeometricGraph:
    P = parse_points(data, where)
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise InputError(f"{where}: field 'edges' must be a list")
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(_int(c) for c in e)):
            raise InputError(f"{where}: field 'edges[{i}]' must be [u, v] with integer indices")
    try:
        return GeometricGraph(P, [tuple(e) for e in edges])
    except GraphError as exc:
        raise InputError(f"{where}: field 'edges': {exc}") from exc


def load_points(path) -> PointSet:
    return parse_points(_read(path), str(path))


def load_graph(path) -> GeometricGraph:
    return parse_graph(_read(path), str(path))


def points_json(P: PointSet) -> dict:
    return {"points": P.coords()}


def graph_json(G: GeometricGraph) -> dict:
    return {"points": G.base.coords(), "edges": [list(e) for e in G.sorted_edges()]}


def write_json(path, data) -> None:
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
