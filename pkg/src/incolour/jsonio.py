"""JSON round-trips for graphs, list assignments, colourings and family
specs.  Formats are plain text and self-describing: list and colouring
files embed an echo of the incidence enumeration they are keyed by."""

from __future__ import annotations

from typing import Optional

from .families import FamilySpec
from .graphs import (
    Graph,
    GraphError,
    IncidenceColouring,
    ListAssignment,
    incidences,
)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(data: dict) -> Graph:
    return Graph(data["n"], [tuple(e) for e in data["edges"]])


def _incidence_echo(g: Graph) -> list:
    return [[inc.vertex, list(inc.edge)] for inc in incidences(g)]


def _check_echo(g: Graph, data: dict) -> None:
    echo = data.get("incidences")
    if echo is not None and echo != _incidence_echo(g):
        raise GraphError("incidence enumeration in file does not match the graph")


def lists_to_json(g: Graph, lists: ListAssignment) -> dict:
    return {
        "lists": {str(i): sorted(l) for i, l in enumerate(lists.lists)},
        "incidences": _incidence_echo(g),
    }


def lists_from_json(g: Graph, data: dict) -> ListAssignment:
    _check_echo(g, data)
    raw = {int(i): v for i, v in data["lists"].items()}
    return ListAssignment.from_dict(g, raw)


def colouring_to_json(g: Graph, colouring: IncidenceColouring) -> dict:
    return {
        "assignment": {str(i): c for i, c in sorted(colouring.items())},
        "incidences": _incidence_echo(g),
    }


def colouring_from_json(g: Graph, data: dict) -> IncidenceColouring:
    _check_echo(g, data)
    m = 2 * len(g.edges)
    out = {}
    for key, value in data["assignment"].items():
        i = int(key)
        if not 0 <= i < m:
            raise GraphError(f"unknown incidence id {i}")
        out[i] = int(value)
    return IncidenceColouring(out)


def spec_to_json(spec: FamilySpec) -> dict:
    return spec.to_json()


def spec_from_json(data: dict) -> FamilySpec:
    return FamilySpec.from_json(data)


def pre_to_json(pre: dict[int, int]) -> dict:
    return {"pre": [[i, c] for i, c in sorted(pre.items())]}


def pre_from_json(data: Optional[dict]) -> Optional[dict[int, int]]:
    if data is None:
        return None
    return {int(i): int(c) for i, c in data["pre"]}
