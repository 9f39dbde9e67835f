"""Shared machinery for the constructive colouring procedures: a painter
that applies one colour at a time with full validity checks, and the
replayable report it produces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..graphs import (
    Graph,
    IncidenceColouring,
    IncolourError,
    ListAssignment,
    incidence_id,
    incidence_neighbour_ids,
    incidences,
)


@dataclass(frozen=True)
class TraceStep:
    incidence: int
    colour: int
    tag: str


class StuckError(IncolourError):
    """A constructive step found its colour list exhausted.

    The procedures are guaranteed to finish at their stated list sizes,
    so any escape of this exception is a faithful bug report; the
    partial trace identifies the failing step.
    """

    def __init__(self, incidence: int, tag: str, trace: Sequence[TraceStep]):
        self.incidence = incidence
        self.tag = tag
        self.trace = tuple(trace)
        super().__init__(f"no colour available for incidence {incidence} at step {tag!r}")


@dataclass(frozen=True)
class ConstructiveReport:
    """A colouring together with the ordered choices that produced it.

    Replaying the trace greedily (checking list membership and adjacency
    at each application) reproduces the colouring exactly.
    """

    colouring: IncidenceColouring
    trace: tuple[TraceStep, ...]

    def replay(self, g: Graph, lists: ListAssignment) -> IncidenceColouring:
        neigh = incidence_neighbour_ids(g)
        out: dict[int, int] = {}
        for step in self.trace:
            if step.colour not in lists[step.incidence]:
                raise IncolourError(f"replay: colour outside list at {step}")
            if step.incidence in out:
                raise IncolourError(f"replay: incidence {step.incidence} painted twice")
            for w in neigh[step.incidence]:
                if out.get(w) == step.colour:
                    raise IncolourError(f"replay: conflict at {step}")
            out[step.incidence] = step.colour
        replayed = IncidenceColouring(out)
        if replayed != self.colouring:
            raise IncolourError("replay does not reproduce the colouring")
        return replayed


class Painter:
    """Incremental colouring state for one constructive run.

    ``paint`` checks list membership and adjacency on every application;
    ``greedy`` picks the smallest colour that survives the incidence's
    already-coloured neighbourhood plus any extra forbidden set.
    """

    def __init__(self, g: Graph, lists: ListAssignment):
        if len(lists) != 2 * len(g.edges):
            raise IncolourError("list assignment does not cover the incidences")
        self.graph = g
        self.lists = lists
        self.neigh = incidence_neighbour_ids(g)
        self.colour: dict[int, int] = {}
        self.trace: list[TraceStep] = []

    def id_of(self, vertex: int, other: int) -> int:
        return incidence_id(self.graph, vertex, other)

    def painted(self, i: int) -> bool:
        return i in self.colour

    def forbidden(self, i: int) -> set[int]:
        return {self.colour[w] for w in self.neigh[i] if w in self.colour}

    def free(self, i: int, extra: Iterable[int] = ()) -> list[int]:
        bad = self.forbidden(i)
        bad.update(extra)
        return sorted(c for c in self.lists[i] if c not in bad)

    def paint(self, i: int, colour: int, tag: str) -> None:
        if i in self.colour:
            raise IncolourError(f"incidence {i} painted twice (step {tag!r})")
        if colour not in self.lists[i]:
            raise IncolourError(f"colour {colour} outside list of incidence {i} (step {tag!r})")
        if colour in self.forbidden(i):
            raise IncolourError(f"colour {colour} conflicts at incidence {i} (step {tag!r})")
        self.colour[i] = colour
        self.trace.append(TraceStep(i, colour, tag))

    def greedy(self, i: int, tag: str, extra: Iterable[int] = ()) -> int:
        choices = self.free(i, extra)
        if not choices:
            raise StuckError(i, tag, self.trace)
        self.paint(i, choices[0], tag)
        return choices[0]

    def unpaint(self, i: int) -> None:
        del self.colour[i]
        for pos in range(len(self.trace) - 1, -1, -1):
            if self.trace[pos].incidence == i:
                del self.trace[pos]
                break

    def adopt(self, assignment: dict[int, int], tag: str) -> None:
        """Apply a whole assignment (e.g. a solver result) step by step."""
        for i in sorted(assignment):
            self.paint(i, assignment[i], tag)

    def report(self, require_total: bool = True) -> ConstructiveReport:
        if require_total and len(self.colour) != len(self.neigh):
            missing = next(i for i in range(len(self.neigh)) if i not in self.colour)
            raise IncolourError(f"colouring incomplete: incidence {missing} unpainted")
        return ConstructiveReport(IncidenceColouring(self.colour), tuple(self.trace))


def lists_for_subgraph(
    parent: Graph,
    parent_lists: ListAssignment,
    sub: Graph,
) -> tuple[ListAssignment, list[int]]:
    """Restrict a parent list assignment to a subgraph on the same vertex
    ids.  Returns the sub lists plus, for each sub incidence id, the parent
    incidence id it came from."""
    from ..graphs import incidence_index

    parent_of: list[int] = []
    idx = incidence_index(parent)
    out = []
    for inc in incidences(sub):
        pid = idx[inc]
        parent_of.append(pid)
        out.append(parent_lists[pid])
    return ListAssignment(out), parent_of


def relabelled_subgraph(
    parent: Graph,
    parent_lists: ListAssignment,
    edges: Sequence[tuple[int, int]],
) -> tuple[Graph, ListAssignment, list[int]]:
    """Subgraph on the endpoints of ``edges`` with dense relabelled
    vertices.  Returns the subgraph, its restricted lists, and the parent
    incidence id of each sub incidence."""
    from ..graphs import Incidence, canon_edge, incidence_index

    verts = sorted({x for e in edges for x in e})
    remap = {v: i for i, v in enumerate(verts)}
    sub = Graph(len(verts), [(remap[x], remap[y]) for x, y in edges])
    idx = incidence_index(parent)
    parent_of = []
    for inc in incidences(sub):
        pv = verts[inc.vertex]
        pu = verts[inc.edge[0] if inc.edge[1] == inc.vertex else inc.edge[1]]
        parent_of.append(idx[Incidence(pv, canon_edge(pv, pu))])
    return sub, ListAssignment([parent_lists[p] for p in parent_of]), parent_of
