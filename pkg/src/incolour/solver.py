"""Exact engines: backtracking list incidence colouring, incidence
chromatic number, exhaustive small-scale choosability, and the degeneracy
greedy."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernel
from .graphs import (
    Graph,
    GraphError,
    IncidenceColouring,
    IncolourError,
    InputError,
    ListAssignment,
    incidence_neighbour_ids,
    validate_colouring,
)

COLOURED = "coloured"
UNSATISFIABLE = "unsatisfiable"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class SolverConfig:
    """Search knobs.  A hit budget or deadline yields the distinguishable
    ``unknown`` outcome, never a wrong ``unsatisfiable``."""

    order: str = "most-constrained-first"   # or "static"
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None     # seconds

    def __post_init__(self):
        if self.order not in ("static", "most-constrained-first"):
            raise InputError(f"unknown variable order {self.order!r}")


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class SolveResult:
    status: str
    colouring: Optional[IncidenceColouring]
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == COLOURED


class ChiUnknown(IncolourError):
    """Budget ran out before the chromatic number was bracketed exactly."""

    def __init__(self, lower: int, upper: Optional[int]):
        self.lower = lower
        self.upper = upper
        super().__init__(f"incidence chromatic number in [{lower}, {upper}] (budget hit)")


class EnumerationBudgetExceeded(IncolourError):
    """The canonical list enumeration outgrew its budget."""


def _flatten(g: Graph, lists: ListAssignment):
    neigh = incidence_neighbour_ids(g)
    nv = len(neigh)
    dom_off = [0]
    dom_val: list[int] = []
    for i in range(nv):
        dom_val.extend(sorted(lists[i]))
        dom_off.append(len(dom_val))
    adj_off = [0]
    adj: list[int] = []
    for ids in neigh:
        adj.extend(ids)
        adj_off.append(len(adj))
    return nv, dom_off, dom_val, adj_off, adj


def solve_list_colouring(
    g: Graph,
    lists: ListAssignment,
    cfg: SolverConfig = DEFAULT_CONFIG,
) -> SolveResult:
    """Find a total, proper, list-respecting incidence colouring of ``g``
    or prove there is none.

    Any returned colouring is re-checked with :func:`validate_colouring`
    before being handed back.
    """
    m = 2 * len(g.edges)
    if len(lists) != m:
        raise GraphError("list assignment does not cover the incidences")
    nv, dom_off, dom_val, adj_off, adj = _flatten(g, lists)
    deadline = time.monotonic() + cfg.time_budget if cfg.time_budget else None
    status, slots, nodes = kernel.search(
        nv, dom_off, dom_val, adj_off, adj,
        cfg.order == "most-constrained-first", cfg.node_budget, deadline,
    )
    if status == kernel.FOUND:
        colouring = IncidenceColouring({i: dom_val[slots[i]] for i in range(nv)})
        verdict = validate_colouring(g, lists, colouring)
        if not verdict.ok:  # pragma: no cover - kernel soundness guard
            raise IncolourError(f"kernel produced an invalid colouring: {verdict.violation}")
        return SolveResult(COLOURED, colouring, nodes)
    if status == kernel.EXHAUSTED:
        return SolveResult(UNSATISFIABLE, None, nodes)
    return SolveResult(UNKNOWN, None, nodes)


def incidence_chromatic_number(g: Graph, cfg: SolverConfig = DEFAULT_CONFIG) -> int:
    """Smallest p admitting an incidence colouring with colours {1..p}.

    Starts from the lower bound ``max_degree + 1`` and never needs more
    than ``3*max_degree - 2`` colours (``2`` when the maximum degree is 1).
    Raises :class:`ChiUnknown` with the best-known bracket if the budget
    runs out mid-sweep.
    """
    if not g.edges:
        return 0
    delta = g.max_degree
    lo = delta + 1
    hi = 2 if delta == 1 else 3 * delta - 2
    for p in range(lo, hi + 1):
        res = solve_list_colouring(g, ListAssignment.uniform(g, p), cfg)
        if res.status == COLOURED:
            return p
        if res.status == UNKNOWN:
            raise ChiUnknown(p, hi)
    raise IncolourError("no colouring found within the guaranteed upper bound")  # pragma: no cover


@dataclass(frozen=True)
class ChoosabilityResult:
    choosable: bool
    counterexample: Optional[ListAssignment]
    assignments_checked: int


def check_choosability_exhaustive(
    g: Graph,
    k: int,
    universe_size: int,
    cfg: SolverConfig = DEFAULT_CONFIG,
    assignment_budget: int = 2_000_000,
) -> ChoosabilityResult:
    """Exhaustively test k-list colourability over all canonical k-list
    assignments drawn from ``{1..universe_size}``.

    Canonical means colour names are interchangeable: the first incidence
    gets the list {1..k} and later lists introduce new colours in
    increasing order without gaps.  Universes above ``k * #incidences``
    add nothing (the union of all lists can never use more colours) and
    are rejected.  Any counterexample is re-checked by a fresh solver run
    before being returned.
    """
    m = 2 * len(g.edges)
    if k < 1 or universe_size < k:
        raise InputError("need universe_size >= k >= 1")
    if m and universe_size > k * m:
        raise InputError("universe larger than k * #incidences is pointless")
    if m == 0:
        return ChoosabilityResult(True, None, 0)

    checked = 0
    lists_so_far: list[frozenset[int]] = [frozenset(range(1, k + 1))]

    def extend(pos: int, used: int):
        nonlocal checked
        if pos == m:
            checked += 1
            if checked > assignment_budget:
                raise EnumerationBudgetExceeded(
                    f"more than {assignment_budget} canonical assignments")
            yield list(lists_so_far)
            return
        for fresh in range(0, k + 1):
            if used + fresh > universe_size:
                break
            new_part = tuple(range(used + 1, used + fresh + 1))
            for olds in itertools.combinations(range(1, used + 1), k - fresh):
                lists_so_far.append(frozenset(olds + new_part))
                yield from extend(pos + 1, used + fresh)
                lists_so_far.pop()

    for raw in extend(1, k):
        assignment = ListAssignment(raw)
        res = solve_list_colouring(g, assignment, cfg)
        if res.status == UNKNOWN:
            raise EnumerationBudgetExceeded("solver budget hit inside the sweep")
        if res.status == UNSATISFIABLE:
            recheck = solve_list_colouring(g, assignment, DEFAULT_CONFIG)
            if recheck.status != UNSATISFIABLE:  # pragma: no cover
                raise IncolourError("counterexample failed its re-check")
            return ChoosabilityResult(False, assignment, checked)
    return ChoosabilityResult(True, None, checked)


@dataclass(frozen=True)
class DegeneracyOrder:
    """Removal sequence of repeated minimum-degree deletion.

    ``back_degrees[i]`` is the degree of ``sequence[i]`` at its removal,
    i.e. its number of neighbours later in the sequence; the maximum of
    these is the degeneracy.
    """

    sequence: tuple[int, ...]
    back_degrees: tuple[int, ...]

    @property
    def degeneracy(self) -> int:
        return max(self.back_degrees, default=0)


def degeneracy_order(adjacency: Sequence[Sequence[int]]) -> DegeneracyOrder:
    """Min-degree peeling order of an adjacency structure.

    Bucket queue with lazy deletion: vertices are re-appended on every
    degree drop, so an entry is live only when its recorded degree matches
    the bucket it was popped from.
    """
    n = len(adjacency)
    deg = [len(a) for a in adjacency]
    maxdeg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)
    removed = [False] * n
    seq: list[int] = []
    back: list[int] = []
    cursor = 0
    for _ in range(n):
        while True:
            while not buckets[cursor]:
                cursor += 1
            v = buckets[cursor].pop()
            if not removed[v] and deg[v] == cursor:
                break
        seq.append(v)
        back.append(cursor)
        removed[v] = True
        for w in adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                buckets[deg[w]].append(w)
        if cursor > 0:
            cursor -= 1
    return DegeneracyOrder(tuple(seq), tuple(back))


def graph_degeneracy(g: Graph) -> int:
    return degeneracy_order(g.adj).degeneracy


@dataclass(frozen=True)
class GreedyResult:
    colouring: Optional[IncidenceColouring]
    stuck_incidence: Optional[int]
    order: DegeneracyOrder

    @property
    def found(self) -> bool:
        return self.colouring is not None


def greedy_degenerate(g: Graph, lists: ListAssignment) -> GreedyResult:
    """Colour incidences along a reversed degeneracy order of the incidence
    graph, always taking the smallest available list colour.

    Succeeds whenever every list has at least degeneracy+1 colours; running
    out of colours is a legitimate outcome reported with the stuck
    incidence, not an error.
    """
    neigh = incidence_neighbour_ids(g)
    if len(lists) != len(neigh):
        raise GraphError("list assignment does not cover the incidences")
    order = degeneracy_order(neigh)
    colours: dict[int, int] = {}
    for v in reversed(order.sequence):
        taken = {colours[w] for w in neigh[v] if w in colours}
        choice = min((c for c in lists[v] if c not in taken), default=None)
        if choice is None:
            return GreedyResult(None, v, order)
        colours[v] = choice
    return GreedyResult(IncidenceColouring(colours), None, order)
