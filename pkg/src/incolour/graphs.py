"""Graphs, incidences, incidence adjacency and colouring validation.

An incidence of a graph is a pair ``(v, e)`` where ``e`` is an edge with
endpoint ``v``.  Two incidences ``(v, e)`` and ``(w, f)`` are adjacent when
``v == w``, or ``e == f``, or the edge ``vw`` equals ``e`` or ``f``.  Every
structure in this module is keyed by *incidence ids*: positions in the
deterministic enumeration returned by :func:`incidences`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

Edge = tuple[int, int]


class IncolourError(Exception):
    """Base class for library errors."""


class GraphError(IncolourError):
    """Malformed graph, list assignment or colouring structure."""


class InputError(IncolourError):
    """An operation was called outside its documented preconditions."""


def canon_edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected loopless graph on dense vertices ``0..n-1``.

    Instances are immutable after construction and safe to share between
    threads; derived structures (incidence enumeration, adjacency) are
    cached lazily and are pure functions of the graph.
    """

    __slots__ = ("n", "edges", "adj", "_cache")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        canon = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e!r} out of range for n={n}")
            canon.add(canon_edge(u, v))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._cache: dict = {}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return canon_edge(u, v) in self.edge_set

    @property
    def edge_set(self) -> frozenset[Edge]:
        if "edge_set" not in self._cache:
            self._cache["edge_set"] = frozenset(self.edges)
        return self._cache["edge_set"]

    def without_edge(self, u: int, v: int) -> "Graph":
        e = canon_edge(u, v)
        return Graph(self.n, [f for f in self.edges if f != e])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


class Incidence(NamedTuple):
    vertex: int
    edge: Edge


def incidences(g: Graph) -> tuple[Incidence, ...]:
    """All incidences of ``g``, sorted by (vertex, other endpoint).

    Each edge contributes two incidences, so the result has length
    ``2 * len(g.edges)``.  The position of an incidence in this tuple is
    its id; every list assignment and colouring is keyed by these ids.
    """
    if "incidences" not in g._cache:
        out = []
        for v in range(g.n):
            for u in g.adj[v]:
                out.append(Incidence(v, canon_edge(v, u)))
        g._cache["incidences"] = tuple(out)
    return g._cache["incidences"]


def incidence_index(g: Graph) -> Mapping[Incidence, int]:
    """Map from incidence to its id."""
    if "incidence_index" not in g._cache:
        g._cache["incidence_index"] = {inc: i for i, inc in enumerate(incidences(g))}
    return g._cache["incidence_index"]


def incidence_id(g: Graph, vertex: int, other: int) -> int:
    """Id of the incidence ``(vertex, vertex·other)``."""
    try:
        return incidence_index(g)[Incidence(vertex, canon_edge(vertex, other))]
    except KeyError:
        raise GraphError(f"({vertex}, {vertex}{other}) is not an incidence") from None


def incidence_adjacent(a: Incidence, b: Incidence) -> bool:
    """Whether two distinct incidences are adjacent."""
    if a.vertex == b.vertex:
        return a != b
    if a.edge == b.edge:
        return True
    return canon_edge(a.vertex, b.vertex) in (a.edge, b.edge)


def incidence_neighbourhood(inc: Incidence, g: Graph) -> set[Incidence]:
    """Incidences adjacent to ``inc = (v, vu)`` in ``g``.

    The result is ``A-(v) | A+(v) | A-(u)`` minus ``inc`` itself and has
    exactly ``2*deg(v) + deg(u) - 2`` members.
    """
    v = inc.vertex
    e = inc.edge
    u = e[0] if e[1] == v else e[1]
    if e not in g.edge_set:
        raise GraphError(f"{inc!r} is not an incidence of the graph")
    out: set[Incidence] = set()
    for x in g.adj[v]:
        out.add(Incidence(v, canon_edge(v, x)))   # A-(v)
        out.add(Incidence(x, canon_edge(x, v)))   # A+(v)
    for x in g.adj[u]:
        out.add(Incidence(u, canon_edge(u, x)))   # A-(u)
    out.discard(inc)
    return out


def incidence_neighbour_ids(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Per-incidence sorted ids of adjacent incidences (the incidence graph
    as an adjacency structure)."""
    if "incidence_neighbour_ids" not in g._cache:
        index = incidence_index(g)
        out = []
        for inc in incidences(g):
            ids = sorted(index[x] for x in incidence_neighbourhood(inc, g))
            out.append(tuple(ids))
        g._cache["incidence_neighbour_ids"] = tuple(out)
    return g._cache["incidence_neighbour_ids"]


def incidence_graph(g: Graph) -> Graph:
    """The graph on the incidences of ``g``: vertex ``i`` is the ``i``-th
    incidence, edges given by incidence adjacency.

    A proper vertex colouring of this graph is exactly an incidence
    colouring of ``g``.
    """
    neigh = incidence_neighbour_ids(g)
    edges = [(i, j) for i, ids in enumerate(neigh) for j in ids if i < j]
    return Graph(len(neigh), edges)


class ListAssignment:
    """Colour lists (sets of non-negative ints) keyed by incidence id."""

    __slots__ = ("lists",)

    def __init__(self, lists: Sequence[Iterable[int]]):
        out = []
        for i, l in enumerate(lists):
            s = frozenset(l)
            if not s:
                raise GraphError(f"empty colour list for incidence {i}")
            if any((not isinstance(c, int)) or c < 0 for c in s):
                raise GraphError(f"colours must be non-negative ints (incidence {i})")
            out.append(s)
        self.lists: tuple[frozenset[int], ...] = tuple(out)

    @classmethod
    def uniform(cls, g: Graph, k: int) -> "ListAssignment":
        """Every incidence gets the list ``{1..k}``."""
        if k < 1:
            raise GraphError("uniform list size must be >= 1")
        colours = frozenset(range(1, k + 1))
        return cls([colours] * (2 * len(g.edges)))

    @classmethod
    def from_dict(cls, g: Graph, lists: Mapping[int, Iterable[int]]) -> "ListAssignment":
        m = 2 * len(g.edges)
        missing = [i for i in range(m) if i not in lists]
        if missing:
            raise GraphError(f"missing lists for incidences {missing[:5]}")
        return cls([lists[i] for i in range(m)])

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.lists[i]

    def min_size(self) -> int:
        return min((len(l) for l in self.lists), default=0)

    def restricted(self, drop: Iterable[int]) -> "ListAssignment":
        """A copy with the given colours removed from every list."""
        d = frozenset(drop)
        return ListAssignment([l - d for l in self.lists])


class IncidenceColouring:
    """A (possibly partial) map incidence id -> colour."""

    __slots__ = ("assignment",)

    def __init__(self, assignment: Optional[Mapping[int, int]] = None):
        self.assignment: dict[int, int] = dict(assignment or {})

    def __getitem__(self, i: int) -> int:
        return self.assignment[i]

    def __contains__(self, i: int) -> bool:
        return i in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def __eq__(self, other) -> bool:
        return isinstance(other, IncidenceColouring) and self.assignment == other.assignment

    def items(self):
        return self.assignment.items()

    def copy(self) -> "IncidenceColouring":
        return IncidenceColouring(self.assignment)


@dataclass(frozen=True)
class Verdict:
    """Result of validating a colouring: totality, properness and (when a
    list assignment was supplied) list membership, plus the first violation
    found."""

    total: bool
    proper: bool
    list_respecting: Optional[bool]
    violation: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.total and self.proper and self.list_respecting in (True, None)


def validate_colouring(
    g: Graph,
    lists: Optional[ListAssignment],
    colouring: IncidenceColouring,
) -> Verdict:
    """Check a colouring against ``g`` (and ``lists``, if given).

    Properness is established by a pairwise scan over all incidence pairs
    using :func:`incidence_adjacent` only, independently of any adjacency
    structure the solvers use.  Unknown incidence ids are structural errors
    (:class:`GraphError`), not colouring violations.
    """
    incs = incidences(g)
    m = len(incs)
    for i in colouring.assignment:
        if not (0 <= i < m):
            raise GraphError(f"unknown incidence id {i}")
    total = len(colouring) == m
    violation = None

    proper = True
    coloured = sorted(colouring.assignment.items())
    for a in range(len(coloured)):
        i, ci = coloured[a]
        for b in range(a + 1, len(coloured)):
            j, cj = coloured[b]
            if ci == cj and incidence_adjacent(incs[i], incs[j]):
                proper = False
                if violation is None:
                    violation = f"incidences {i} and {j} are adjacent and share colour {ci}"
                break
        if not proper:
            break

    list_respecting: Optional[bool] = None
    if lists is not None:
        if len(lists) != m:
            raise GraphError("list assignment does not match the graph")
        list_respecting = True
        for i, c in coloured:
            if c not in lists[i]:
                list_respecting = False
                if violation is None:
                    violation = f"incidence {i} uses colour {c} outside its list"
                break
    if violation is None and not total:
        missing = next(i for i in range(m) if i not in colouring)
        violation = f"incidence {missing} is uncoloured"
    return Verdict(total=total, proper=proper, list_respecting=list_respecting, violation=violation)
