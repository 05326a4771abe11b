"""Bitset graphs and the structural predicates the game code relies on.

A vertex set is a plain ``int`` used as a bit vector: bit ``v`` is set iff
vertex ``v`` is a member.  Graphs are immutable once built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

VertexSet = int

MAX_VERTICES = 64
WIDE_MAX_VERTICES = 128

UNREACHABLE = -1


class GraphError(ValueError):
    """Raised when a graph violates a construction invariant."""


def bits(s: VertexSet) -> Iterator[int]:
    """Yield the members of ``s`` in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def popcount(s: VertexSet) -> int:
    return bin(s).count("1")


def from_vertices(vs: Iterable[int]) -> VertexSet:
    s = 0
    for v in vs:
        s |= 1 << v
    return s


def lowest(s: VertexSet) -> int:
    return (s & -s).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighborhood of ``v`` as a bitset and
    ``closed[v]`` the closed one.
    """

    n: int
    adj: tuple[int, ...]
    capacity: int = MAX_VERTICES
    closed: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("graph must have at least one vertex")
        if self.capacity not in (MAX_VERTICES, WIDE_MAX_VERTICES):
            raise GraphError(f"unsupported capacity {self.capacity}")
        if self.n > self.capacity:
            raise GraphError(f"order {self.n} exceeds capacity {self.capacity}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(
            self, "closed", tuple(nb | (1 << v) for v, nb in enumerate(self.adj))
        )

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], capacity: int | None = None
    ) -> "Graph":
        if capacity is None:
            capacity = MAX_VERTICES if n <= MAX_VERTICES else WIDE_MAX_VERTICES
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), capacity)

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def induced(self, s: VertexSet) -> tuple["Graph", list[int]]:
        """Return ``G[s]`` relabelled to ``0..|s|-1`` and the old index of each new vertex."""
        old = list(bits(s))
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v])
            for u in old
            for v in bits(self.adj[u] & s)
            if u < v
        ]
        return Graph.from_edges(len(old), edges, self.capacity), old


@dataclass(frozen=True)
class LabeledGraph:
    """A graph with named vertices and, optionally, named vertex sets."""

    graph: Graph
    labels: Mapping[str, int]
    groups: Mapping[str, VertexSet] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: dict[int, str] = {}
        for name, v in self.labels.items():
            if not 0 <= v < self.graph.n:
                raise GraphError(f"label {name!r} points at invalid vertex {v}")
            if v in seen:
                raise GraphError(f"vertex {v} labelled twice ({seen[v]!r}, {name!r})")
            seen[v] = name

    def __getitem__(self, name: str) -> int:
        return self.labels[name]

    def vset(self, *names: str) -> VertexSet:
        return from_vertices(self.labels[x] for x in names)

    def name_of(self, v: int) -> str:
        for name, u in self.labels.items():
            if u == v:
                return name
        return str(v)

    def names(self, s: VertexSet) -> list[str]:
        return [self.name_of(v) for v in bits(s)]


def canonical_labels(n: int) -> dict[str, int]:
    return {f"v{i}": i for i in range(n)}


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return g.closed[v]


def closed_neighborhood_set(g: Graph, s: VertexSet) -> VertexSet:
    out = 0
    closed = g.closed
    for v in bits(s):
        out |= closed[v]
    return out


def reach(g: Graph, start: int, within: VertexSet) -> VertexSet:
    """Vertices of ``within`` reachable from ``start`` inside ``G[within]``."""
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph, s: VertexSet) -> bool:
    """True iff ``G[s]`` is connected; the empty set and singletons count as connected."""
    if s & (s - 1) == 0:
        return True
    return reach(g, lowest(s), s) == s


def components(g: Graph, s: VertexSet) -> list[VertexSet]:
    """Vertex sets of the components of ``G[s]``, ordered by their lowest vertex."""
    out = []
    rest = s
    while rest:
        comp = reach(g, lowest(rest), rest)
        out.append(comp)
        rest &= ~comp
    return out


def components_after_removal(g: Graph, x: int) -> list[VertexSet]:
    return components(g, g.all_vertices & ~(1 << x))


def is_cut_vertex(g: Graph, x: int) -> bool:
    return len(components_after_removal(g, x)) >= 2


def distances_from(g: Graph, x: int) -> list[int]:
    """BFS distances from ``x``; unreachable vertices get ``UNREACHABLE``."""
    dist = [UNREACHABLE] * g.n
    dist[x] = 0
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v]):
            if dist[u] == UNREACHABLE:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def is_tree(g: Graph) -> bool:
    return len(g.edges()) == g.n - 1 and is_connected(g, g.all_vertices)
