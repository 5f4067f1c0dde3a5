"""Immutable oriented graphs with adjacency queries.

An oriented graph is a directed graph with no loops and no pair of
opposite edges (no 2-cycles). Vertices are dense integer indices
0..order-1; every file and CLI surface is 1-based and translates by
subtracting one.

Sign convention used throughout the package: the *in*-neighborhood of v,
written N+(v), is the set of vertices u with an edge u -> v; the
*out*-neighborhood N-(v) is the set of u with v -> u.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DuplicateEdge, LoopEdge, TwoCycle, VertexOutOfRange

Edge = tuple[int, int]


@dataclass(frozen=True)
class OrientedGraph:
    """A validated oriented graph.

    Instances are immutable after construction and safe to share across
    workers; edges are stored sorted lexicographically so iteration order
    is deterministic.
    """

    order: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise VertexOutOfRange(f"order must be non-negative, got {self.order}")
        seen: set[Edge] = set()
        for u, v in self.edges:
            if not (0 <= u < self.order) or not (0 <= v < self.order):
                raise VertexOutOfRange(
                    f"edge ({u}, {v}) out of range for order {self.order}"
                )
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if (u, v) in seen:
                raise DuplicateEdge(f"edge ({u}, {v}) given twice")
            if (v, u) in seen:
                raise TwoCycle(f"both ({v}, {u}) and ({u}, {v}) supplied")
            seen.add((u, v))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def _in_adjacency(self) -> tuple[tuple[int, ...], ...]:
        acc: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            acc[v].append(u)
        return tuple(tuple(sorted(a)) for a in acc)

    @cached_property
    def _out_adjacency(self) -> tuple[tuple[int, ...], ...]:
        acc: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            acc[u].append(v)
        return tuple(tuple(sorted(a)) for a in acc)

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """Vertices u with an edge u -> v (the set N+(v))."""
        return self._in_adjacency[v]

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Vertices u with an edge v -> u (the set N-(v))."""
        return self._out_adjacency[v]

    def degree(self, v: int) -> int:
        """Degree of v in the underlying (undirected) graph."""
        return len(self._in_adjacency[v]) + len(self._out_adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_set

    @property
    def vertices(self) -> range:
        return range(self.order)


def build_graph(order: int, edges: Iterable[Sequence[int]]) -> OrientedGraph:
    """Validate and build an oriented graph from 0-based ordered pairs."""
    return OrientedGraph(order, tuple((int(u), int(v)) for u, v in edges))


def underlying_degree_profile(g: OrientedGraph) -> tuple[tuple[int, int], ...]:
    """Per-vertex (in-degree, out-degree) pairs, in vertex order."""
    return tuple(
        (len(g.in_neighbors(v)), len(g.out_neighbors(v))) for v in g.vertices
    )


def check_necessary_condition(g: OrientedGraph) -> tuple[int, ...]:
    """Vertices that cannot have weight zero under any injective labeling.

    A vertex fails when it is incident to fewer than three arcs, or when
    all of its arcs point in (empty out-neighborhood) or all point out
    (empty in-neighborhood). An empty result means the necessary
    condition for a connected non-trivial graph holds everywhere; for
    graphs with trivial components the caller decides which vertices
    matter (isolated vertices are reported too).
    """
    bad = []
    for v in g.vertices:
        ins = len(g.in_neighbors(v))
        outs = len(g.out_neighbors(v))
        if ins + outs < 3 or ins == 0 or outs == 0:
            bad.append(v)
    return tuple(bad)


def connected_components(g: OrientedGraph) -> tuple[tuple[int, ...], ...]:
    """Components of the underlying graph, each sorted, ordered by minimum."""
    seen = [False] * g.order
    comps = []
    for start in g.vertices:
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.in_neighbors(v) + g.out_neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def reversal(g: OrientedGraph) -> OrientedGraph:
    """The graph with every edge (u, v) replaced by (v, u)."""
    return OrientedGraph(g.order, tuple((v, u) for u, v in g.edges))
