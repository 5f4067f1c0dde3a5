"""Labelings, vertex weights, imbalance, and the skew-adjacency matrix.

The weight of a vertex v under a labeling f is the sum of f over the
in-neighborhood minus the sum over the out-neighborhood. A difference
distance magic (DDM) labeling is a bijection onto {1..n} giving every
vertex weight zero.

All arithmetic here is exact: weights are plain Python integers and the
null-space computation runs over `fractions.Fraction`. Floating point is
never used, so the identities below hold with integer equality:

    S == -S^T           (S the skew-adjacency matrix, A^T - A)
    S @ x == weights    (x the label vector)
    S @ 1 == imbalances
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    DuplicateLabelAssignment,
    MissingLabel,
    NonPositiveLabel,
    VertexOutOfRange,
)
from .graph import OrientedGraph


@dataclass(frozen=True)
class Labeling:
    """A map from vertex ids to positive integer labels.

    The map may be partial with respect to a graph; operations that need
    a label for every vertex raise MissingLabel. A labeling is *standard*
    for order n when it is a bijection onto {1..n}.
    """

    values: tuple[tuple[int, int], ...]

    def __init__(self, values: Mapping[int, int] | Iterable[tuple[int, int]]):
        items = dict(values).items() if isinstance(values, Mapping) else list(values)
        seen: dict[int, int] = {}
        for v, label in items:
            v = int(v)
            label = int(label)
            if v < 0:
                raise VertexOutOfRange(f"vertex {v} is negative")
            if label < 1:
                raise NonPositiveLabel(f"label {label} for vertex {v} is not positive")
            if v in seen:
                raise DuplicateLabelAssignment(f"vertex {v} labeled twice")
            seen[v] = label
        object.__setattr__(self, "values", tuple(sorted(seen.items())))

    @cached_property
    def _map(self) -> dict[int, int]:
        return dict(self.values)

    def __getitem__(self, v: int) -> int:
        try:
            return self._map[v]
        except KeyError:
            raise MissingLabel(v) from None

    def __contains__(self, v: int) -> bool:
        return v in self._map

    def __len__(self) -> int:
        return len(self.values)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.values)

    def as_dict(self) -> dict[int, int]:
        return dict(self.values)

    def vector(self, order: int) -> tuple[int, ...]:
        """Labels for vertices 0..order-1, raising MissingLabel on gaps."""
        return tuple(self[v] for v in range(order))

    def is_standard(self, order: int) -> bool:
        """True when this labeling is a bijection onto {1..order}."""
        if len(self.values) != order:
            return False
        if any(v >= order for v, _ in self.values):
            return False
        return sorted(label for _, label in self.values) == list(
            range(1, order + 1)
        )

    def shifted(self, s: int) -> "Labeling":
        """The labeling v -> f(v) + s; every shifted label must stay >= 1."""
        return Labeling({v: label + s for v, label in self.values})


def identity_labeling(order: int) -> Labeling:
    """The labeling sending vertex v to v + 1."""
    return Labeling({v: v + 1 for v in range(order)})


def shift_labeling(f: Labeling, s: int) -> Labeling:
    """Shift every label by s (weights are preserved on balanced graphs)."""
    return f.shifted(s)


@dataclass(frozen=True)
class LabeledGraph:
    """A graph together with a labeling that covers every vertex.

    `provenance` is a trace of the operations that built the pair, one
    human-readable line per step.
    """

    graph: OrientedGraph
    labeling: Labeling
    provenance: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        for v in self.graph.vertices:
            self.labeling[v]  # raises MissingLabel on gaps
        for v in self.labeling.domain:
            if v >= self.graph.order:
                raise VertexOutOfRange(
                    f"label assigned to vertex {v} outside order {self.graph.order}"
                )

    @property
    def order(self) -> int:
        return self.graph.order

    def label_vector(self) -> tuple[int, ...]:
        return self.labeling.vector(self.graph.order)

    def with_labeling(self, labeling: Labeling, note: str) -> "LabeledGraph":
        return LabeledGraph(self.graph, labeling, self.provenance + (note,))


@dataclass(frozen=True)
class ImbalanceVector:
    """Per-vertex in-degree minus out-degree, plus the graph imbalance."""

    imbalances: tuple[int, ...]
    graph_imbalance: int


@dataclass(frozen=True)
class SkewMatrix:
    """The integer matrix S = A^T - A of an oriented graph.

    Entry (i, j) is -1 when the edge i -> j is present, +1 when j -> i
    is present, and 0 otherwise.
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)

    def apply(self, x: Iterable[int]) -> tuple[int, ...]:
        """Exact matrix-vector product S @ x."""
        xs = tuple(x)
        if len(xs) != self.order:
            raise ValueError(f"vector length {len(xs)} != order {self.order}")
        return tuple(
            sum(s * xv for s, xv in zip(row, xs)) for row in self.entries
        )

    def transpose(self) -> "SkewMatrix":
        return SkewMatrix(tuple(zip(*self.entries))) if self.entries else self

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)


@dataclass(frozen=True)
class DdmVerdict:
    """Result of checking a labeling against the DDM definition."""

    is_standard_bijection: bool
    weight_vector: tuple[int, ...]
    is_ddm: bool


@dataclass(frozen=True)
class KernelReport:
    """Exact null space of the skew-adjacency matrix."""

    kernel_dimension: int
    basis: tuple[tuple[Fraction, ...], ...]


def weight_vector(g: OrientedGraph, f: Labeling) -> tuple[int, ...]:
    """Per-vertex weights: in-neighborhood label sum minus out-neighborhood.

    In debug mode the result is cross-checked against the skew-matrix
    product S @ x, which must agree entrywise.
    """
    weights = tuple(
        sum(f[u] for u in g.in_neighbors(v)) - sum(f[u] for u in g.out_neighbors(v))
        for v in g.vertices
    )
    if __debug__:
        x = f.vector(g.order)
        assert skew_matrix(g).apply(x) == weights, (
            "neighborhood sums disagree with skew-matrix product"
        )
    return weights


def imbalance_vector(g: OrientedGraph) -> ImbalanceVector:
    """Per-vertex |N+(v)| - |N-(v)| and the maximum absolute value."""
    imbs = tuple(
        len(g.in_neighbors(v)) - len(g.out_neighbors(v)) for v in g.vertices
    )
    return ImbalanceVector(imbs, max((abs(i) for i in imbs), default=0))


def is_balanced(g: OrientedGraph) -> bool:
    """True when every vertex has imbalance zero."""
    return imbalance_vector(g).graph_imbalance == 0


def skew_matrix(g: OrientedGraph) -> SkewMatrix:
    rows = [[0] * g.order for _ in range(g.order)]
    for u, v in g.edges:
        rows[u][v] = -1
        rows[v][u] = 1
    return SkewMatrix(tuple(tuple(row) for row in rows))


def verify_ddm(g: OrientedGraph, f: Labeling) -> DdmVerdict:
    """Check whether f is a difference distance magic labeling of g."""
    weights = weight_vector(g, f)
    standard = f.is_standard(g.order)
    return DdmVerdict(standard, weights, standard and all(w == 0 for w in weights))


def check_orthogonality(g: OrientedGraph, f: Labeling) -> int:
    """The exact sum of imbalance(v) * f(v); zero whenever f is DDM."""
    imbs = imbalance_vector(g).imbalances
    return sum(i * f[v] for v, i in enumerate(imbs))


def kernel_feasibility(g: OrientedGraph) -> KernelReport:
    """Null space of S over the rationals, by exact Gaussian elimination.

    A zero-dimensional kernel proves no DDM labeling exists (only x = 0
    would solve S @ x = 0, and labels are positive), which makes this a
    sound search pre-filter. The converse does not hold.
    """
    n = g.order
    m = [[Fraction(e) for e in row] for row in skew_matrix(g).entries]

    pivot_cols: list[int] = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [e * inv for e in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [e - factor * p for e, p in zip(m[r], m[row])]
        pivot_cols.append(col)
        row += 1
        if row == n:
            break

    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivot_cols):
            vec[pc] = -m[r][fc]
        basis.append(tuple(vec))
    return KernelReport(len(free_cols), tuple(basis))
