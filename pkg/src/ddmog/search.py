"""Brute-force and pruned backtracking search for DDM labelings.

Two entry points: `search_labeling` finds labelings of a fixed
orientation, `search_orientation` decides whether an undirected graph
has any orientation admitting a DDM labeling.

The inner loop runs on one of two interchangeable engines: a compiled
Cython kernel when the extension built, otherwise a pure-Python mirror.
Both produce identical outcomes (including node counters); selection
happens at import time and can be forced with DDMOG_SEARCH_ENGINE=py|cy
or per call with the `engine` argument.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from . import _search_py
from .errors import (
    DuplicateEdge,
    EdgeCountExceedsCap,
    LoopEdge,
    OrderExceedsCap,
    VertexOutOfRange,
)
from .graph import OrientedGraph, reversal  # noqa: F401  (reversal re-exported)
from .labeling import Labeling, kernel_feasibility

try:
    from . import _search_cy
except ImportError:  # extension not built; pure engine covers everything
    _search_cy = None

_ENGINES = {"py": _search_py}
if _search_cy is not None:
    _ENGINES["cy"] = _search_cy

_MODE_CODES = {"first": 0, "all": 1, "count": 2}

STATUS_FOUND = "found"
STATUS_EXHAUSTED_NONE = "exhausted_none"
STATUS_ABORTED_CAP = "aborted_cap"  # caps raise instead; kept for completeness


def available_engines() -> tuple[str, ...]:
    return tuple(sorted(_ENGINES))


def _select_default_engine() -> str:
    pref = os.environ.get("DDMOG_SEARCH_ENGINE", "auto").strip().lower()
    if pref in _ENGINES:
        return pref
    return "cy" if "cy" in _ENGINES else "py"


DEFAULT_ENGINE = _select_default_engine()


@dataclass(frozen=True)
class SearchConfig:
    """Search mode, safety caps, and pruning switches.

    Exceeding a cap is a hard error, never a silent truncation. All
    pruning is sound: disabling every switch changes nothing but the
    amount of work (the oracle-equivalence tests rely on this).
    """

    mode: str = "first"
    max_order: int = 12
    max_edges: int = 20
    prune_with_kernel: bool = True
    prune_with_property1: bool = True
    prune_with_bounds: bool = True

    def __post_init__(self) -> None:
        if self.mode not in _MODE_CODES:
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.max_order < 1 or self.max_edges < 1:
            raise ValueError("caps must be positive")


UNPRUNED = SearchConfig(
    mode="all",
    prune_with_kernel=False,
    prune_with_property1=False,
    prune_with_bounds=False,
)


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    labelings: tuple[Labeling, ...]
    count: int
    nodes_explored: int
    leaves_evaluated: int


@dataclass(frozen=True)
class OrientationOutcome:
    is_ddmo: bool
    witness: tuple[OrientedGraph, Labeling] | None
    orientations_tried: int
    labeling_searches: int


def _property1_rejects(g: OrientedGraph) -> bool:
    """True when some vertex can never reach weight zero.

    A vertex of underlying degree >= 1 sits in a connected non-trivial
    component; if it has fewer than three arcs, or all arcs in, or all
    arcs out, no injective positive labeling zeroes it. Degree-0
    vertices impose no constraint.
    """
    for v in g.vertices:
        ins = len(g.in_neighbors(v))
        outs = len(g.out_neighbors(v))
        deg = ins + outs
        if deg >= 1 and (deg < 3 or ins == 0 or outs == 0):
            return True
    return False


def _engine(name: str | None):
    key = DEFAULT_ENGINE if name is None else name
    try:
        return _ENGINES[key]
    except KeyError:
        raise ValueError(
            f"unknown engine {key!r}; available: {available_engines()}"
        ) from None


def search_labeling(
    g: OrientedGraph,
    cfg: SearchConfig | None = None,
    engine: str | None = None,
) -> SearchOutcome:
    """Backtracking search over standard bijections of g.

    Vertices are branched in descending total degree (ties by id); in
    mode="all" the returned labelings are sorted lexicographically by
    label vector. Deterministic: identical inputs and config produce
    identical outcomes, counters included.
    """
    cfg = cfg or SearchConfig()
    if g.order > cfg.max_order:
        raise OrderExceedsCap(f"order {g.order} exceeds cap {cfg.max_order}")

    if cfg.prune_with_property1 and _property1_rejects(g):
        return SearchOutcome(STATUS_EXHAUSTED_NONE, (), 0, 0, 0)
    if (
        cfg.prune_with_kernel
        and g.order > 0
        and kernel_feasibility(g).kernel_dimension == 0
    ):
        return SearchOutcome(STATUS_EXHAUSTED_NONE, (), 0, 0, 0)

    branch_order = tuple(sorted(g.vertices, key=lambda v: (-g.degree(v), v)))
    in_adj = tuple(g.in_neighbors(v) for v in g.vertices)
    out_adj = tuple(g.out_neighbors(v) for v in g.vertices)
    solutions, count, nodes, leaves = _engine(engine).run_labeling_search(
        g.order,
        in_adj,
        out_adj,
        branch_order,
        _MODE_CODES[cfg.mode],
        cfg.prune_with_bounds,
    )
    labelings = tuple(
        Labeling(dict(enumerate(sol, 0))) for sol in sorted(solutions)
    )
    status = STATUS_FOUND if count > 0 else STATUS_EXHAUSTED_NONE
    return SearchOutcome(status, labelings, count, nodes, leaves)


def _normalize_undirected(order: int, edges) -> tuple[tuple[int, int], ...]:
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < order) or not (0 <= v < order):
            raise VertexOutOfRange(f"edge ({u}, {v}) out of range for order {order}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise DuplicateEdge(f"undirected edge {pair} given twice")
        seen.add(pair)
    return tuple(sorted(seen))


def search_orientation(
    order: int,
    undirected_edges,
    cfg: SearchConfig | None = None,
    engine: str | None = None,
) -> OrientationOutcome:
    """Decide DDM-orientability by enumerating orientations.

    Exactly half the orientation space is explored: the direction of the
    lexicographically first edge is fixed, justified by the reversal
    symmetry (reversing all edges negates every weight, so it preserves
    the existence of a DDM labeling).
    """
    cfg = cfg or SearchConfig()
    edges = _normalize_undirected(order, undirected_edges)
    if len(edges) > cfg.max_edges:
        raise EdgeCountExceedsCap(
            f"{len(edges)} edges exceed cap {cfg.max_edges}"
        )
    if order > cfg.max_order:
        raise OrderExceedsCap(f"order {order} exceeds cap {cfg.max_order}")

    if cfg.prune_with_property1:
        degree = [0] * order
        for u, v in edges:
            degree[u] += 1
            degree[v] += 1
        if any(1 <= d <= 2 for d in degree):
            return OrientationOutcome(False, None, 0, 0)

    labeling_cfg = replace(cfg, mode="first")
    m = len(edges)
    masks = 1 if m == 0 else 1 << (m - 1)
    tried = 0
    searches = 0
    for mask in range(masks):
        oriented = [edges[0]] if m else []
        for i in range(1, m):
            u, v = edges[i]
            oriented.append((u, v) if not (mask >> (i - 1)) & 1 else (v, u))
        tried += 1
        g = OrientedGraph(order, tuple(oriented))
        if cfg.prune_with_property1 and _property1_rejects(g):
            continue
        if (
            cfg.prune_with_kernel
            and order > 0
            and kernel_feasibility(g).kernel_dimension == 0
        ):
            continue
        searches += 1
        sub = search_labeling(g, labeling_cfg, engine=engine)
        if sub.count > 0:
            return OrientationOutcome(True, (g, sub.labelings[0]), tried, searches)
    return OrientationOutcome(False, None, tried, searches)
