"""Pure-Python backtracking kernel for the labeling search.

This is the reference engine; `_search_cy` is a compiled mirror with
identical traversal order, pruning decisions, and counters. Any change
here must be replicated there, and the test suite asserts the two
engines produce byte-identical outcomes.

Protocol: `run_labeling_search(n, in_adj, out_adj, branch_order, mode,
prune_bounds)` returns `(solutions, count, nodes, leaves)` where
solutions are label tuples indexed by vertex id, in discovery order.
"""

from __future__ import annotations

ENGINE_NAME = "py"

MODE_FIRST = 0
MODE_ALL = 1
MODE_COUNT = 2


def run_labeling_search(
    n: int,
    in_adj: tuple[tuple[int, ...], ...],
    out_adj: tuple[tuple[int, ...], ...],
    branch_order: tuple[int, ...],
    mode: int,
    prune_bounds: bool,
) -> tuple[list[tuple[int, ...]], int, int, int]:
    labels = [0] * n  # 0 = unassigned
    used = [False] * (n + 1)
    pre = [0] * (n + 1)  # prefix sums of unused labels, ascending
    solutions: list[tuple[int, ...]] = []
    count = 0
    nodes = 0
    leaves = 0

    def bounds_ok() -> bool:
        # Interval relaxation: the unassigned in-neighbors of w can take at
        # best the largest unused labels and at worst the smallest (and
        # conversely for out-neighbors); the two sides draw from disjoint
        # vertices so the bound is achievable label-set-wise.
        k = 0
        total = 0
        for lab in range(1, n + 1):
            if not used[lab]:
                k += 1
                total += lab
                pre[k] = total
        for w in range(n):
            partial = 0
            p = 0
            q = 0
            for u in in_adj[w]:
                lu = labels[u]
                if lu:
                    partial += lu
                else:
                    p += 1
            for u in out_adj[w]:
                lu = labels[u]
                if lu:
                    partial -= lu
                else:
                    q += 1
            hi = partial + (pre[k] - pre[k - p]) - pre[q]
            lo = partial + pre[p] - (pre[k] - pre[k - q])
            if lo > 0 or hi < 0:
                return False
        return True

    def all_weights_zero() -> bool:
        for w in range(n):
            t = 0
            for u in in_adj[w]:
                t += labels[u]
            for u in out_adj[w]:
                t -= labels[u]
            if t != 0:
                return False
        return True

    def dfs(d: int) -> bool:
        nonlocal count, nodes, leaves
        if d == n:
            leaves += 1
            if all_weights_zero():
                count += 1
                if mode != MODE_COUNT:
                    solutions.append(tuple(labels))
                if mode == MODE_FIRST:
                    return True
            return False
        v = branch_order[d]
        for lab in range(1, n + 1):
            if used[lab]:
                continue
            labels[v] = lab
            used[lab] = True
            nodes += 1
            stop = False
            if not prune_bounds or bounds_ok():
                stop = dfs(d + 1)
            labels[v] = 0
            used[lab] = False
            if stop:
                return True
        return False

    dfs(0)
    return solutions, count, nodes, leaves
