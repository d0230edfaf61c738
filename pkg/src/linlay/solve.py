"""Exact stack and queue numbers of small graphs by order enumeration.

Crossing is invariant under rotating and reversing a vertex order, so the
stack solver fixes vertex 0 in front and drops mirrored orders; nesting
survives only reversal, so the queue solver halves the search space once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .errors import ResourceLimitError
from .graphs import Graph
from .layouts import (
    QUEUE,
    STACK,
    EdgeColoring,
    Layout,
    LinearOrder,
    identity_order,
    min_queue_colors_for_order,
    min_stack_colors_for_order,
    verify_layout,
)


@dataclass(frozen=True)
class SolveBudget:
    max_vertices: int = 9
    max_orders: Optional[int] = None
    time_hint: Optional[float] = None  # advisory only


@dataclass
class SolveResult:
    k: int
    layout: Layout
    exact: bool
    orders_scanned: int
    lower_bound: int


def _trivial_result(g: Graph, kind: str) -> SolveResult:
    coloring = EdgeColoring.from_colors({e: 0 for e in g.edges})
    layout = Layout(kind, identity_order(g.vertex_count), coloring)
    return SolveResult(coloring.k, layout, True, 0, coloring.k)


def _stack_orders(n: int):
    if n <= 2:
        yield tuple(range(n))
        return
    for rest in permutations(range(1, n)):
        if rest[0] < rest[-1]:
            yield (0, *rest)


def _queue_orders(n: int):
    if n <= 1:
        yield tuple(range(n))
        return
    for perm in permutations(range(n)):
        if perm[0] < perm[-1]:
            yield perm


def _solve(g: Graph, budget: SolveBudget, kind: str) -> SolveResult:
    if g.vertex_count > budget.max_vertices:
        raise ResourceLimitError(
            f"{g.vertex_count} vertices exceed the budget of {budget.max_vertices}",
            lower=1 if g.edges else 0,
            upper=len(g.edges) if g.edges else 0,
        )
    if not g.edges:
        return _trivial_result(g, kind)

    floor = 1  # every graph with an edge needs one colour
    best_k: Optional[int] = None
    best_layout: Optional[Layout] = None
    scanned = 0
    exact = True
    orders = _stack_orders(g.vertex_count) if kind == STACK else _queue_orders(g.vertex_count)
    for seq in orders:
        if budget.max_orders is not None and scanned >= budget.max_orders:
            exact = False
            break
        scanned += 1
        order = LinearOrder.from_sequence(seq)
        if kind == STACK:
            k, coloring = min_stack_colors_for_order(
                g, order, max_edges=len(g.edges), _cutoff=best_k
            )
            if k is None:
                continue
        else:
            k, coloring = min_queue_colors_for_order(g, order)
            if best_k is not None and k >= best_k:
                continue
        if best_k is None or k < best_k:
            best_k = k
            best_layout = Layout(kind, order, coloring)
            if best_k <= floor:
                break

    if best_layout is None:
        exact = False
        order = identity_order(g.vertex_count)
        if kind == STACK:
            best_k, coloring = min_stack_colors_for_order(g, order, max_edges=len(g.edges))
        else:
            best_k, coloring = min_queue_colors_for_order(g, order)
        best_layout = Layout(kind, order, coloring)

    report = verify_layout(g, best_layout)
    if not report.valid:
        raise AssertionError("solver produced an invalid layout")
    return SolveResult(best_k, best_layout, exact, scanned, best_k if exact else floor)


def stack_number(g: Graph, budget: SolveBudget = SolveBudget()) -> SolveResult:
    """Exact sn(g) with an optimal layout (first found in lexicographic
    order scan), within the budget."""
    return _solve(g, budget, STACK)


def queue_number(g: Graph, budget: SolveBudget = SolveBudget()) -> SolveResult:
    """Exact qn(g) with an optimal layout, within the budget."""
    return _solve(g, budget, QUEUE)
