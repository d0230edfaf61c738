"""Linear orders, crossing/nesting predicates, and per-order optima.

A k-stack layout forbids two same-colour edges from crossing; a k-queue
layout forbids them from nesting.  For a fixed order the queue minimum is
polynomial (longest chain of pairwise nested edges); the stack minimum is
an exact chromatic number of the crossing-conflict graph, solved by
branch and bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import InvalidParameterError, ResourceLimitError
from .graphs import Graph, normalize_edge

STACK = "stack"
QUEUE = "queue"

DEFAULT_STACK_EDGE_LIMIT = 64


@dataclass(frozen=True)
class LinearOrder:
    sequence: tuple[int, ...]
    position: tuple[int, ...] = field(compare=False, repr=False)

    @staticmethod
    def from_sequence(seq: Sequence[int]) -> "LinearOrder":
        seq = tuple(seq)
        n = len(seq)
        position = [-1] * n
        for idx, v in enumerate(seq):
            if not 0 <= v < n or position[v] != -1:
                raise InvalidParameterError("sequence must be a permutation of 0..n-1")
            position[v] = idx
        return LinearOrder(seq, tuple(position))

    def __len__(self) -> int:
        return len(self.sequence)

    def pos(self, v: int) -> int:
        return self.position[v]

    def reversed(self) -> "LinearOrder":
        return LinearOrder.from_sequence(tuple(reversed(self.sequence)))


def identity_order(n: int) -> LinearOrder:
    seq = tuple(range(n))
    return LinearOrder(seq, seq)


def _spans(order: LinearOrder, e, f):
    pos = order.position
    n = len(pos)
    for v in (*e, *f):
        if not 0 <= v < n:
            raise InvalidParameterError(f"vertex {v} outside the order's domain")
    if normalize_edge(*e) == normalize_edge(*f):
        raise InvalidParameterError("predicates need two distinct edges")
    a1, b1 = sorted((pos[e[0]], pos[e[1]]))
    a2, b2 = sorted((pos[f[0]], pos[f[1]]))
    return a1, b1, a2, b2


def crosses(order: LinearOrder, e, f) -> bool:
    """True iff the endpoint positions strictly interleave."""
    a1, b1, a2, b2 = _spans(order, e, f)
    return a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1


def nests(order: LinearOrder, e, f) -> bool:
    """True iff one edge's positions strictly contain the other's."""
    a1, b1, a2, b2 = _spans(order, e, f)
    return (a1 < a2 and b2 < b1) or (a2 < a1 and b1 < b2)


def is_pairwise_crossing(order: LinearOrder, edges: Iterable) -> bool:
    """Every unordered pair crosses; vacuously true below two edges."""
    spans = []
    pos = order.position
    for u, v in edges:
        a, b = pos[u], pos[v]
        spans.append((a, b) if a < b else (b, a))
    for i in range(len(spans)):
        a1, b1 = spans[i]
        for j in range(i + 1, len(spans)):
            a2, b2 = spans[j]
            if not (a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1):
                return False
    return True


@dataclass(frozen=True)
class EdgeColoring:
    colors: dict
    k: int

    @staticmethod
    def from_colors(colors: dict) -> "EdgeColoring":
        k = 1 + max(colors.values()) if colors else 0
        return EdgeColoring(dict(colors), k)


@dataclass(frozen=True)
class Layout:
    kind: str
    order: LinearOrder
    coloring: EdgeColoring


@dataclass
class VerifyReport:
    valid: bool
    violations: list


def _class_has_crossing(spans: list[tuple[int, int]], n: int) -> bool:
    # stack discipline: open edges at their left end (longest first), each
    # right end must close the top of the stack
    opens = [[] for _ in range(n)]
    closes = [[] for _ in range(n)]
    for idx, (lo, hi) in enumerate(spans):
        opens[lo].append(idx)
        closes[hi].append(idx)
    stack: list[int] = []
    for p in range(n):
        need = set(closes[p])
        while need:
            if stack and stack[-1] in need:
                need.discard(stack.pop())
            else:
                return True
        for idx in sorted(opens[p], key=lambda i: -spans[i][1]):
            stack.append(idx)
    return False


def _class_has_nesting(spans: list[tuple[int, int]]) -> bool:
    # left ends ascending; containment needs a strictly smaller left end
    # with a strictly larger right end
    prev_max = -1
    group_lo, group_max = None, -1
    for lo, hi in sorted(spans):
        if lo != group_lo:
            prev_max = max(prev_max, group_max)
            group_lo, group_max = lo, -1
        if hi < prev_max:
            return True
        group_max = max(group_max, hi)
    return False


def verify_layout(g: Graph, layout: Layout) -> VerifyReport:
    """Check a layout: no same-colour pair crosses (stack) / nests (queue).

    All offending pairs are listed, not just the first.
    """
    if layout.kind not in (STACK, QUEUE):
        raise InvalidParameterError(f"unknown layout kind {layout.kind!r}")
    order = layout.order
    if len(order) != g.vertex_count or set(order.sequence) != set(range(g.vertex_count)):
        raise InvalidParameterError("order must cover the graph's vertices exactly")
    colors = {}
    for e, c in layout.coloring.colors.items():
        key = normalize_edge(*e)
        if colors.setdefault(key, c) != c:
            raise InvalidParameterError(f"edge {key} coloured twice inconsistently")
    if set(colors) != g.edges:
        raise InvalidParameterError("colouring must be total on the edge set")

    pos = order.position
    classes: dict[int, list] = {}
    for e, c in colors.items():
        classes.setdefault(c, []).append(e)

    pred = crosses if layout.kind == STACK else nests
    violations = []
    for c in sorted(classes):
        edges = sorted(classes[c])
        spans = []
        for u, v in edges:
            a, b = pos[u], pos[v]
            spans.append((a, b) if a < b else (b, a))
        if layout.kind == STACK:
            bad = _class_has_crossing(spans, len(order))
        else:
            bad = _class_has_nesting(spans)
        if not bad:
            continue
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if pred(order, edges[i], edges[j]):
                    violations.append((edges[i], edges[j]))
    violations.sort()
    return VerifyReport(not violations, violations)


# ---------------------------------------------------------------------------
# per-order minima

def _conflict_adjacency(g: Graph, order: LinearOrder) -> tuple[list, list]:
    edges = g.edge_list()
    pos = order.position
    spans = []
    for u, v in edges:
        a, b = pos[u], pos[v]
        spans.append((a, b) if a < b else (b, a))
    m = len(edges)
    adj = [set() for _ in range(m)]
    for i in range(m):
        a1, b1 = spans[i]
        for j in range(i + 1, m):
            a2, b2 = spans[j]
            if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
                adj[i].add(j)
                adj[j].add(i)
    return edges, adj


def _greedy_clique(adj) -> list[int]:
    # seed from the highest-degree vertex, extend by degree then id
    m = len(adj)
    if m == 0:
        return []
    best: list[int] = []
    for seed in sorted(range(m), key=lambda v: (-len(adj[v]), v))[: max(1, m // 8)]:
        clique = [seed]
        cands = set(adj[seed])
        while cands:
            v = min(cands, key=lambda w: (-len(adj[w] & cands), w))
            clique.append(v)
            cands &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_greedy(adj) -> tuple[int, list[int]]:
    m = len(adj)
    colors = [-1] * m
    neighbour_colors = [set() for _ in range(m)]
    for _ in range(m):
        v = min(
            (u for u in range(m) if colors[u] == -1),
            key=lambda u: (-len(neighbour_colors[u]), -len(adj[u]), u),
        )
        c = 0
        while c in neighbour_colors[v]:
            c += 1
        colors[v] = c
        for w in adj[v]:
            neighbour_colors[w].add(c)
    return (1 + max(colors) if colors else 0), colors


def _exact_coloring(adj, cutoff: Optional[int] = None):
    """Exact chromatic number of a conflict graph by DSATUR branch and bound.

    With a cutoff, only colourings using fewer than ``cutoff`` colours are
    of interest; (None, None) signals that none exists.
    """
    m = len(adj)
    if m == 0:
        if cutoff is not None and cutoff <= 0:
            return None, None
        return 0, []
    greedy_k, greedy_colors = _dsatur_greedy(adj)
    lower = max(1, len(_greedy_clique(adj)))

    if cutoff is None or greedy_k < cutoff:
        best_k, best_colors = greedy_k, list(greedy_colors)
    else:
        best_k, best_colors = cutoff, None  # bound only, no witness yet

    if lower < best_k:
        colors = [-1] * m
        neighbour_colors = [set() for _ in range(m)]

        def choose():
            pick, key = -1, None
            for u in range(m):
                if colors[u] != -1:
                    continue
                k = (-len(neighbour_colors[u]), -len(adj[u]), u)
                if key is None or k < key:
                    key, pick = k, u
            return pick

        def backtrack(used_k: int):
            nonlocal best_k, best_colors
            if best_k <= lower:
                return
            v = choose()
            if v == -1:
                if used_k < best_k:
                    best_k, best_colors = used_k, list(colors)
                return
            for c in range(min(used_k + 1, best_k - 1)):
                if c in neighbour_colors[v] or max(used_k, c + 1) >= best_k:
                    continue
                colors[v] = c
                touched = []
                for w in adj[v]:
                    if colors[w] == -1 and c not in neighbour_colors[w]:
                        neighbour_colors[w].add(c)
                        touched.append(w)
                backtrack(max(used_k, c + 1))
                colors[v] = -1
                for w in touched:
                    neighbour_colors[w].discard(c)
                if best_k <= lower:
                    return

        backtrack(0)

    if best_colors is None:
        return None, None
    return best_k, best_colors


def min_stack_colors_for_order(
    g: Graph,
    order: LinearOrder,
    max_edges: int = DEFAULT_STACK_EDGE_LIMIT,
    _cutoff: Optional[int] = None,
):
    """Exact minimum number of stacks for a fixed order, with a witness.

    The crossing-conflict graph is coloured exactly; the instance size is
    gated by ``max_edges`` because the problem is NP-hard in general.
    """
    if len(order) != g.vertex_count:
        raise InvalidParameterError("order must cover the graph's vertices")
    if len(g.edges) > max_edges:
        raise ResourceLimitError(
            f"{len(g.edges)} edges exceed the stack-colouring limit of {max_edges}",
            lower=1 if g.edges else 0,
            upper=len(g.edges),
        )
    edges, adj = _conflict_adjacency(g, order)
    k, colors = _exact_coloring(adj, cutoff=_cutoff)
    if k is None:
        return None, None
    coloring = EdgeColoring.from_colors({e: colors[i] for i, e in enumerate(edges)})
    return k, coloring


def min_queue_colors_for_order(g: Graph, order: LinearOrder):
    """Exact minimum number of queues for a fixed order, with a witness.

    Equals the longest chain of pairwise nested edges; colouring an edge
    by its chain depth makes every colour class nesting-free.
    """
    if len(order) != g.vertex_count:
        raise InvalidParameterError("order must cover the graph's vertices")
    edges = g.edge_list()
    pos = order.position
    spans = []
    for u, v in edges:
        a, b = pos[u], pos[v]
        spans.append((a, b) if a < b else (b, a))
    m = len(edges)
    by_span = sorted(range(m), key=lambda i: (spans[i][0] - spans[i][1], spans[i]))
    depth = [1] * m
    done: list[int] = []
    for i in by_span:
        a2, b2 = spans[i]
        best = 0
        for j in done:
            a1, b1 = spans[j]
            if a1 < a2 and b2 < b1 and depth[j] > best:
                best = depth[j]
        depth[i] = best + 1
        done.append(i)
    k = max(depth) if depth else 0
    coloring = EdgeColoring.from_colors({e: depth[i] - 1 for i, e in enumerate(edges)})
    return k, coloring


# ---------------------------------------------------------------------------
# JSON form: {"kind": "stack"|"queue", "order": [...], "colors": {"u-v": c}}

def layout_to_json_dict(layout: Layout) -> dict:
    colors = {
        f"{u}-{v}": layout.coloring.colors[(u, v)]
        for u, v in sorted(layout.coloring.colors)
    }
    return {"kind": layout.kind, "order": list(layout.order.sequence), "colors": colors}


def layout_to_json(layout: Layout) -> str:
    return json.dumps(layout_to_json_dict(layout), separators=(",", ":"))


def layout_from_json_dict(doc: dict) -> Layout:
    try:
        kind = doc["kind"]
        order = LinearOrder.from_sequence(int(v) for v in doc["order"])
        colors = {}
        for key, c in doc["colors"].items():
            u, v = key.split("-")
            colors[normalize_edge(int(u), int(v))] = int(c)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParameterError(f"malformed layout document: {exc}") from exc
    if kind not in (STACK, QUEUE):
        raise InvalidParameterError(f"unknown layout kind {kind!r}")
    return Layout(kind, order, EdgeColoring.from_colors(colors))


def layout_from_json(text: str) -> Layout:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"invalid JSON: {exc}") from exc
    return layout_from_json_dict(doc)
