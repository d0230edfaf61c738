"""Graph values and generators: dual hex grids, stars, Cartesian products.

Vertices are dense integer ids so that order/position queries are plain
array lookups; semantic labels (grid coordinates, star parts) ride along.
Graph values are immutable after construction.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional

from .errors import InvalidParameterError


class GridCoord(NamedTuple):
    """Coordinate [a, b] on the n x n grid, both components in 1..n."""

    a: int
    b: int


class ProductVertex(NamedTuple):
    """Vertex of a star-times-grid product: hub "t" or leaf index, plus a grid coordinate."""

    star_part: int | str
    grid_part: GridCoord


STAR_ROOT = "t"


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise InvalidParameterError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    kind: str
    vertex_count: int
    labels: tuple
    edges: frozenset
    adjacency: tuple = field(compare=False, repr=False)
    hex_n: Optional[int] = None
    star_a: Optional[int] = None

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def index_of_label(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidParameterError(f"no vertex labelled {label!r}") from None


def _make_graph(kind, labels, edge_pairs, hex_n=None, star_a=None) -> Graph:
    labels = tuple(labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise InvalidParameterError("vertex labels must be injective")
    edges = set()
    for u, v in edge_pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidParameterError(f"edge ({u},{v}) outside vertex range")
        edges.add(normalize_edge(u, v))
    adjacency = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
    return Graph(kind, n, labels, frozenset(edges), adjacency, hex_n, star_a)


def plain_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Simple graph on ids 0..vertex_count-1 with plain integer labels."""
    if vertex_count < 0:
        raise InvalidParameterError("vertex_count must be nonnegative")
    return _make_graph("plain", range(vertex_count), edges)


def hex_vertex_id(coord: GridCoord, n: int) -> int:
    """Row-major id: [a, b] -> (b-1)*n + (a-1)."""
    return (coord.b - 1) * n + (coord.a - 1)


def hex_coord(vid: int, n: int) -> GridCoord:
    return GridCoord(vid % n + 1, vid // n + 1)


def _hex_adjacent(p: GridCoord, q: GridCoord) -> bool:
    da, db = p.a - q.a, p.b - q.b
    return abs(da) + abs(db) == 1 or (da == db and abs(da) == 1)


@lru_cache(maxsize=None)
def make_hex_dual(n: int) -> Graph:
    """Dual hexagonal grid on {1..n}^2.

    Edges join unit horizontal and vertical steps plus the (+1,+1)
    diagonal, for 3n^2 - 4n + 1 edges in total.
    """
    if n < 1:
        raise InvalidParameterError("n must be a positive integer")
    labels = [hex_coord(i, n) for i in range(n * n)]
    edges = []
    for b in range(1, n + 1):
        for a in range(1, n + 1):
            i = hex_vertex_id(GridCoord(a, b), n)
            if a < n:
                edges.append((i, i + 1))
            if b < n:
                edges.append((i, i + n))
            if a < n and b < n:
                edges.append((i, i + n + 1))
    return _make_graph("hex", labels, edges, hex_n=n)


@lru_cache(maxsize=None)
def make_star(a: int) -> Graph:
    """Star with one hub (id 0, label "t") and leaves 1..a."""
    if a < 1:
        raise InvalidParameterError("a must be a positive integer")
    labels = [STAR_ROOT] + list(range(1, a + 1))
    return _make_graph("star", labels, [(0, i) for i in range(1, a + 1)], star_a=a)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (x,y) ~ (x',y') iff one coordinate steps along an edge.

    Vertex ids are x * |V(h)| + y.  A star times a hex grid keeps
    structured ProductVertex labels; any other combination falls back to
    a plain graph labelled by (label_x, label_y) pairs.
    """
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise InvalidParameterError("both factors must be nonempty")
    nh = h.vertex_count
    edges = []
    for x in range(g.vertex_count):
        base = x * nh
        for u, v in h.edges:
            edges.append((base + u, base + v))
    for u, v in g.edges:
        for y in range(nh):
            edges.append((u * nh + y, v * nh + y))
    if g.kind == "star" and h.kind == "hex":
        labels = [
            ProductVertex(g.labels[x], h.labels[y])
            for x in range(g.vertex_count)
            for y in range(nh)
        ]
        return _make_graph("product", labels, edges, hex_n=h.hex_n, star_a=g.star_a)
    labels = [
        (g.labels[x], h.labels[y]) for x in range(g.vertex_count) for y in range(nh)
    ]
    return _make_graph("plain", labels, edges)


@lru_cache(maxsize=None)
def make_star_hex_product(a: int, n: int) -> Graph:
    return cartesian_product(make_star(a), make_hex_dual(n))


def connected_components(g: Graph, restrict: Optional[Iterable[int]] = None) -> list[frozenset[int]]:
    """Partition of ``restrict`` (default all vertices) into maximal connected
    pieces of the induced subgraph, ordered by smallest member."""
    if restrict is None:
        allowed = set(range(g.vertex_count))
    else:
        allowed = set(restrict)
        bad = [v for v in allowed if not 0 <= v < g.vertex_count]
        if bad:
            raise InvalidParameterError(f"restrict contains unknown vertices {bad}")
    components = []
    seen = set()
    for start in sorted(allowed):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w in allowed and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        components.append(frozenset(comp))
    return components


def shortest_path(
    g: Graph, s: int, t: int, restrict: Optional[Iterable[int]] = None
) -> Optional[list[int]]:
    """BFS shortest path from s to t inside the induced subgraph, or None."""
    allowed = set(range(g.vertex_count)) if restrict is None else set(restrict)
    if s not in allowed or t not in allowed:
        raise InvalidParameterError("endpoints must lie inside the restricted set")
    if s == t:
        return [s]
    prev = {s: None}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w in allowed and w not in prev:
                prev[w] = v
                if w == t:
                    path = [t]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
                queue.append(w)
    return None


# ---------------------------------------------------------------------------
# JSON form: {"kind": ..., "n"/"a": ..., "vertices": [{"id", "label"}], "edges": [[u,v],...]}

def _label_to_json(label):
    if isinstance(label, GridCoord):
        return [label.a, label.b]
    if isinstance(label, ProductVertex):
        return [label.star_part, [label.grid_part.a, label.grid_part.b]]
    if isinstance(label, (int, str)):
        return label
    # generic products carry tuple labels; serialize positionally by id
    return None


def graph_to_json_dict(g: Graph) -> dict:
    doc: dict = {"kind": g.kind}
    if g.hex_n is not None:
        doc["n"] = g.hex_n
    if g.star_a is not None:
        doc["a"] = g.star_a
    vertices = []
    for i, label in enumerate(g.labels):
        enc = _label_to_json(label)
        vertices.append({"id": i, "label": i if enc is None else enc})
    doc["vertices"] = vertices
    doc["edges"] = [list(e) for e in g.edge_list()]
    return doc


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_json_dict(g), separators=(",", ":"))


def _label_from_json(kind, raw):
    if kind == "hex":
        a, b = raw
        return GridCoord(int(a), int(b))
    if kind == "product":
        part, (a, b) = raw
        part = STAR_ROOT if part == STAR_ROOT else int(part)
        return ProductVertex(part, GridCoord(int(a), int(b)))
    if kind == "star":
        return STAR_ROOT if raw == STAR_ROOT else int(raw)
    return int(raw)


def graph_from_json_dict(doc: dict) -> Graph:
    try:
        kind = doc["kind"]
        vertices = doc["vertices"]
        edges = doc["edges"]
    except (KeyError, TypeError) as exc:
        raise InvalidParameterError(f"malformed graph document: {exc}") from exc
    if kind not in ("plain", "hex", "star", "product"):
        raise InvalidParameterError(f"unknown graph kind {kind!r}")
    ids = [v["id"] for v in vertices]
    if ids != list(range(len(ids))):
        raise InvalidParameterError("vertex ids must be dense and sorted from 0")
    labels = [_label_from_json(kind, v["label"]) for v in vertices]
    pairs = []
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not u < v:
            raise InvalidParameterError(f"edge {e} not stored with u < v")
        pairs.append((u, v))
    return _make_graph(kind, labels, pairs, hex_n=doc.get("n"), star_a=doc.get("a"))


def graph_from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"invalid JSON: {exc}") from exc
    return graph_from_json_dict(doc)
