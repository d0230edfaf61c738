"""DOT export for graphs and coloured layouts."""

from __future__ import annotations

from typing import Optional

from .graphs import Graph, GridCoord, ProductVertex
from .layouts import Layout

PALETTE = (
    "#e41a1c",
    "#377eb8",
    "#4daf4a",
    "#984ea3",
    "#ff7f00",
    "#a65628",
    "#f781bf",
    "#999999",
)


def _label_text(label) -> str:
    if isinstance(label, GridCoord):
        return f"[{label.a},{label.b}]"
    if isinstance(label, ProductVertex):
        return f"({label.star_part},[{label.grid_part.a},{label.grid_part.b}])"
    return str(label)


def graph_to_dot(g: Graph, layout: Optional[Layout] = None) -> str:
    """Undirected DOT text; with a layout, edges are coloured by class."""
    lines = ["graph G {"]
    for i, label in enumerate(g.labels):
        lines.append(f'  {i} [label="{_label_text(label)}"];')
    colors = layout.coloring.colors if layout is not None else {}
    for u, v in g.edge_list():
        if (u, v) in colors:
            tone = PALETTE[colors[(u, v)] % len(PALETTE)]
            lines.append(f'  {u} -- {v} [color="{tone}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
