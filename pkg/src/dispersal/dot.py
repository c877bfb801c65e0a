"""Graphviz DOT export."""
from __future__ import annotations

from .graph import Graph
from .labelling import Labelling

EVEN_COLOR = "lightblue"
ODD_COLOR = "lightsalmon"


def to_dot(g: Graph, lab: Labelling | None = None) -> str:
    """Render ``g`` as DOT; with a labelling, vertices show and are colored by label parity."""
    name = (g.name or "G").replace('"', "'")
    lines = [f'graph "{name}" {{', "  node [shape=circle];"]
    labels = lab.vertex_labels() if lab is not None else None
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            color = EVEN_COLOR if labels[v] % 2 == 0 else ODD_COLOR
            lines.append(f'  {v} [label="{labels[v]}", xlabel="{v}", style=filled, fillcolor={color}];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
