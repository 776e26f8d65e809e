"""DOT export so the constructed graphs can be drawn with Graphviz."""
from typing import Iterable, Optional

from kkclique.graph.graph import Graph


def to_dot(g: Graph, name: str = "G", highlight: Optional[Iterable[int]] = None) -> str:
    """
    Render g as an undirected DOT graph.

    Args:
        g: Graph
        name: str
            Graph identifier written after ``graph``
        highlight: iterable of int
            Vertices drawn filled, e.g. the external vertices of an apex
            construction
    Returns:
        str
    """
    marked = set(highlight or ())
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(1, g.n + 1):
        if v in marked:
            lines.append(f'  {v} [style=filled, fillcolor="lightgray"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
