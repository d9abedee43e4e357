import colorsys
from typing import Optional

from longref.graph import Graph
from longref.structs import Colouring


def _fill(colour: int, k: int) -> str:
    r, g, b = colorsys.hsv_to_rgb(colour / max(k, 1), 0.45, 0.95)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def write_dot(g: Graph, colouring: Optional[Colouring] = None, name: str = "G") -> str:
    """DOT text; with a colouring, vertices are grouped and filled by class."""
    lines = [f"graph {name} {{"]
    if colouring is not None:
        colouring.check_covers(g.n)
        lines.append("  node [style=filled];")
        for cid, members in enumerate(colouring.classes()):
            fill = _fill(cid, colouring.k)
            lines.append(f"  subgraph class_{cid} {{")
            for v in members:
                lines.append(f'    {v} [fillcolor="{fill}", label="{v}:{cid}"];')
            lines.append("  }")
    else:
        for v in range(g.n):
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
