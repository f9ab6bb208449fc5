"""
Export Hasse diagrams for graphviz' dot or as JSON.

Elements of equal rank share a ``rank = same`` subgraph, so after writing
``ncb.gv`` the diagram can be drawn with

    dot -Tpng -O ncb.gv
"""

import json
from typing import Any, Callable

from annular_nc.posets.finite_poset import FinitePoset


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def hasse_to_dot(
    poset: FinitePoset,
    label: Callable[[Any], str] = str,
    rank: Callable[[Any], int] | None = None,
    name: str = "hasse",
) -> str:
    """
    Render the Hasse diagram as DOT text, bottom elements at the bottom.

    Args:
        poset: The poset to draw
        label: Node label for an element (default str)
        rank: Rank function; when given, equal ranks are drawn on one level
        name: Graph name
    """
    lines = [f"digraph {name} {{", "\trankdir = BT;", "\tnode [shape = box];"]
    if rank is not None:
        layers: dict[int, list[int]] = {}
        for k, x in enumerate(poset.elements):
            layers.setdefault(rank(x), []).append(k)
        for value in sorted(layers):
            lines.append("\t{")
            lines.append("\t\trank = same;")
            for k in layers[value]:
                lines.append(f'\t\t"{k}" [label="{_escape(label(poset.elements[k]))}"];')
            lines.append("\t}")
    else:
        for k, x in enumerate(poset.elements):
            lines.append(f'\t"{k}" [label="{_escape(label(x))}"];')
    for lower, upper in poset.covers:
        lines.append(f'\t"{lower}" -> "{upper}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_to_json(poset: FinitePoset, label: Callable[[Any], str] = str) -> str:
    """{"elements": [...], "covers": [[i, j], ...]} with i covered by j."""
    return json.dumps(poset.to_json(label), indent=2) + "\n"
