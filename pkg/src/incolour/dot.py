"""DOT export of (coloured) incidence graphs for figure-style inspection."""

from __future__ import annotations

from typing import Optional

from .graphs import Graph, IncidenceColouring, incidence_neighbour_ids, incidences

_PALETTE = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
    "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb",
]


def incidence_graph_dot(g: Graph, colouring: Optional[IncidenceColouring] = None) -> str:
    """DOT text for the incidence graph of ``g``; nodes are incidences
    labelled ``v:(a-b)``, filled by colour class when a colouring is given."""
    lines = ["graph incidences {", "  node [style=filled, fillcolor=white];"]
    for i, inc in enumerate(incidences(g)):
        label = f"{inc.vertex}:({inc.edge[0]}-{inc.edge[1]})"
        attrs = [f'label="{label}"']
        if colouring is not None and i in colouring:
            c = colouring[i]
            attrs.append(f'fillcolor="{_PALETTE[c % len(_PALETTE)]}"')
            attrs.append(f'xlabel="{c}"')
        lines.append(f"  i{i} [{', '.join(attrs)}];")
    neigh = incidence_neighbour_ids(g)
    for i, ids in enumerate(neigh):
        for j in ids:
            if i < j:
                lines.append(f"  i{i} -- i{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
