"""Graphviz DOT text for graphs and finite spaces."""

from __future__ import annotations

from typing import Iterable

from .finite_topology import FiniteSpace
from .graph_spaces import Graph


def _q(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {_q(name)} {{"]
    for v in g.vertices:
        lines.append(f"  {_q(v)};")
    for e in g.edges:
        a, b = e.ends
        lines.append(f"  {_q(a)} -- {_q(b)} [label={_q(e.id)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def space_to_dot(space: FiniteSpace, highlight: Iterable[str] = (), name: str = "X") -> str:
    """One node per point and an arc ``x -> y`` for each ``y`` in min_open(x), y != x.

    Points in ``highlight`` (link points of an augmented space) are drawn as
    filled diamonds.
    """
    highlight = set(highlight)
    lines = [f"digraph {_q(name)} {{"]
    for p in space.points:
        style = ' [shape=diamond, style=filled, fillcolor="lightblue"]' if p in highlight else ""
        lines.append(f"  {_q(p)}{style};")
    for p in space.points:
        for q in space.sorted_points(space.min_open[p]):
            if q != p:
                lines.append(f"  {_q(p)} -> {_q(q)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
