"""Topologies derived from an undirected multigraph.

``graph_topology`` builds Top(G), whose points are the vertices and edges of
G and whose basic opens are the edge neighbourhoods ``{e, v, v'}``.
``face_model`` is the finite stand-in for the usual topology of G as a
1-complex: edge interiors are open points and a vertex's smallest open set
holds the vertex and its incident edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import GraphError, TopologyError
from .finite_topology import FiniteSpace, PointSet, from_subbasis


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str]


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(e if isinstance(e, Edge) else Edge(e[0], tuple(e[1])) for e in self.edges)
        )
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate edge ids")
        clash = vs & set(ids)
        if clash:
            raise GraphError(f"ids used for both vertices and edges: {sorted(clash)}")
        for e in self.edges:
            if len(e.ends) != 2:
                raise GraphError(f"edge {e.id} must have exactly two ends")
            for v in e.ends:
                if v not in vs:
                    raise GraphError(f"edge {e.id} references unknown vertex {v}")

    @property
    def points(self) -> tuple[str, ...]:
        return self.vertices + tuple(e.id for e in self.edges)

    def incident(self, v: str) -> list[Edge]:
        return [e for e in self.edges if v in e.ends]


def graph_topology(g: Graph) -> FiniteSpace:
    """Top(G): the space generated by the neighbourhoods N(e) = {e, v, v'}.

    A self-loop gives N(e) = {e, v}.  Vertices with no incident edge are made
    open points so that Top(G) has the same components as G.
    """
    subbasis = [{e.id, *e.ends} for e in g.edges]
    subbasis += [{v} for v in g.vertices if not g.incident(v)]
    return from_subbasis(g.points, subbasis)


def face_model(g: Graph) -> FiniteSpace:
    min_open = {e.id: {e.id} for e in g.edges}
    for v in g.vertices:
        min_open[v] = {v} | {e.id for e in g.incident(v)}
    return FiniteSpace(g.points, min_open)


def identity_map(space: FiniteSpace) -> dict[str, str]:
    return {p: p for p in space.points}


def is_continuous(
    f: Mapping[str, str], dom: FiniteSpace, cod: FiniteSpace
) -> tuple[bool, Optional[PointSet]]:
    """Check continuity of ``f`` and return ``(ok, witness)``.

    Only preimages of the codomain's minimal opens need checking, since every
    open is a union of them.  When ``f`` is not continuous the witness is the
    smallest codomain minimal open whose preimage is not open.
    """
    missing = [p for p in dom.points if p not in f]
    if missing:
        raise TopologyError(f"map is not defined on {missing}")
    extra = [p for p in f if p not in dom]
    if extra:
        raise TopologyError(f"map has entries for unknown domain points {extra}")
    dangling = sorted({y for y in f.values() if y not in cod})
    if dangling:
        raise TopologyError(f"map targets unknown codomain points {dangling}")

    failures = []
    seen = set()
    for y in cod.points:
        u = cod.min_open[y]
        if u in seen:
            continue
        seen.add(u)
        pre = frozenset(x for x in dom.points if f[x] in u)
        if any(not dom.min_open[x] <= pre for x in pre):
            failures.append(u)
    if not failures:
        return True, None
    order = {p: i for i, p in enumerate(cod.points)}
    witness = min(failures, key=lambda u: (len(u), sorted(order[p] for p in u)))
    return False, witness


def graph_components(g: Graph) -> list[set[str]]:
    """Vertex sets of the connected components of ``g`` (breadth-first)."""
    adj = {v: set() for v in g.vertices}
    for e in g.edges:
        a, b = e.ends
        adj[a].add(b)
        adj[b].add(a)
    seen = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x] - comp:
                    comp.add(y)
                    nxt.append(y)
            frontier = nxt
        seen |= comp
        comps.append(comp)
    return comps


def path_graph(names: Sequence[str]) -> Graph:
    """Path through vertices ``names``; edge i is named ``e{i+1}``."""
    edges = [Edge(f"e{i + 1}", (a, b)) for i, (a, b) in enumerate(zip(names, names[1:]))]
    return Graph(tuple(names), tuple(edges))
