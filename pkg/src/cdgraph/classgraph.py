"""Common divisor graphs and prime graphs on sets of class sizes.

Both kinds are small simple undirected graphs with integer vertices; all
orderings (vertices, components, twin classes) are by minimal vertex so
that reports are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable

from .numeric import factorize, pi_set


class Graph:
    kind = "graph"

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]]):
        self.vertices = tuple(sorted(set(vertices)))
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.adjacency = {v: frozenset(n) for v, n in adj.items()}

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in sorted(self.adjacency[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(vertices={list(self.vertices)}, edges={self.edges()})"


class CdGraph(Graph):
    """Gamma(X): vertices are the members of X above 1, joined when not coprime."""

    kind = "gamma"


class PrimeGraph(Graph):
    """Delta(X): primes dividing members of X, joined when they co-divide one."""

    kind = "delta"


def common_divisor_graph(sizes: Iterable[int]) -> CdGraph:
    vs = sorted({x for x in sizes if x > 1})
    return CdGraph(vs, [(u, v) for u, v in combinations(vs, 2) if gcd(u, v) > 1])


def prime_graph(sizes: Iterable[int]) -> PrimeGraph:
    primes: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for x in sizes:
        ps = sorted(factorize(x))
        primes.update(ps)
        edges.update(combinations(ps, 2))
    return PrimeGraph(primes, edges)


def degrees(graph: Graph) -> dict[int, int]:
    return {v: graph.degree(v) for v in graph.vertices}


def regularity(graph: Graph) -> int | None:
    """The common degree k, or None if the graph is empty or irregular."""
    ds = set(degrees(graph).values())
    return ds.pop() if len(ds) == 1 else None


def is_complete(graph: Graph) -> bool:
    n = len(graph)
    return all(graph.degree(v) == n - 1 for v in graph.vertices)


def _distances(graph: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in graph.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def connected_components(graph: Graph) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for v in graph.vertices:
        if v not in seen:
            comp = _distances(graph, v)
            seen.update(comp)
            out.append(tuple(sorted(comp)))
    return out


def diameter(graph: Graph, component: Iterable[int]) -> int:
    comp = tuple(sorted(component))
    if comp not in connected_components(graph):
        raise ValueError(f"{list(comp)} is not a connected component")
    return max(max(_distances(graph, v).values()) for v in comp)


def twin_classes(graph: Graph) -> list[tuple[int, ...]]:
    """Classes of the closed-twin relation N(v) + {v} == N(w) + {w}."""
    groups: dict[frozenset[int], list[int]] = {}
    for v in graph.vertices:
        groups.setdefault(graph.adjacency[v] | {v}, []).append(v)
    return sorted(tuple(vs) for vs in groups.values())


def is_clique(graph: Graph, subset: Iterable[int]) -> bool:
    subset = list(subset)
    unknown = [v for v in subset if v not in graph.adjacency]
    if unknown:
        raise ValueError(f"unknown vertices {unknown}")
    return all(graph.adjacent(u, v) for u, v in combinations(set(subset), 2))


@dataclass
class GraphReport:
    kind: str
    vertices: list[int]
    edges: list[tuple[int, int]]
    degrees: dict[int, int]
    regularity: int | None
    complete: bool
    components: list[list[int]]
    diameters: list[int]
    twin_classes: list[list[int]]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "vertices": self.vertices,
            "edges": [list(e) for e in self.edges],
            "degrees": {str(v): d for v, d in self.degrees.items()},
            "regularity": self.regularity,
            "complete": self.complete,
            "components": self.components,
            "diameters": self.diameters,
            "twin_classes": self.twin_classes,
        }


def graph_report(graph: Graph) -> GraphReport:
    comps = connected_components(graph)
    return GraphReport(
        kind=graph.kind,
        vertices=list(graph.vertices),
        edges=graph.edges(),
        degrees=degrees(graph),
        regularity=regularity(graph),
        complete=is_complete(graph),
        components=[list(c) for c in comps],
        diameters=[diameter(graph, c) for c in comps],
        twin_classes=[list(t) for t in twin_classes(graph)],
    )


def to_dot(graph: Graph, name: str = "G") -> str:
    quoted = name.replace("\\", "\\\\").replace('"', '\\"')
    lines = [f'graph "{quoted}" {{']
    lines += [f'  {v} [label="{v}"];' for v in graph.vertices]
    lines += [f"  {u} -- {v};" for u, v in graph.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def component_correspondence(
    gamma: CdGraph, delta: PrimeGraph
) -> list[tuple[tuple[int, ...], tuple[int, ...] | None]]:
    """Pair each Gamma component with the Delta component holding its primes."""
    delta_comps = connected_components(delta)
    where = {q: c for c in delta_comps for q in c}
    out = []
    for comp in connected_components(gamma):
        primes = set().union(*(pi_set(v) for v in comp))
        targets = {where[q] for q in primes}
        out.append((comp, targets.pop() if len(targets) == 1 else None))
    return out
