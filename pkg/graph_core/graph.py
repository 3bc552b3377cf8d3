from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .errors import GraphError

Edge = tuple[int, int]


def normalize_edge(edge: Sequence[int]) -> Edge:
    u, v = edge
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.neighbors]

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge((u, v)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def as_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges())
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class VertexRootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        _check_vertex(self.graph, self.root)


@dataclass(frozen=True)
class EdgeRootedGraph:
    graph: Graph
    root_edge: Edge

    def __post_init__(self):
        edge = normalize_edge(self.root_edge)
        if edge not in self.graph.edges:
            raise GraphError(f"root edge {edge} is not an edge of the graph")
        object.__setattr__(self, "root_edge", edge)


def _check_vertex(graph: Graph, v: int) -> None:
    if not 0 <= v < graph.n:
        raise GraphError(f"vertex {v} out of range for a graph on {graph.n} vertices")


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    normalized = set()
    for index, pair in enumerate(edges):
        u, v = pair
        if u == v:
            raise GraphError(f"edge #{index} ({u}, {v}) is a self-loop")
        for endpoint in (u, v):
            if not 0 <= endpoint < n:
                raise GraphError(f"edge #{index} ({u}, {v}) has endpoint {endpoint} out of range 0..{n - 1}")
        normalized.add(normalize_edge((u, v)))
    return Graph(n, frozenset(normalized))


def from_networkx(g: nx.Graph) -> Graph:
    index = {node: i for i, node in enumerate(sorted(g.nodes))}
    return make_graph(len(index), ((index[u], index[v]) for u, v in g.edges))


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph, renumbered in increasing order of the kept vertices."""
    kept = sorted(set(vertices))
    for v in kept:
        _check_vertex(graph, v)
    index = {v: i for i, v in enumerate(kept)}
    return Graph(
        len(kept),
        frozenset((index[u], index[v]) for u, v in graph.edges if u in index and v in index),
    )


def edge_subgraph(graph: Graph, edges: Iterable[Sequence[int]]) -> tuple[Graph, dict[int, int]]:
    """Subgraph formed by the given edges and their endpoints.

    Returns the compacted graph and the map from old to new vertex indices.
    """
    kept = {normalize_edge(e) for e in edges}
    missing = kept - graph.edges
    if missing:
        raise GraphError(f"edges {sorted(missing)} are not in the graph")
    vertices = sorted({x for e in kept for x in e})
    index = {v: i for i, v in enumerate(vertices)}
    return Graph(len(vertices), frozenset(normalize_edge((index[u], index[v])) for u, v in kept)), index


def delete_vertex(graph: Graph, v: int) -> Graph:
    _check_vertex(graph, v)
    return induced_subgraph(graph, (u for u in range(graph.n) if u != v))


def delete_edge(graph: Graph, edge: Sequence[int]) -> Graph:
    e = normalize_edge(edge)
    if e not in graph.edges:
        raise GraphError(f"edge {e} is not in the graph")
    return Graph(graph.n, graph.edges - {e})


def relabel(graph: Graph, permutation: Sequence[int]) -> Graph:
    """Vertex v of the input becomes vertex permutation[v]."""
    if sorted(permutation) != list(range(graph.n)):
        raise GraphError(f"{list(permutation)} is not a permutation of 0..{graph.n - 1}")
    return Graph(graph.n, frozenset(normalize_edge((permutation[u], permutation[v])) for u, v in graph.edges))
