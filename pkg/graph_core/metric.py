from __future__ import annotations

import math

import networkx as nx

from .graph import Graph, _check_vertex, delete_edge

INFINITY = math.inf


def distances_from(graph: Graph, v: int) -> list[float]:
    """Hop distance from v to every vertex; INFINITY when unreachable."""
    _check_vertex(graph, v)
    lengths = nx.single_source_shortest_path_length(graph.as_networkx, v)
    return [lengths.get(u, INFINITY) for u in range(graph.n)]


def is_connected(graph: Graph) -> bool:
    return graph.n > 0 and nx.is_connected(graph.as_networkx)


def eccentricity(graph: Graph, v: int) -> float:
    return max(distances_from(graph, v))


def radius(graph: Graph) -> float:
    if graph.n == 0:
        return 0
    if not is_connected(graph):
        return INFINITY
    return nx.radius(graph.as_networkx)


def is_radius_minimal(graph: Graph) -> bool:
    """Every edge deletion strictly increases the radius."""
    r = radius(graph)
    return all(radius(delete_edge(graph, e)) > r for e in graph.sorted_edges())
