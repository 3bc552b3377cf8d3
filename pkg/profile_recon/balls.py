from __future__ import annotations

from typing import Sequence

from graph_core.errors import GraphError, PreconditionError
from graph_core.graph import EdgeRootedGraph, Graph, VertexRootedGraph, edge_subgraph, induced_subgraph, normalize_edge
from graph_core.metric import INFINITY, distances_from


def ball_vertex(graph: Graph, v: int, k: int) -> VertexRootedGraph:
    """G_k^v: induced on the vertices within distance k of v, rooted at v."""
    if k < 0:
        raise PreconditionError(f"ball radius must be non-negative, got {k}")
    distances = distances_from(graph, v)
    kept = [u for u in range(graph.n) if distances[u] <= k]
    # compaction is order preserving, so v keeps its rank among the kept vertices
    return VertexRootedGraph(induced_subgraph(graph, kept), kept.index(v))


def _check_edge(graph: Graph, edge: Sequence[int]):
    e = normalize_edge(edge)
    if e not in graph.edges:
        raise GraphError(f"edge {e} is not in the graph")
    return e


def edge_distance(graph: Graph, e1: Sequence[int], e2: Sequence[int]) -> float:
    """Edges on a shortest path containing both e1 and e2.

    d(e, e) = 1 and adjacent edges are at distance 2. For distinct edges the
    closest pair of endpoints is joined by a shortest path that avoids the
    two far endpoints, so the answer is that distance plus the two edges.
    """
    a, b = _check_edge(graph, e1), _check_edge(graph, e2)
    if a == b:
        return 1
    gap = min(distances_from(graph, x)[y] for x in a for y in b)
    return gap + 2 if gap != INFINITY else INFINITY


def edge_distances_from(graph: Graph, edge: Sequence[int]) -> dict[tuple[int, int], float]:
    e = _check_edge(graph, edge)
    near = [min(ds) for ds in zip(*(distances_from(graph, x) for x in e))]
    return {f: (1 if f == e else min(near[f[0]], near[f[1]]) + 2) for f in graph.sorted_edges()}


def ball_edge(graph: Graph, edge: Sequence[int], k: int) -> EdgeRootedGraph:
    """G_k^e: formed by the edges within edge distance k of e, rooted at e."""
    if k < 1:
        raise PreconditionError(f"edge ball radius must be at least 1, got {k}")
    e = _check_edge(graph, edge)
    kept = [f for f, d in edge_distances_from(graph, e).items() if d <= k]
    sub, index = edge_subgraph(graph, kept)
    return EdgeRootedGraph(sub, (index[e[0]], index[e[1]]))
