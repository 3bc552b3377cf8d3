"""Canonical keys through nauty.

Roots are expressed as vertex colourings: a vertex-rooted graph puts its root
in a cell of its own, an edge-rooted graph puts both endpoints of the root edge
in one cell. The key is the kind tag, the order, the colour layout and nauty's
certificate of the coloured graph.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NewType, Union

import pynauty

from .graph import EdgeRootedGraph, Graph, VertexRootedGraph, relabel

CanonKey = NewType("CanonKey", bytes)

AnyGraph = Union[Graph, VertexRootedGraph, EdgeRootedGraph]

_PLAIN, _VERTEX_ROOTED, _EDGE_ROOTED = 0, 1, 2


def _nauty_graph(graph: Graph, initial: tuple[int, ...]) -> pynauty.Graph:
    adjacency: dict[int, list[int]] = {}
    for u, v in graph.sorted_edges():
        adjacency.setdefault(u, []).append(v)
    # root cell first
    cells = [{v for v in range(graph.n) if initial[v] == colour} for colour in (1, 0)]
    return pynauty.Graph(
        number_of_vertices=graph.n,
        directed=False,
        adjacency_dict=adjacency,
        vertex_coloring=[cell for cell in cells if cell],
    )


@lru_cache(maxsize=1 << 16)
def _canonical(graph: Graph, initial: tuple[int, ...]) -> tuple[bytes, tuple[int, ...]]:
    """nauty's certificate and the vertex -> canonical position map."""
    if graph.n == 0:
        return b"", ()
    g = _nauty_graph(graph, initial)
    order = pynauty.canon_label(g)
    positions = [0] * graph.n
    for position, v in enumerate(order):
        positions[v] = position
    return pynauty.certificate(g), tuple(positions)


def _encode(tag: int, graph: Graph, initial: tuple[int, ...], certificate: bytes) -> CanonKey:
    header = bytes([tag]) + graph.n.to_bytes(2, "big") + bytes(sorted(initial))
    return CanonKey(header + certificate)


def _initial_colors(x: AnyGraph) -> tuple[int, Graph, tuple[int, ...]]:
    if isinstance(x, Graph):
        return _PLAIN, x, (0,) * x.n
    if isinstance(x, VertexRootedGraph):
        return _VERTEX_ROOTED, x.graph, tuple(int(v == x.root) for v in range(x.graph.n))
    if isinstance(x, EdgeRootedGraph):
        # Both endpoints share one colour: the root edge is the only edge inside that class.
        return _EDGE_ROOTED, x.graph, tuple(int(v in x.root_edge) for v in range(x.graph.n))
    raise TypeError(f"cannot canonicalize {type(x).__name__}")


def canon_key(x: AnyGraph) -> CanonKey:
    tag, graph, initial = _initial_colors(x)
    certificate, _ = _canonical(graph, initial)
    return _encode(tag, graph, initial, certificate)


def canonical_labeling(x: AnyGraph) -> tuple[int, ...]:
    """Map vertex -> canonical position."""
    _, graph, initial = _initial_colors(x)
    return _canonical(graph, initial)[1]


def canonical_form(x: AnyGraph) -> AnyGraph:
    """The relabeled copy of x in canonical order; isomorphic inputs give equal outputs."""
    labeling = canonical_labeling(x)
    if isinstance(x, Graph):
        return relabel(x, labeling)
    if isinstance(x, VertexRootedGraph):
        return VertexRootedGraph(relabel(x.graph, labeling), labeling[x.root])
    u, v = x.root_edge
    return EdgeRootedGraph(relabel(x.graph, labeling), (labeling[u], labeling[v]))


def is_isomorphic(x: AnyGraph, y: AnyGraph) -> bool:
    return type(x) is type(y) and canon_key(x) == canon_key(y)
