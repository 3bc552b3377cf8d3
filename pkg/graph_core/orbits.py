from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Iterator, Sequence

from networkx.algorithms.isomorphism import GraphMatcher

from .canon import canon_key
from .errors import GraphError, SizeGuardError
from .graph import Edge, EdgeRootedGraph, Graph, VertexRootedGraph, normalize_edge

DEFAULT_MAX_AUT_VERTICES = 10


class ElementKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class OrbitPartition:
    kind: ElementKind
    blocks: tuple[tuple[Hashable, ...], ...]

    def _normalize(self, element):
        return normalize_edge(element) if self.kind is ElementKind.EDGE else element

    def block_of(self, element) -> tuple:
        element = self._normalize(element)
        for block in self.blocks:
            if element in block:
                return block
        raise GraphError(f"{self.kind.value} {element} is not in the partition")

    def size_of(self, element) -> int:
        return len(self.block_of(element))

    def similar(self, a, b) -> bool:
        return self._normalize(b) in self.block_of(a)

    @property
    def representatives(self) -> tuple:
        """The set U: the least element of every block."""
        return tuple(block[0] for block in self.blocks)


def _partition(kind: ElementKind, keyed: dict) -> OrbitPartition:
    blocks = sorted(tuple(sorted(block)) for block in keyed.values())
    return OrbitPartition(kind, tuple(blocks))


def vertex_orbits(graph: Graph) -> OrbitPartition:
    # u and v are similar iff the graph rooted at u is isomorphic to the graph rooted at v
    keyed = defaultdict(list)
    for v in range(graph.n):
        keyed[canon_key(VertexRootedGraph(graph, v))].append(v)
    return _partition(ElementKind.VERTEX, keyed)


def edge_orbits(graph: Graph) -> OrbitPartition:
    keyed = defaultdict(list)
    for e in graph.sorted_edges():
        keyed[canon_key(EdgeRootedGraph(graph, e))].append(e)
    return _partition(ElementKind.EDGE, keyed)


def orbit_of(graph: Graph, v: int) -> tuple[int, ...]:
    return vertex_orbits(graph).block_of(v)


def edge_orbit_of(graph: Graph, edge: Sequence[int]) -> tuple[Edge, ...]:
    return edge_orbits(graph).block_of(edge)


def iter_automorphisms(graph: Graph) -> Iterator[tuple[int, ...]]:
    """VF2 isomorphisms of the graph onto itself."""
    g = graph.as_networkx
    for mapping in GraphMatcher(g, g).isomorphisms_iter():
        yield tuple(mapping[v] for v in range(graph.n))


def automorphism_group(graph: Graph, max_vertices: int = DEFAULT_MAX_AUT_VERTICES) -> list[tuple[int, ...]]:
    """Every automorphism as a tuple p with p[v] the image of v."""
    if graph.n > max_vertices:
        raise SizeGuardError(
            f"refusing to list automorphisms of a graph on {graph.n} vertices (guard is {max_vertices}); "
            "use vertex_orbits / edge_orbits instead"
        )
    return list(iter_automorphisms(graph))
