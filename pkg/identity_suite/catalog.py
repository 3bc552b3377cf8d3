"""The connected rooted graphs on at most four vertices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from graph_core.graph import Graph, VertexRootedGraph, make_graph
from graph_core.named import complete_graph, cycle_graph, diamond, path_graph, paw, star_graph


@dataclass(frozen=True)
class RootedCatalogEntry:
    name: str
    graph: VertexRootedGraph
    description: str


def _entry(name: str, graph: Graph, root: int, description: str) -> RootedCatalogEntry:
    return RootedCatalogEntry(name, VertexRootedGraph(graph, root), description)


@lru_cache(maxsize=None)
def catalog() -> tuple[RootedCatalogEntry, ...]:
    return (
        _entry("K1r", make_graph(1, []), 0, "single rooted vertex"),
        _entry("E1", complete_graph(2), 0, "K2 rooted at an end"),
        _entry("P3c", path_graph(3), 1, "P3 rooted at the centre"),
        _entry("P3e", path_graph(3), 0, "P3 rooted at an end"),
        _entry("K3r", complete_graph(3), 0, "rooted triangle"),
        _entry("K13c", star_graph(3), 0, "claw rooted at the centre"),
        _entry("K13l", star_graph(3), 1, "claw rooted at a leaf"),
        _entry("P4e", path_graph(4), 0, "P4 rooted at an end"),
        _entry("P4i", path_graph(4), 1, "P4 rooted at an interior vertex"),
        _entry("paw1", paw(), 3, "paw rooted at the pendant vertex"),
        _entry("paw2", paw(), 0, "paw rooted at a degree-2 vertex"),
        _entry("paw3", paw(), 2, "paw rooted at the degree-3 vertex"),
        _entry("C4r", cycle_graph(4), 0, "rooted 4-cycle"),
        _entry("dia2", diamond(), 2, "diamond rooted at a degree-2 vertex"),
        _entry("dia3", diamond(), 0, "diamond rooted at a degree-3 vertex"),
        _entry("K4r", complete_graph(4), 0, "rooted K4"),
    )


def entry(name: str) -> RootedCatalogEntry:
    for item in catalog():
        if item.name == name:
            return item
    raise KeyError(f"no catalog entry named {name!r}")


def rooted(name: str) -> VertexRootedGraph:
    return entry(name).graph
