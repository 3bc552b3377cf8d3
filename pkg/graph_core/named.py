"""Small named graphs used throughout the catalog, the CLI and the tests."""

import networkx as nx

from .graph import Graph, from_networkx, make_graph


def path_graph(n: int) -> Graph:
    return from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
    return from_networkx(nx.cycle_graph(n))


def complete_graph(n: int) -> Graph:
    return from_networkx(nx.complete_graph(n))


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_networkx(nx.star_graph(leaves))


def paw() -> Graph:
    """Triangle 0-1-2 with the pendant vertex 3 on 2."""
    return make_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def diamond() -> Graph:
    """K4 minus the edge {2, 3}; vertices 0 and 1 have degree 3."""
    return make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return make_graph(offset, edges)
