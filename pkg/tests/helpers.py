"""Brute-force oracles and hypothesis strategies shared by the tests.

Nothing here touches canon keys or the VF2 matcher, so agreement with the
package is an independent check.
"""

from itertools import combinations, permutations

import networkx as nx
from hypothesis import strategies as st

from graph_core.graph import EdgeRootedGraph, Graph, VertexRootedGraph, from_networkx, make_graph, normalize_edge


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, keep in zip(pairs, present) if keep])


@st.composite
def vertex_rooted(draw, min_n=1, max_n=6):
    g = draw(graphs(min_n=max(min_n, 1), max_n=max_n))
    return VertexRootedGraph(g, draw(st.integers(0, g.n - 1)))


def _maps_edges(perm, edges, target) -> bool:
    return all(normalize_edge((perm[u], perm[v])) in target for u, v in edges)


def brute_isomorphic(x, y) -> bool:
    """Try every bijection; roots must go to roots."""
    if type(x) is not type(y):
        return False
    gx = x if isinstance(x, Graph) else x.graph
    gy = y if isinstance(y, Graph) else y.graph
    if gx.n != gy.n or gx.m != gy.m:
        return False
    for perm in permutations(range(gy.n)):
        if isinstance(x, VertexRootedGraph) and perm[x.root] != y.root:
            continue
        if isinstance(x, EdgeRootedGraph):
            a, b = x.root_edge
            if normalize_edge((perm[a], perm[b])) != y.root_edge:
                continue
        if _maps_edges(perm, gx.edges, gy.edges):
            return True
    return False


def brute_copies(pattern: Graph, host: Graph, induced: bool, pins=()) -> set:
    """Every (vertex set, edge set) of the host forming a copy of the pattern.

    pins is a sequence of (pattern vertex, host vertex) pairs the copy must realize.
    """
    found = set()
    for vertices in combinations(range(host.n), pattern.n):
        inner = [e for e in host.sorted_edges() if e[0] in vertices and e[1] in vertices]
        if induced:
            choices = [tuple(inner)] if len(inner) == pattern.m else []
        else:
            choices = combinations(inner, pattern.m)
        for edges in choices:
            edge_set = frozenset(edges)
            for image in permutations(vertices):
                if any(image[p] != h for p, h in pins):
                    continue
                if _maps_edges(image, pattern.edges, edge_set):
                    found.add((frozenset(vertices), edge_set))
                    break
    return found


def brute_count(pattern: Graph, host: Graph, induced: bool = False, pins=()) -> int:
    if pattern.n == 0:
        return 1
    return len(brute_copies(pattern, host, induced, pins))


def brute_edge_rooted(pattern: EdgeRootedGraph, host: EdgeRootedGraph) -> int:
    (a, b), (c, d) = pattern.root_edge, host.root_edge
    return len(
        brute_copies(pattern.graph, host.graph, False, ((a, c), (b, d)))
        | brute_copies(pattern.graph, host.graph, False, ((a, d), (b, c)))
    )


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield make_graph(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])


def brute_automorphisms(graph: Graph) -> set:
    return {perm for perm in permutations(range(graph.n)) if _maps_edges(perm, graph.edges, graph.edges)}


def orbit_representatives(graph: Graph, group) -> tuple[list, list]:
    """Least vertex and least edge of every orbit under the given permutations."""
    vertices = sorted({min(p[v] for p in group) for v in range(graph.n)})
    edges = sorted({min(normalize_edge((p[a], p[b])) for p in group) for a, b in graph.edges})
    return vertices, edges


def atlas(n: int) -> list[Graph]:
    """One graph per isomorphism class on n <= 7 vertices, from networkx's atlas."""
    return [from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
