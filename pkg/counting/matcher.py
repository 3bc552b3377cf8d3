"""Copy enumeration on top of networkx's VF2 matcher.

A copy of a pattern F in a host G is a sub-structure (vertex subset plus edge
subset) isomorphic to F. It is counted once however many embeddings realize it,
so every embedding is reduced to the pair of occupied vertex and edge sets.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from graph_core.graph import Graph, normalize_edge

Copy = tuple[frozenset[int], frozenset[tuple[int, int]]]

Pins = tuple[tuple[int, int], ...]


def _pinned(graph: Graph, labels: Mapping[int, int]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from((v, {"pin": labels.get(v)}) for v in range(graph.n))
    g.add_edges_from(graph.edges)
    return g


def _same_pin(host_attrs: dict, pattern_attrs: dict) -> bool:
    return host_attrs["pin"] == pattern_attrs["pin"]


def iter_embeddings(pattern: Graph, host: Graph, *, induced: bool, pins: Pins = ()) -> Iterator[dict[int, int]]:
    """Yield injective maps pattern -> host; pins force pattern vertex p onto host vertex h."""
    if pattern.n > host.n or pattern.m > host.m:
        return
    if pins:
        matcher = GraphMatcher(
            _pinned(host, {h: i for i, (_, h) in enumerate(pins)}),
            _pinned(pattern, {p: i for i, (p, _) in enumerate(pins)}),
            node_match=_same_pin,
        )
    else:
        matcher = GraphMatcher(host.as_networkx, pattern.as_networkx)
    found = matcher.subgraph_isomorphisms_iter() if induced else matcher.subgraph_monomorphisms_iter()
    for host_to_pattern in found:
        yield {p: h for h, p in host_to_pattern.items()}


def _copy(pattern: Graph, embedding: dict[int, int]) -> Copy:
    return (
        frozenset(embedding.values()),
        frozenset(normalize_edge((embedding[u], embedding[v])) for u, v in pattern.edges),
    )


@lru_cache(maxsize=1 << 17)
def copies(pattern: Graph, host: Graph, induced: bool, pins: Pins = ()) -> frozenset[Copy]:
    return frozenset(_copy(pattern, e) for e in iter_embeddings(pattern, host, induced=induced, pins=pins))


def count_copies(pattern: Graph, host: Graph, induced: bool, pins: Pins = ()) -> int:
    if pattern.n == 0:
        return 1
    return len(copies(pattern, host, induced, pins))
