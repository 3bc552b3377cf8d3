"""Small-graph catalogs: generated, read from graph6 files, or taken from the networkx atlas."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Optional

import networkx as nx

from graph_core.canon import CanonKey, canon_key, canonical_form
from graph_core.errors import GraphError, SizeGuardError
from graph_core.graph import Graph, from_networkx, make_graph
from graph_core.metric import is_connected

from .graph6 import iter_graph6_file, write_graph6_file

logger = logging.getLogger(__name__)

DEFAULT_MAX_GENERATED_ORDER = 8
MAX_LABELED_ORDER = 6
MAX_ATLAS_ORDER = 7


class CatalogSource(str, Enum):
    GENERATED = "generated"
    FILE = "file"
    ATLAS = "atlas"


class Method(str, Enum):
    EXTEND = "extend"
    LABELED = "labeled"


@dataclass(frozen=True)
class GraphCatalog:
    source: CatalogSource
    n: Optional[int]
    connected_only: bool
    graphs: tuple[Graph, ...]
    path: Optional[str] = None

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    def describe(self) -> str:
        order = f"n={self.n}" if self.n is not None else "mixed orders"
        kind = "connected" if self.connected_only else "all"
        origin = self.path or self.source.value
        return f"{len(self)} {kind} graphs, {order}, from {origin}"


def catalog_path(catalog_dir: str | Path, n: int, connected_only: bool) -> Path:
    """Conventional file name: graph{n}c.g6 for connected graphs, graph{n}.g6 otherwise."""
    return Path(catalog_dir) / f"graph{n}{'c' if connected_only else ''}.g6"


def _extend(graph: Graph, neighbours: Iterable[int]) -> Graph:
    new = graph.n
    return Graph(new + 1, graph.edges | frozenset((u, new) for u in neighbours))


def _subsets(k: int, nonempty: bool) -> Iterator[tuple[int, ...]]:
    for size in range(1 if nonempty else 0, k + 1):
        yield from combinations(range(k), size)


def _by_extension(n: int, connected_only: bool) -> list[Graph]:
    # a connected graph always has a vertex whose removal leaves it connected
    level: dict[CanonKey, Graph] = {canon_key(Graph(0, frozenset())): Graph(0, frozenset())}
    for k in range(n):
        following: dict[CanonKey, Graph] = {}
        for graph in level.values():
            for neighbours in _subsets(k, nonempty=connected_only and k > 0):
                extended = _extend(graph, neighbours)
                following.setdefault(canon_key(extended), extended)
        logger.debug("order %d: %d representatives", k + 1, len(following))
        level = following
    return list(level.values())


def _by_labeled_filter(n: int) -> list[Graph]:
    pairs = list(combinations(range(n), 2))
    kept = []
    for mask in range(1 << len(pairs)):
        graph = make_graph(n, (pairs[b] for b in range(len(pairs)) if mask >> b & 1))
        if canonical_form(graph) == graph:
            kept.append(graph)
    return kept


def _sorted_canonical(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    return tuple(sorted((canonical_form(g) for g in graphs), key=canon_key))


def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    method: Method | str = Method.EXTEND,
    max_order: int = DEFAULT_MAX_GENERATED_ORDER,
) -> GraphCatalog:
    """One canonical representative per isomorphism class of graphs on n vertices."""
    if n < 0:
        raise GraphError(f"order must be non-negative, got {n}")
    method = Method(method)
    if n > max_order:
        raise SizeGuardError(
            f"built-in generation stops at n={max_order}; ingest a graph6 catalog for n={n} instead (--catalog)"
        )
    if method is Method.LABELED:
        if n > MAX_LABELED_ORDER:
            raise SizeGuardError(f"labeled filtering is limited to n <= {MAX_LABELED_ORDER}, got {n}")
        graphs = _by_labeled_filter(n)
    else:
        graphs = _by_extension(n, connected_only)
    if connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    catalog = GraphCatalog(CatalogSource.GENERATED, n, connected_only, _sorted_canonical(graphs))
    logger.info("generated %s", catalog.describe())
    return catalog


def load_catalog(path: str | Path, connected_only: bool = False) -> GraphCatalog:
    """Read a graph6 file, keeping the first graph of every isomorphism class in file labeling."""
    seen: set[CanonKey] = set()
    graphs: list[Graph] = []
    duplicates = 0
    for _, graph in iter_graph6_file(path):
        if connected_only and not is_connected(graph):
            continue
        key = canon_key(graph)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        graphs.append(graph)
    if duplicates:
        logger.warning("%s: dropped %d isomorphic duplicates", path, duplicates)
    orders = {g.n for g in graphs}
    n = orders.pop() if len(orders) == 1 else None
    catalog = GraphCatalog(CatalogSource.FILE, n, connected_only, tuple(graphs), str(path))
    logger.info("loaded %s", catalog.describe())
    return catalog


def write_catalog(path: str | Path, graphs: Iterable[Graph]) -> int:
    return write_graph6_file(path, graphs)


def atlas_graphs(n: int, connected_only: bool = False) -> GraphCatalog:
    """The networkx atlas entries on n vertices, an independently built catalog."""
    if not 0 <= n <= MAX_ATLAS_ORDER:
        raise SizeGuardError(f"the graph atlas covers 0..{MAX_ATLAS_ORDER} vertices, got {n}")
    graphs = [from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    if connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    return GraphCatalog(CatalogSource.ATLAS, n, connected_only, _sorted_canonical(graphs))
