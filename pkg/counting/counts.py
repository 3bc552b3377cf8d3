from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from graph_core.canon import CanonKey, canon_key
from graph_core.errors import CountingError
from graph_core.graph import EdgeRootedGraph, Graph, VertexRootedGraph, _check_vertex, delete_vertex
from graph_core.orbits import edge_orbits, vertex_orbits

from .matcher import copies, count_copies

logger = logging.getLogger(__name__)


class Mode(str, Enum):
    SUBGRAPH = "subgraph"
    INDUCED = "induced"

    @property
    def induced(self) -> bool:
        return self is Mode.INDUCED


class Rooting(str, Enum):
    NONE = "none"
    ROOT_COINCIDENT = "root-coincident"
    ROOT_ANYWHERE = "root-anywhere"


@dataclass(frozen=True)
class CountReport:
    pattern: CanonKey
    host: CanonKey
    mode: Mode
    rooted: Rooting
    value: int
    vertex: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern.hex(),
            "host": self.host.hex(),
            "mode": self.mode.value,
            "rooted": self.rooted.value,
            "vertex": self.vertex,
            "value": self.value,
        }


def count(pattern: Graph, host: Graph, mode: Mode = Mode.SUBGRAPH) -> int:
    """s(F, G) or i(F, G)."""
    return count_copies(pattern, host, mode.induced)


def count_subgraphs(pattern: Graph, host: Graph) -> int:
    return count(pattern, host, Mode.SUBGRAPH)


def count_induced(pattern: Graph, host: Graph) -> int:
    return count(pattern, host, Mode.INDUCED)


def count_containing(pattern: Graph, host: Graph, v: int, mode: Mode = Mode.SUBGRAPH) -> int:
    """Copies of the pattern whose vertex set contains v, by direct enumeration."""
    _check_vertex(host, v)
    return sum(1 for vertices, _ in copies(pattern, host, mode.induced) if v in vertices)


def count_at_vertex(pattern: Graph, host: Graph, v: int, mode: Mode = Mode.SUBGRAPH) -> int:
    """s(F, G^v) = s(F, G) - s(F, G - v), checked against direct enumeration."""
    by_difference = count(pattern, host, mode) - count(pattern, delete_vertex(host, v), mode)
    direct = count_containing(pattern, host, v, mode)
    if by_difference != direct:
        raise CountingError(
            f"count through vertex {v} disagrees: difference gives {by_difference}, enumeration gives {direct}"
        )
    return direct


def count_root_coincident(pattern: VertexRootedGraph, host: VertexRootedGraph, mode: Mode = Mode.SUBGRAPH) -> int:
    """s(F^x, G^v): copies of F in G with the root x landing on v."""
    return count_copies(pattern.graph, host.graph, mode.induced, ((pattern.root, host.root),))


def orbit_decompose_count(pattern: Graph, host: VertexRootedGraph, mode: Mode = Mode.SUBGRAPH) -> dict[int, int]:
    """One root-coincident count per orbit representative of the pattern.

    The values sum to count_at_vertex(pattern, host.graph, host.root, mode).
    """
    decomposition = {
        u: count_root_coincident(VertexRootedGraph(pattern, u), host, mode)
        for u in vertex_orbits(pattern).representatives
    }
    total = count_at_vertex(pattern, host.graph, host.root, mode)
    if sum(decomposition.values()) != total:
        raise CountingError(f"orbit decomposition {decomposition} does not sum to {total}")
    return decomposition


def count_rooted_total(pattern: VertexRootedGraph, host: Graph, mode: Mode = Mode.SUBGRAPH) -> int:
    """s(F^x, G) = |Orbit_F(x)| * s(F, G)."""
    orbit_size = vertex_orbits(pattern.graph).size_of(pattern.root)
    return orbit_size * count(pattern.graph, host, mode)


def count_edge_root_coincident(pattern: EdgeRootedGraph, host: EdgeRootedGraph) -> int:
    """Copies of A in B whose root edge lands on the root edge of B (either orientation)."""
    (a, b), (c, d) = pattern.root_edge, host.root_edge
    found = copies(pattern.graph, host.graph, False, ((a, c), (b, d))) | copies(
        pattern.graph, host.graph, False, ((a, d), (b, c))
    )
    return len(found)


def count_edge_rooted_total(pattern: EdgeRootedGraph, host: Graph) -> int:
    """s(A^e, G) = |Orbit_A(e)| * s(A, G)."""
    orbit_size = edge_orbits(pattern.graph).size_of(pattern.root_edge)
    return orbit_size * count_subgraphs(pattern.graph, host)


def count_report(
    pattern: Graph | VertexRootedGraph,
    host: Graph,
    mode: Mode = Mode.SUBGRAPH,
    vertex: Optional[int] = None,
) -> CountReport:
    """Dispatch on the rooting of the request the way the CLI phrases it."""
    if isinstance(pattern, VertexRootedGraph):
        if vertex is None:
            value, rooted = count_rooted_total(pattern, host, mode), Rooting.ROOT_ANYWHERE
        else:
            value = count_root_coincident(pattern, VertexRootedGraph(host, vertex), mode)
            rooted = Rooting.ROOT_COINCIDENT
        key = canon_key(pattern)
    else:
        value = count(pattern, host, mode) if vertex is None else count_at_vertex(pattern, host, vertex, mode)
        rooted, key = Rooting.NONE, canon_key(pattern)
    logger.debug("count %s/%s at %s = %d", mode.value, rooted.value, vertex, value)
    return CountReport(key, canon_key(host), mode, rooted, value, vertex)
