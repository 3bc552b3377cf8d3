"""Searching catalogs for pseudo-similar pairs and checking them against the worked examples.

Every reported pair is checked twice: once by the card grouping in
deck_kit.pseudo and once more by recheck, which recomputes both cards and
both orbits from scratch.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from deck_kit.deck import DeckKind, deck
from deck_kit.pseudo import is_pseudo_similar_pair, pseudo_similar_edges, pseudo_similar_vertices
from graph_core.canon import canon_key
from graph_core.errors import DeckInconsistencyError, PreconditionError
from graph_core.graph import Graph, normalize_edge
from graph_core.metric import is_connected, radius
from identity_suite.identities import i, s
from profile_recon.balls import ball_edge, ball_vertex
from profile_recon.solver import reconstruct_s_profile

from .graph6 import write_graph6

logger = logging.getLogger(__name__)

VERTEX_CHECKS = ("rooted_count_table", "induced_path_counts", "vertex_balls_differ", "profile_structure")
EDGE_BALL_RADII = (2, 3, 4)
WIDE_EDGE_RADIUS = 4


@dataclass(frozen=True)
class WitnessReport:
    graph: Graph
    kind: DeckKind
    pair: tuple
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def graph6(self) -> str:
        return write_graph6(self.graph)

    def passes(self, names: Iterable[str] | None = None) -> bool:
        names = list(self.checks) if names is None else list(names)
        return all(self.checks.get(name, False) for name in names)

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "kind": self.kind.value,
            "pair": [list(x) if isinstance(x, tuple) else x for x in self.pair],
            "checks": dict(self.checks),
            "details": self.details,
        }


def recheck(report: WitnessReport) -> bool:
    """The definitional check again: isomorphic cards and distinct orbits."""
    a, b = report.pair
    return is_pseudo_similar_pair(report.graph, report.kind, a, b)


def _oriented(u: int, v: int):
    yield u, v
    yield v, u


def _rooted_count_table(graph: Graph, u: int, v: int) -> tuple[bool, dict]:
    """s(paw1), s(paw2), s(paw3) read 0/1, 1/0 and 1/1 at the pair, in one of its two orders."""
    at = {x: tuple(s(name, graph, x) for name in ("paw1", "paw2", "paw3")) for x in (u, v)}
    for a, b in _oriented(u, v):
        if at[a] == (0, 1, 1) and at[b] == (1, 0, 1):
            return True, {"values": at, "v": a}
    return False, {"values": at}


def _induced_path_counts(graph: Graph, u: int, v: int) -> tuple[bool, dict]:
    at = {x: (s("P4e", graph, x), i("P4e", graph, x)) for x in (u, v)}
    for a, b in _oriented(u, v):
        if at[a] == (3, 2) and at[b] == (3, 1):
            return True, {"values": at, "v": a}
    return False, {"values": at}


def _vertex_balls_differ(graph: Graph, u: int, v: int) -> bool:
    return canon_key(ball_vertex(graph, u, 2)) != canon_key(ball_vertex(graph, v, 2))


def _profile_structure(graph: Graph) -> tuple[bool, dict]:
    if not is_connected(graph):
        return False, {"radius": None}
    r = radius(graph)
    if r <= 2:
        return False, {"radius": r}
    try:
        _, trace = reconstruct_s_profile(deck(graph), 2)
    except DeckInconsistencyError as exc:
        logger.warning("S_2 reconstruction failed on %s: %s", write_graph6(graph), exc)
        return False, {"radius": r, "error": str(exc)}
    multiplicities = trace.multiplicities
    repeated = sorted(x for x in multiplicities if x)
    detail = {
        "radius": r,
        "candidates": len(trace.steps),
        "total": trace.mass,
        "prefix": multiplicities[:3],
    }
    ok = (
        len(trace.steps) == 14
        and trace.mass == 8
        and repeated == [1] * 6 + [2]
        and multiplicities[:3] == [1, 1, 0]
    )
    return ok, detail


def verify_example_patterns(graph: Graph, pair: Sequence[int]) -> WitnessReport:
    """Observe which of the worked-example patterns a pseudo-similar vertex pair shows."""
    u, v = pair
    if not is_pseudo_similar_pair(graph, DeckKind.VERTEX, u, v):
        raise PreconditionError(f"vertices {u} and {v} are not pseudo-similar")
    table, table_detail = _rooted_count_table(graph, u, v)
    p4, p4_detail = _induced_path_counts(graph, u, v)
    structure, structure_detail = _profile_structure(graph)
    checks = {
        "rooted_count_table": table,
        "induced_path_counts": p4,
        "vertex_balls_differ": _vertex_balls_differ(graph, u, v),
        "profile_structure": structure,
    }
    details = {"rooted_count_table": table_detail, "induced_path_counts": p4_detail, "profile_structure": structure_detail}
    return WitnessReport(graph, DeckKind.VERTEX, (u, v), checks, details)


def verify_edge_patterns(graph: Graph, pair: Sequence[Sequence[int]]) -> WitnessReport:
    a, b = (normalize_edge(e) for e in pair)
    if not is_pseudo_similar_pair(graph, DeckKind.EDGE, a, b):
        raise PreconditionError(f"edges {a} and {b} are not pseudo-similar")
    checks = {}
    for k in EDGE_BALL_RADII:
        checks[f"edge_balls_differ_k{k}"] = canon_key(ball_edge(graph, a, k)) != canon_key(ball_edge(graph, b, k))
    checks["wide_edge_balls"] = checks[f"edge_balls_differ_k{WIDE_EDGE_RADIUS}"]
    return WitnessReport(graph, DeckKind.EDGE, (a, b), checks)


def _witnesses_in(graph: Graph, kind: DeckKind, verify_patterns: bool) -> list[WitnessReport]:
    if kind is DeckKind.VERTEX:
        pairs = pseudo_similar_vertices(graph).pseudo_similar
        verify = verify_example_patterns
    else:
        pairs = pseudo_similar_edges(graph).pseudo_similar
        verify = verify_edge_patterns
    reports = []
    for pair in pairs:
        report = verify(graph, pair) if verify_patterns else WitnessReport(graph, kind, tuple(pair))
        if not recheck(report):
            # unreachable unless the orbit and card computations disagree
            raise PreconditionError(f"pair {pair} in {write_graph6(graph)} failed the second check")
        logger.debug("witness %s pair %s checks %s", report.graph6, pair, report.checks)
        reports.append(report)
    return reports


def _witnesses_job(args: tuple[Graph, DeckKind, bool]) -> list[WitnessReport]:
    return _witnesses_in(*args)


def search_pseudosimilar(
    catalog: Iterable[Graph],
    kind: DeckKind | str = DeckKind.VERTEX,
    verify_patterns: bool = True,
    jobs: int = 1,
) -> Iterator[WitnessReport]:
    """Every pseudo-similar pair in the catalog, sorted by graph6 string then pair."""
    kind = DeckKind(kind)
    graphs = list(catalog)
    work = [(g, kind, verify_patterns) for g in graphs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = [r for batch in pool.map(_witnesses_job, work, chunksize=32) for r in batch]
    else:
        found = [r for job in work for r in _witnesses_job(job)]
    logger.info("%d pseudo-similar %s pairs in %d graphs", len(found), kind.value, len(graphs))
    yield from sorted(found, key=lambda r: (r.graph6, r.pair))
