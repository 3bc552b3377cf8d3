"""Catalog sweeps: every check runs per graph, so graphs are farmed out to worker processes."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from tqdm import tqdm

from catalog_search import get_catalog, load_catalog
from catalog_search.graph6 import write_graph6
from catalog_search.witness import VERTEX_CHECKS, search_pseudosimilar
from deck_kit.deck import DeckKind, deck, edge_deck
from graph_core.errors import DeckInconsistencyError
from graph_core.graph import Graph
from graph_core.metric import is_connected, radius
from identity_suite.identities import eval_all
from profile_recon.profiles import s_profile, t_profile
from profile_recon.radius import RadiusSignal, radius_from_edge_deck
from profile_recon.solver import reconstruct_s_profile, reconstruct_t_profile

from .run_config import RunConfig

logger = logging.getLogger(__name__)

SUITES = ("identities", "roundtrip", "radius", "search")


@dataclass
class SweepSummary:
    suite: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    witnesses: Optional[list[dict]] = None
    matched: int = 0

    def to_dict(self) -> dict:
        data = {
            "suite": self.suite,
            "checked": self.checked,
            "failures": len(self.failures),
            "first_counterexample": self.failures[0] if self.failures else None,
        }
        if self.witnesses is not None:
            data["witnesses"] = len(self.witnesses)
            data["matched"] = self.matched
        return data


def _failure(graph: Graph, locus: str, **detail) -> dict:
    return {"graph6": write_graph6(graph), "locus": locus, **detail}


def check_identities(graph: Graph) -> list[dict]:
    return [
        _failure(graph, f"{record.id} at vertex {record.vertex}", values=list(record.values))
        for record in eval_all(graph)
        if not record.holds
    ]


def _roundtrip(graph: Graph, kind: DeckKind, k: int) -> Optional[dict]:
    locus = f"{kind.value} k={k}"
    try:
        if kind is DeckKind.VERTEX:
            profile, trace = reconstruct_s_profile(deck(graph), k)
            expected, mass = s_profile(graph, k), graph.n
        else:
            profile, trace = reconstruct_t_profile(edge_deck(graph), k)
            expected, mass = t_profile(graph, k), graph.m
    except DeckInconsistencyError as exc:
        return _failure(graph, locus, error=str(exc))
    if profile.as_counter() != expected.as_counter():
        return _failure(graph, locus, error="reconstructed profile differs from the direct one")
    if trace.mass != mass or any(step.diagonal != 1 for step in trace.steps):
        return _failure(graph, locus, error="trace mass or diagonal is off")
    return None


def check_roundtrip(graph: Graph, kinds: Sequence[DeckKind] = (DeckKind.VERTEX, DeckKind.EDGE)) -> list[dict]:
    if graph.n < 3 or not is_connected(graph):
        return []
    r = radius(graph)
    failures = []
    for kind in kinds:
        first = 1 if kind is DeckKind.VERTEX else 2
        for k in range(first, r):
            failure = _roundtrip(graph, kind, k)
            if failure:
                failures.append(failure)
    return failures


def check_radius(graph: Graph) -> list[dict]:
    if not is_connected(graph):
        return []
    got = radius_from_edge_deck(edge_deck(graph))
    tree = graph.m == graph.n - 1
    expected = RadiusSignal.TREE_OR_DISCONNECTED if tree else radius(graph)
    if got != expected:
        return [_failure(graph, "radius", expected=str(expected), got=str(got))]
    return []


def _vertex_roundtrip(graph: Graph) -> list[dict]:
    return check_roundtrip(graph, (DeckKind.VERTEX,))


def _edge_roundtrip(graph: Graph) -> list[dict]:
    return check_roundtrip(graph, (DeckKind.EDGE,))


def _workers(kind: Optional[DeckKind]) -> dict[str, Callable[[Graph], list[dict]]]:
    roundtrip = {None: check_roundtrip, DeckKind.VERTEX: _vertex_roundtrip, DeckKind.EDGE: _edge_roundtrip}[kind]
    return {"identities": check_identities, "roundtrip": roundtrip, "radius": check_radius}


def _run(worker: Callable[[Graph], list[dict]], graphs: list[Graph], jobs: int, desc: str) -> list[dict]:
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(tqdm(pool.map(worker, graphs, chunksize=16), total=len(graphs), desc=desc))
    else:
        results = [worker(g) for g in tqdm(graphs, desc=desc)]
    return [failure for batch in results for failure in batch]


def _graphs(cfg: RunConfig, connected_only: bool) -> list[Graph]:
    if cfg.catalog:
        return list(load_catalog(cfg.catalog, connected_only))
    low, high = cfg.options.get("min_n", 1), cfg.options.get("max_n", 6)
    graphs: list[Graph] = []
    for n in range(low, high + 1):
        graphs.extend(get_catalog(cfg.settings, n, connected_only))
    return graphs


def run_suite(cfg: RunConfig) -> SweepSummary:
    suite = cfg.options.get("suite", "identities")
    if suite not in SUITES:
        raise ValueError(f"Unsupported sweep suite: {suite}")
    connected_only = suite != "identities" or cfg.options.get("connected", False)
    graphs = _graphs(cfg, connected_only)
    summary = SweepSummary(suite, checked=len(graphs))
    if suite == "search":
        kind = cfg.kind or DeckKind.VERTEX
        required = VERTEX_CHECKS if kind is DeckKind.VERTEX else ("wide_edge_balls",)
        reports = list(search_pseudosimilar(graphs, kind, verify_patterns=True, jobs=cfg.jobs))
        summary.witnesses = [report.to_dict() for report in reports]
        summary.matched = sum(report.passes(required) for report in reports)
    else:
        summary.failures = _run(_workers(cfg.kind)[suite], graphs, cfg.jobs, suite)
    logger.info("%s sweep over %d graphs: %d failures", suite, len(graphs), len(summary.failures))
    return summary
