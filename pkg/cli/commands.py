from __future__ import annotations

import json
import logging
from pathlib import Path

from catalog_search.graph6 import iter_graph6_file, parse_graph6
from counting.counts import count_report
from deck_kit.deck import DeckKind, deck, edge_deck
from deck_kit.serialize import deck_to_json, deck_to_text, read_deck, write_deck
from graph_core.errors import DeckInconsistencyError, Graph6Error, PreconditionError
from graph_core.graph import Graph, VertexRootedGraph
from graph_core.metric import is_connected, radius
from graph_core.orbits import DEFAULT_MAX_AUT_VERTICES, automorphism_group
from profile_recon.profiles import profile_to_json, s_profile, t_profile
from profile_recon.solver import reconstruct_s_profile, reconstruct_t_profile

from .reports import count_line, emit, output_stream, profile_lines, summary_lines, trace_lines
from .run_config import RunConfig
from .sweeps import run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INCONSISTENT = 2


def read_graph(argument: str) -> Graph:
    """A graph6 file (its first graph) or a literal graph6 string."""
    if Path(argument).is_file():
        for _, graph in iter_graph6_file(argument):
            return graph
        raise Graph6Error(f"{argument} contains no graph")
    return parse_graph6(argument)


def _input(cfg: RunConfig, position: int, what: str) -> str:
    if len(cfg.inputs) <= position:
        raise PreconditionError(f"missing {what}")
    return cfg.inputs[position]


def cmd_deck(cfg: RunConfig) -> int:
    graph = read_graph(_input(cfg, 0, "input graph"))
    kind = cfg.kind or DeckKind.VERTEX
    d = deck(graph) if kind is DeckKind.VERTEX else edge_deck(graph)
    if cfg.output:
        write_deck(cfg.output, d, cfg.output_format)
        logger.info("wrote %s deck of %d cards to %s", kind.value, len(d), cfg.output)
        return EXIT_OK
    lines = deck_to_text(d).splitlines()
    report = deck_to_json(d)
    guard = cfg.settings.get("max_automorphism_vertices", DEFAULT_MAX_AUT_VERTICES)
    if graph.n <= guard:
        order = len(automorphism_group(graph, guard))
        lines.append(f"# automorphism group order {order}")
        report["automorphism_order"] = order
    emit(cfg, lines, [report])
    return EXIT_OK


def cmd_count(cfg: RunConfig) -> int:
    pattern = read_graph(_input(cfg, 0, "pattern graph"))
    host = read_graph(_input(cfg, 1, "host graph"))
    root = cfg.options.get("root")
    report = count_report(
        VertexRootedGraph(pattern, root) if root is not None else pattern,
        host,
        cfg.mode,
        cfg.options.get("vertex"),
    )
    emit(cfg, [count_line(report)], [report.to_dict()])
    return EXIT_OK


def _write_json(cfg: RunConfig, suffix: str, payload: dict) -> None:
    with output_stream(cfg, suffix) as out:
        json.dump(payload, out, indent=2 if cfg.output else None, sort_keys=True)
        out.write("\n")


def cmd_reconstruct(cfg: RunConfig) -> int:
    d = read_deck(_input(cfg, 0, "deck file"), cfg.kind)
    truth = None
    if cfg.verify:
        if not cfg.options.get("graph"):
            raise PreconditionError("--verify needs the ground-truth graph (--graph)")
        truth = read_graph(cfg.options["graph"])
        if not is_connected(truth) or radius(truth) <= cfg.k:
            logger.warning(
                "precondition fails: radius %s is not above k=%d, the reconstructed profile is not trusted",
                radius(truth), cfg.k,
            )
            emit(cfg, ["verdict: precondition-failed"], [{"verdict": "precondition-failed"}], ".verdict")
            return EXIT_INCONSISTENT

    solve = reconstruct_s_profile if d.kind is DeckKind.VERTEX else reconstruct_t_profile
    try:
        profile, trace = solve(d, cfg.k, jobs=cfg.jobs)
    except DeckInconsistencyError as exc:
        logger.error("%s", exc)
        if exc.trace is not None:
            _write_json(cfg, ".trace.json", exc.trace.to_json())
        return EXIT_INCONSISTENT

    if cfg.output_format == "json":
        _write_json(cfg, ".profile.json", profile_to_json(profile))
        _write_json(cfg, ".trace.json", trace.to_json())
    else:
        emit(cfg, profile_lines(profile), [], ".profile.txt")
        emit(cfg, trace_lines(trace), [], ".trace.txt")

    if truth is not None:
        direct = s_profile(truth, cfg.k) if d.kind is DeckKind.VERTEX else t_profile(truth, cfg.k)
        verdict = "equal" if direct.as_counter() == profile.as_counter() else "different"
        if cfg.output_format == "json":
            _write_json(cfg, ".direct.json", profile_to_json(direct))
        emit(cfg, [f"verdict: {verdict}"], [{"verdict": verdict}], ".verdict")
        if verdict != "equal":
            return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    summary = run_suite(cfg)
    witnesses = summary.witnesses or []
    text = [f"{w['graph6']} {w['pair']} {w['checks']}" for w in witnesses] + summary_lines(summary.to_dict())
    emit(cfg, text, [*witnesses, summary.to_dict()])
    if summary.failures:
        return EXIT_INCONSISTENT
    if summary.witnesses is not None and cfg.verify and not summary.matched:
        logger.warning("no witness matched every check")
        return EXIT_INCONSISTENT
    return EXIT_OK
