"""Rendering command results as text or JSON lines."""

from __future__ import annotations

import json
import sys
from contextlib import contextmanager
from typing import Iterable, Iterator, TextIO

from catalog_search.graph6 import write_graph6
from counting.counts import CountReport, Mode
from profile_recon.profiles import BallProfile
from profile_recon.solver import SolveTrace

from .run_config import RunConfig


@contextmanager
def output_stream(cfg: RunConfig, suffix: str = "") -> Iterator[TextIO]:
    if cfg.output:
        with open(cfg.output + suffix, "w", encoding="utf-8") as handle:
            yield handle
    else:
        yield sys.stdout


def emit(cfg: RunConfig, text_lines: Iterable[str], payloads: Iterable[dict], suffix: str = "") -> None:
    """Write text lines or one JSON object per line, depending on --format."""
    with output_stream(cfg, suffix) as out:
        if cfg.output_format == "json":
            for payload in payloads:
                out.write(json.dumps(payload, sort_keys=True, default=str) + "\n")
        else:
            for line in text_lines:
                out.write(line + "\n")


def count_line(report: CountReport) -> str:
    letter = "i" if report.mode is Mode.INDUCED else "s"
    where = "" if report.vertex is None else f" at vertex {report.vertex}"
    return f"{letter} ({report.rooted.value}){where} = {report.value}"


def profile_lines(profile: BallProfile) -> list[str]:
    lines = [f"# {profile.kind.value} balls, k={profile.k}, total {profile.total}"]
    for entry in profile.entries:
        ball = entry.ball
        root = ball.root if hasattr(ball, "root") else ball.root_edge
        lines.append(f"{write_graph6(ball.graph)} root={root} ×{entry.multiplicity}")
    return lines


def trace_lines(trace: SolveTrace) -> list[str]:
    lines = [f"# solve trace, {len(trace.steps)} candidates"]
    for index, step in enumerate(trace.steps, start=1):
        subtracted = " ".join(f"-{t.coefficient}*n{t.index + 1}" for t in step.terms)
        lines.append(
            f"{index:3d}  {write_graph6(step.ball.graph):<12} e={step.edges:<3d} "
            f"lhs={step.lhs} {subtracted} -> n={step.multiplicity}".rstrip()
        )
    return lines


def summary_lines(summary: dict) -> list[str]:
    lines = [f"{summary['suite']}: {summary['checked']} graphs, {summary['failures']} failures"]
    first = summary.get("first_counterexample")
    if first:
        lines.append(f"first counterexample: {first['graph6']} {first['locus']}")
    if "witnesses" in summary:
        lines.append(f"{summary['witnesses']} witnesses, {summary['matched']} matching every check")
    return lines
