from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable, Iterator

import networkx as nx

from graph_core.errors import Graph6Error
from graph_core.graph import Graph, from_networkx

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"


def strip_graph6_header(text: str) -> str:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    return s


def _size_field(s: str) -> tuple[int, int]:
    """(n, number of characters the size field takes)."""
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    field = s[1:4] if s[1:2] != "~" else s[2:8]
    width = 4 if s[1:2] != "~" else 8
    if len(s) < width:
        raise ValueError("truncated length header")
    n = 0
    for ch in field:
        n = (n << 6) | (ord(ch) - 63)
    return n, width


def parse_graph6(text: str, line_number: int | None = None) -> Graph:
    s = strip_graph6_header(text)
    if not s:
        raise Graph6Error("empty graph6 string", line_number)
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise Graph6Error(f"graph6 bytes must lie in 63..126: {s!r}", line_number)
    try:
        n, width = _size_field(s)
    except ValueError as exc:
        raise Graph6Error(f"malformed graph6 {s!r}: {exc}", line_number) from exc
    data = s[width:]
    bits = n * (n - 1) // 2
    if len(data) != (bits + 5) // 6:
        raise Graph6Error(f"length header says {n} vertices but {len(data)} data bytes follow", line_number)
    padding = 6 * len(data) - bits
    if data and (ord(data[-1]) - 63) & ((1 << padding) - 1):
        raise Graph6Error(f"nonzero padding bits in {s!r}", line_number)
    try:
        g = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise Graph6Error(f"malformed graph6 {s!r}: {exc}", line_number) from exc
    return from_networkx(g)


def write_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(graph.as_networkx, header=False).decode("ascii").strip()


def iter_graph6_file(path: str | Path) -> Iterator[tuple[int, Graph]]:
    """Yield (line number, graph) for every non-blank, non-comment line."""
    with open(path, "r", encoding="ascii") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            yield line_number, parse_graph6(line, line_number)


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    written = 0
    with open(path, "w", encoding="ascii") as handle:
        for graph in graphs:
            handle.write(write_graph6(graph) + "\n")
            written += 1
    logger.info("wrote %d graphs to %s", written, path)
    return written
