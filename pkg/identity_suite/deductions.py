"""Which rooted counts at a deleted vertex the deck pins down, and which it cannot."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from counting.counts import Mode
from deck_kit.deck import Deck, DeckKind, deck_basics
from deck_kit.kelly import count_at_vertex_from_deck, deleted_vertex_degree
from deck_kit.pseudo import is_pseudo_similar_pair
from graph_core.errors import PreconditionError
from graph_core.graph import Graph, _check_vertex
from graph_core.named import complete_graph, cycle_graph, paw, path_graph, star_graph

from .identities import i, s

logger = logging.getLogger(__name__)

PAW_PAIR = "s(paw1)+s(paw2)"

# rows of the comparison table
COMPARED = ("paw1", "paw2", "paw3", "P4e")


def derive_rooted_counts_from_deck(d: Deck, card_index: int) -> dict[str, int]:
    """Rooted counts at the vertex v whose card is G - v, from the deck alone.

    Three-vertex entries need v(G) >= 4 and four-vertex entries need
    v(G) >= 5; on smaller decks only the entries that Kelly's argument
    reaches are returned. i(paw3) is never returned.
    """
    if d.kind is not DeckKind.VERTEX:
        raise PreconditionError("rooted counts need a vertex deck")
    n, _ = deck_basics(d)
    degree = deleted_vertex_degree(d, card_index)

    def at_v(pattern: Graph, mode: Mode = Mode.SUBGRAPH) -> int:
        return count_at_vertex_from_deck(pattern, d, card_index, mode)

    values = {"d_v": degree, "s(E1)": degree, "i(E1)": degree}
    if n < 4:
        logger.debug("deck of %d cards: only degree entries are available", n)
        return values

    triangles = at_v(complete_graph(3))
    s_p3c = comb(degree, 2)
    s_p3e = at_v(path_graph(3)) - s_p3c
    values.update({
        "s(P3c)": s_p3c,
        "i(P3c)": s_p3c - triangles,
        "s(P3e)": s_p3e,
        "i(P3e)": at_v(path_graph(3), Mode.INDUCED) - (s_p3c - triangles),
        "s(K3r)": triangles,
        "i(K3r)": triangles,
    })
    if n < 5:
        logger.debug("deck of %d cards: four-vertex entries need at least 5 cards", n)
        return values

    s_k13c = comb(degree, 3)
    s_paw3 = triangles * (degree - 2)
    s_p4i = s_p3e * (degree - 1) - 2 * triangles
    values.update({
        "s(K13c)": s_k13c,
        "s(K13l)": at_v(star_graph(3)) - s_k13c,
        "s(paw3)": s_paw3,
        PAW_PAIR: at_v(paw()) - s_paw3,
        "s(P4i)": s_p4i,
        "s(P4e)": at_v(path_graph(4)) - s_p4i,
        "s(C4r)": at_v(cycle_graph(4)),
        "i(C4r)": at_v(cycle_graph(4), Mode.INDUCED),
        "s(K4r)": at_v(complete_graph(4)),
        "i(K4r)": at_v(complete_graph(4)),
    })
    return values


def direct_rooted_counts(graph: Graph, v: int) -> dict[str, int]:
    """The same entries as derive_rooted_counts_from_deck, counted on G itself."""
    _check_vertex(graph, v)
    values = {"d_v": graph.degree(v), "s(E1)": s("E1", graph, v), "i(E1)": i("E1", graph, v)}
    names = ("P3c", "P3e", "K3r") if graph.n >= 4 else ()
    if graph.n >= 5:
        names += ("K13c", "K13l", "paw3", "P4i", "P4e", "C4r", "K4r")
    for name in names:
        values[f"s({name})"] = s(name, graph, v)
    for name in ("P3c", "P3e", "K3r", "C4r", "K4r"):
        if f"s({name})" in values:
            values[f"i({name})"] = i(name, graph, v)
    if graph.n >= 5:
        values[PAW_PAIR] = s("paw1", graph, v) + s("paw2", graph, v)
    return values


@dataclass(frozen=True)
class ComparisonRow:
    name: str
    mode: Mode
    at_u: int
    at_v: int

    @property
    def differs(self) -> bool:
        return self.at_u != self.at_v

    @property
    def label(self) -> str:
        return f"{'i' if self.mode is Mode.INDUCED else 's'}({self.name})"


@dataclass(frozen=True)
class NonReconstructibilityReport:
    graph: Graph
    u: int
    v: int
    rows: tuple[ComparisonRow, ...]

    @property
    def differing(self) -> list[str]:
        return [row.label for row in self.rows if row.differs]

    def to_dict(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "rows": [
                {"count": row.label, "u": row.at_u, "v": row.at_v, "differs": row.differs} for row in self.rows
            ],
        }


def nonreconstructibility_report(witness: Graph, u: int, v: int) -> NonReconstructibilityReport:
    """Rooted counts at a pseudo-similar pair: isomorphic cards, yet some counts differ."""
    _check_vertex(witness, u)
    _check_vertex(witness, v)
    if not is_pseudo_similar_pair(witness, DeckKind.VERTEX, u, v):
        raise PreconditionError(f"vertices {u} and {v} are not pseudo-similar")
    rows = []
    for name in COMPARED:
        for mode, count in ((Mode.SUBGRAPH, s), (Mode.INDUCED, i)):
            rows.append(ComparisonRow(name, mode, count(name, witness, u), count(name, witness, v)))
    return NonReconstructibilityReport(witness, u, v, tuple(rows))
