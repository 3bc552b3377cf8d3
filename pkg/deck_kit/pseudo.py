from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from graph_core.canon import canon_key
from graph_core.graph import Graph, delete_edge, delete_vertex
from graph_core.orbits import edge_orbits, vertex_orbits

from .deck import DeckKind


class PairFlag(str, Enum):
    SIMILAR = "similar"
    PSEUDO_SIMILAR = "pseudo-similar"


@dataclass(frozen=True)
class PairEntry:
    pair: tuple
    flag: PairFlag


@dataclass(frozen=True)
class PseudoSimilarReport:
    """Every pair of elements with isomorphic cards, split by orbit membership."""

    kind: DeckKind
    pairs: tuple[PairEntry, ...]

    @property
    def pseudo_similar(self) -> list[tuple]:
        return [entry.pair for entry in self.pairs if entry.flag is PairFlag.PSEUDO_SIMILAR]

    @property
    def similar(self) -> list[tuple]:
        return [entry.pair for entry in self.pairs if entry.flag is PairFlag.SIMILAR]


def _report(kind: DeckKind, elements, card_of, orbits) -> PseudoSimilarReport:
    by_card = defaultdict(list)
    for element in elements:
        by_card[canon_key(card_of(element))].append(element)
    pairs = []
    for group in by_card.values():
        for a, b in combinations(sorted(group), 2):
            flag = PairFlag.SIMILAR if orbits.similar(a, b) else PairFlag.PSEUDO_SIMILAR
            pairs.append(PairEntry((a, b), flag))
    return PseudoSimilarReport(kind, tuple(sorted(pairs, key=lambda p: p.pair)))


def pseudo_similar_vertices(graph: Graph) -> PseudoSimilarReport:
    return _report(DeckKind.VERTEX, range(graph.n), lambda v: delete_vertex(graph, v), vertex_orbits(graph))


def pseudo_similar_edges(graph: Graph) -> PseudoSimilarReport:
    return _report(DeckKind.EDGE, graph.sorted_edges(), lambda e: delete_edge(graph, e), edge_orbits(graph))


def is_pseudo_similar_pair(graph: Graph, kind: DeckKind, a, b) -> bool:
    """Definitional check: isomorphic cards and distinct orbits."""
    if DeckKind(kind) is DeckKind.VERTEX:
        cards_match = canon_key(delete_vertex(graph, a)) == canon_key(delete_vertex(graph, b))
        return cards_match and not vertex_orbits(graph).similar(a, b)
    cards_match = canon_key(delete_edge(graph, a)) == canon_key(delete_edge(graph, b))
    return cards_match and not edge_orbits(graph).similar(a, b)
