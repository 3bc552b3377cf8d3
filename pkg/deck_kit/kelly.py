"""Kelly-style counting from a deck, with the classic degree consequences."""

from __future__ import annotations

import logging
from collections import Counter

from counting.counts import Mode, count
from graph_core.errors import DeckInconsistencyError, PreconditionError
from graph_core.graph import Graph

from .deck import Deck, DeckKind, deck_basics

logger = logging.getLogger(__name__)


def kelly_count_from_deck(pattern: Graph, d: Deck, mode: Mode = Mode.SUBGRAPH) -> int:
    """s(F, G) or i(F, G) for the unknown G behind the deck.

    Vertex deck: every copy on v(F) vertices misses exactly v(G) - v(F) cards.
    Edge deck: every copy with e(F) edges survives in exactly e(G) - e(F) cards.
    """
    n, m = deck_basics(d)
    if d.kind is DeckKind.VERTEX:
        if pattern.n >= n:
            raise PreconditionError(f"pattern on {pattern.n} vertices needs a deck of a graph on more vertices, got {n}")
        divisor = n - pattern.n
    else:
        if mode is Mode.INDUCED:
            raise PreconditionError("induced counts are not available from an edge deck")
        if pattern.m >= m:
            raise PreconditionError(f"pattern with {pattern.m} edges needs a graph with more edges, got {m}")
        divisor = m - pattern.m
    total = sum(entry.multiplicity * count(pattern, entry.card, mode) for entry in d.entries)
    if total % divisor:
        raise DeckInconsistencyError(f"card counts sum to {total}, not divisible by {divisor}")
    return total // divisor


def count_at_vertex_from_deck(pattern: Graph, d: Deck, card_index: int, mode: Mode = Mode.SUBGRAPH) -> int:
    """s(F, G^v) = s(F, G) - s(F, G - v) for the vertex v whose card is given."""
    if d.kind is not DeckKind.VERTEX:
        raise PreconditionError("count at a deleted vertex needs a vertex deck")
    return kelly_count_from_deck(pattern, d, mode) - count(pattern, d.card(card_index), mode)


def deleted_vertex_degree(d: Deck, card_index: int) -> int:
    if d.kind is not DeckKind.VERTEX:
        raise PreconditionError("vertex degrees need a vertex deck")
    _, m = deck_basics(d)
    return m - d.card(card_index).m


def degree_sequence_from_deck(d: Deck) -> list[int]:
    return sorted((deleted_vertex_degree(d, i) for i in range(len(d))), reverse=True)


def neighbourhood_degrees_from_deck(d: Deck, card_index: int) -> list[int]:
    """Degrees in G of the neighbours of the deleted vertex, non-increasing.

    Neighbours lose one degree on the card; everything else keeps its degree,
    so walking the degree counts from the top recovers how many neighbours
    had each degree.
    """
    whole = Counter(degree_sequence_from_deck(d))
    whole[deleted_vertex_degree(d, card_index)] -= 1
    card = Counter(d.card(card_index).degrees())
    neighbours: list[int] = []
    carried = 0
    for degree in range(max(whole, default=0), 0, -1):
        # count_card(k) = count_whole(k) - a_k + a_{k+1}
        carried = whole[degree] - card[degree] + carried
        if carried < 0:
            raise DeckInconsistencyError(f"card {card_index} has too many vertices of degree {degree}")
        neighbours.extend([degree] * carried)
    logger.debug("card %d neighbour degrees %s", card_index, neighbours)
    return neighbours
