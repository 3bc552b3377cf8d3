from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from graph_core.canon import CanonKey, canon_key, canonical_form
from graph_core.errors import DeckInconsistencyError, PreconditionError
from graph_core.graph import Graph, delete_edge, delete_vertex


class DeckKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class DeckEntry:
    key: CanonKey
    card: Graph  # canonical representative
    multiplicity: int


@dataclass(frozen=True)
class Deck:
    """Multiset of unlabelled cards, sorted by canonical key."""

    kind: DeckKind
    entries: tuple[DeckEntry, ...]

    @classmethod
    def from_cards(cls, kind: DeckKind, cards: Iterable[Graph]) -> "Deck":
        representatives: dict[CanonKey, Graph] = {}
        counter: Counter = Counter()
        for card in cards:
            key = canon_key(card)
            representatives.setdefault(key, canonical_form(card))
            counter[key] += 1
        entries = tuple(DeckEntry(key, representatives[key], counter[key]) for key in sorted(counter))
        return cls(DeckKind(kind), entries)

    def __len__(self) -> int:
        return sum(entry.multiplicity for entry in self.entries)

    def cards(self) -> list[Graph]:
        """Every card, repeated by multiplicity, in key order; card_index refers to this list."""
        return [entry.card for entry in self.entries for _ in range(entry.multiplicity)]

    def card(self, card_index: int) -> Graph:
        cards = self.cards()
        if not 0 <= card_index < len(cards):
            raise PreconditionError(f"card index {card_index} out of range 0..{len(cards) - 1}")
        return cards[card_index]

    def index_of(self, key: CanonKey) -> int:
        position = 0
        for entry in self.entries:
            if entry.key == key:
                return position
            position += entry.multiplicity
        raise PreconditionError("no card with that key in the deck")

    def multiplicity(self, key: CanonKey) -> int:
        return next((entry.multiplicity for entry in self.entries if entry.key == key), 0)

    @property
    def card_orders(self) -> tuple[int, ...]:
        return tuple(entry.card.n for entry in self.entries)


def deck(graph: Graph) -> Deck:
    """D(G): the vertex-deleted subgraphs."""
    return Deck.from_cards(DeckKind.VERTEX, (delete_vertex(graph, v) for v in range(graph.n)))


def edge_deck(graph: Graph) -> Deck:
    """ED(G): the edge-deleted subgraphs."""
    return Deck.from_cards(DeckKind.EDGE, (delete_edge(graph, e) for e in graph.sorted_edges()))


def deck_basics(d: Deck) -> tuple[int, int]:
    """(v(G), e(G)) recovered from the deck alone."""
    if not d.entries:
        raise DeckInconsistencyError("empty deck")
    orders = set(d.card_orders)
    if len(orders) != 1:
        raise DeckInconsistencyError(f"cards have different orders {sorted(orders)}")
    order = orders.pop()
    if d.kind is DeckKind.EDGE:
        return order, len(d)
    n = len(d)
    if order != n - 1:
        raise DeckInconsistencyError(f"{n} cards on {order} vertices")
    total = sum(entry.card.m * entry.multiplicity for entry in d.entries)
    if n <= 2:
        # every edge survives in exactly n - 2 cards, which says nothing when n <= 2
        raise DeckInconsistencyError(f"edge count is not determined by a deck of {n} cards")
    if total % (n - 2):
        raise DeckInconsistencyError(f"card edges {total} not divisible by {n - 2}")
    return n, total // (n - 2)
