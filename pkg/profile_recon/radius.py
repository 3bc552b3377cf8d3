from __future__ import annotations

from enum import Enum
from typing import Union

from deck_kit.deck import Deck, DeckKind
from graph_core.errors import PreconditionError
from graph_core.metric import is_connected, radius


class RadiusSignal(str, Enum):
    TREE_OR_DISCONNECTED = "tree-or-disconnected"


def radius_from_edge_deck(d: Deck) -> Union[int, RadiusSignal]:
    """r(G) from ED(G) whenever some card is connected.

    A connected card means G is connected and not a tree. A connected
    non-tree loses no radius under some edge deletion, and no deletion ever
    lowers the radius, so r(G) is the least card radius.
    """
    if d.kind is not DeckKind.EDGE:
        raise PreconditionError("the radius argument needs an edge deck")
    radii = [radius(entry.card) for entry in d.entries if is_connected(entry.card)]
    if not radii:
        return RadiusSignal.TREE_OR_DISCONNECTED
    return min(radii)
