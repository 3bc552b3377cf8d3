"""Deck files: one card per line as graph6 with a multiplicity suffix.

    # vertex deck
    Bw ×4

A leading "# vertex deck" / "# edge deck" line names the kind; "x" is accepted
in place of "×".
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Optional

from catalog_search.graph6 import parse_graph6, write_graph6
from graph_core.errors import Graph6Error, PreconditionError

from .deck import Deck, DeckKind

_CARD_LINE = re.compile(r"^(\S+)\s*[×x]\s*(\d+)$")
_KIND_LINE = re.compile(r"^#\s*(vertex|edge)\s+deck\s*$")


def deck_to_text(d: Deck) -> str:
    lines = [f"# {d.kind.value} deck"]
    lines.extend(f"{write_graph6(entry.card)} ×{entry.multiplicity}" for entry in d.entries)
    return "\n".join(lines) + "\n"


def _expect_kind(found: DeckKind, expected: Optional[DeckKind]) -> DeckKind:
    if expected is not None and DeckKind(expected) is not found:
        raise PreconditionError(f"expected a {DeckKind(expected).value} deck, the file holds a {found.value} deck")
    return found


def deck_from_text(text: str, kind: Optional[DeckKind] = None) -> Deck:
    cards = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        header = _KIND_LINE.match(line)
        if header:
            kind = _expect_kind(DeckKind(header.group(1)), kind)
            continue
        if line.startswith("#"):
            continue
        match = _CARD_LINE.match(line)
        if not match:
            # a bare graph6 line is a card of multiplicity one
            cards.append(parse_graph6(line, line_number))
            continue
        multiplicity = int(match.group(2))
        if multiplicity < 1:
            raise Graph6Error(f"multiplicity must be at least 1, got {multiplicity}", line_number)
        cards.extend([parse_graph6(match.group(1), line_number)] * multiplicity)
    if kind is None:
        raise Graph6Error("deck kind missing: add a '# vertex deck' or '# edge deck' line")
    return Deck.from_cards(DeckKind(kind), cards)


def deck_to_json(d: Deck) -> dict:
    return {
        "kind": d.kind.value,
        "cards": [
            {"key": entry.key.hex(), "graph6": write_graph6(entry.card), "multiplicity": entry.multiplicity}
            for entry in d.entries
        ],
    }


def deck_from_json(data: dict) -> Deck:
    cards = []
    for item in data["cards"]:
        cards.extend([parse_graph6(item["graph6"])] * int(item["multiplicity"]))
    return Deck.from_cards(DeckKind(data["kind"]), cards)


def write_deck(path: str | Path, d: Deck, fmt: str = "text") -> None:
    with open(path, "w", encoding="utf-8") as handle:
        if fmt == "json":
            json.dump(deck_to_json(d), handle, indent=2)
            handle.write("\n")
        else:
            handle.write(deck_to_text(d))


def read_deck(path: str | Path, kind: Optional[DeckKind] = None) -> Deck:
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        try:
            d = deck_from_json(json.loads(text))
        except (KeyError, ValueError) as exc:
            raise Graph6Error(f"malformed JSON deck: {exc}") from exc
        _expect_kind(d.kind, kind)
        return d
    return deck_from_text(text, kind)
