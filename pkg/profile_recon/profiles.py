from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from catalog_search.graph6 import write_graph6
from counting.counts import Mode, count_root_coincident
from deck_kit.deck import DeckKind
from graph_core.canon import CanonKey, canon_key, canonical_form
from graph_core.errors import PreconditionError
from graph_core.graph import EdgeRootedGraph, Graph, VertexRootedGraph
from graph_core.metric import distances_from

from .balls import ball_edge, ball_vertex

RootedGraph = Union[VertexRootedGraph, EdgeRootedGraph]


@dataclass(frozen=True)
class ProfileEntry:
    key: CanonKey
    ball: RootedGraph  # canonical representative
    multiplicity: int


@dataclass(frozen=True)
class BallProfile:
    """S_k(G) (vertex kind) or T_k(G) (edge kind) as a multiset of rooted balls."""

    kind: DeckKind
    k: int
    entries: tuple[ProfileEntry, ...]

    @classmethod
    def from_balls(cls, kind: DeckKind, k: int, balls: Iterable[RootedGraph]) -> "BallProfile":
        representatives: dict[CanonKey, RootedGraph] = {}
        counter: Counter = Counter()
        for ball in balls:
            key = canon_key(ball)
            representatives.setdefault(key, canonical_form(ball))
            counter[key] += 1
        return cls.from_counts(kind, k, ((representatives[key], counter[key]) for key in counter))

    @classmethod
    def from_counts(cls, kind: DeckKind, k: int, items: Iterable[tuple[RootedGraph, int]]) -> "BallProfile":
        entries = [ProfileEntry(canon_key(ball), ball, multiplicity) for ball, multiplicity in items if multiplicity > 0]
        return cls(DeckKind(kind), k, tuple(sorted(entries, key=lambda e: e.key)))

    @property
    def total(self) -> int:
        return sum(entry.multiplicity for entry in self.entries)

    def as_counter(self) -> Counter:
        return Counter({entry.key: entry.multiplicity for entry in self.entries})

    def balls(self) -> list[RootedGraph]:
        return [entry.ball for entry in self.entries for _ in range(entry.multiplicity)]


def s_profile(graph: Graph, k: int) -> BallProfile:
    return BallProfile.from_balls(DeckKind.VERTEX, k, (ball_vertex(graph, v, k) for v in range(graph.n)))


def t_profile(graph: Graph, k: int) -> BallProfile:
    return BallProfile.from_balls(DeckKind.EDGE, k, (ball_edge(graph, e, k) for e in graph.sorted_edges()))


def rooted_count_multiset(profile: BallProfile, pattern: VertexRootedGraph, mode: Mode = Mode.SUBGRAPH) -> Counter:
    """The multiset {s(F^x, G^v) : v in V(G)} read off a vertex profile.

    Every copy of F^x rooted at v lies inside G_k^v as long as every vertex of
    F is within distance k of x.
    """
    if profile.kind is not DeckKind.VERTEX:
        raise PreconditionError("rooted counts need a vertex ball profile")
    reach = max(distances_from(pattern.graph, pattern.root))
    if reach > profile.k:
        raise PreconditionError(f"pattern reaches distance {reach} from its root, beyond k={profile.k}")
    values: Counter = Counter()
    for entry in profile.entries:
        values[count_root_coincident(pattern, entry.ball, mode)] += entry.multiplicity
    return values


def ball_to_json(ball: RootedGraph) -> dict:
    data = {"graph6": write_graph6(ball.graph), "edges": ball.graph.m}
    if isinstance(ball, VertexRootedGraph):
        data["root"] = ball.root
    else:
        data["root_edge"] = list(ball.root_edge)
    return data


def profile_to_json(profile: BallProfile) -> dict:
    return {
        "kind": profile.kind.value,
        "k": profile.k,
        "total": profile.total,
        "entries": [
            {"key": entry.key.hex(), **ball_to_json(entry.ball), "multiplicity": entry.multiplicity}
            for entry in profile.entries
        ],
    }
