"""Recovering S_k(G) from the deck and T_k(G) from the edge deck.

For every candidate ball A (rooted at u or at an edge e) the deck yields the
number of rooted copies of A in G, and that number is the sum over balls B of
G of the copies of A inside B with coincident roots. Among connected
candidates ordered by non-increasing edge count the system is unit lower
triangular, so the multiplicities fall out one candidate at a time.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from catalog_search.graph6 import write_graph6
from counting.counts import Mode, count_edge_root_coincident, count_root_coincident
from deck_kit.deck import Deck, DeckKind, deck_basics
from deck_kit.kelly import kelly_count_from_deck
from graph_core.canon import CanonKey, canon_key
from graph_core.errors import DeckInconsistencyError, PreconditionError
from graph_core.orbits import edge_orbits, vertex_orbits

from .profiles import BallProfile, RootedGraph, ball_to_json, s_profile, t_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Term:
    """One subtracted term s(A_i, A_j) * n(A_j)."""

    index: int
    coefficient: int
    multiplicity: int


@dataclass(frozen=True)
class TraceStep:
    key: CanonKey
    ball: RootedGraph
    edges: int
    lhs: int
    terms: tuple[Term, ...]
    diagonal: int
    multiplicity: int


@dataclass
class SolveTrace:
    kind: DeckKind
    k: int
    steps: list[TraceStep] = field(default_factory=list)

    @property
    def multiplicities(self) -> list[int]:
        return [step.multiplicity for step in self.steps]

    @property
    def mass(self) -> int:
        return sum(self.multiplicities)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "k": self.k,
            "candidates": [
                {
                    "index": i + 1,
                    "key": step.key.hex(),
                    **ball_to_json(step.ball),
                    "lhs": step.lhs,
                    "terms": [
                        {"index": t.index + 1, "coefficient": t.coefficient, "multiplicity": t.multiplicity}
                        for t in step.terms
                    ],
                    "diagonal": step.diagonal,
                    "multiplicity": step.multiplicity,
                }
                for i, step in enumerate(self.steps)
            ],
        }


def _candidates(d: Deck, k: int, profile_of: Callable, min_order: int = 1) -> list[RootedGraph]:
    """Distinct rooted balls over all cards with at least min_order vertices, in solve order."""
    balls: dict[CanonKey, RootedGraph] = {}
    dropped = 0
    for entry in d.entries:
        for profile_entry in profile_of(entry.card, k).entries:
            if profile_entry.ball.graph.n < min_order:
                dropped += 1
                continue
            balls.setdefault(profile_entry.key, profile_entry.ball)
    if dropped:
        logger.debug("skipped %d card balls on fewer than %d vertices", dropped, min_order)
    return sorted(balls.values(), key=lambda ball: (-ball.graph.m, canon_key(ball)))


def vertex_lhs(ball, d: Deck) -> int:
    """s(A^u, G) = |Orbit_A(u)| * s(A, G), the second factor from the deck."""
    return vertex_orbits(ball.graph).size_of(ball.root) * kelly_count_from_deck(ball.graph, d, Mode.SUBGRAPH)


def edge_lhs(ball, d: Deck) -> int:
    return edge_orbits(ball.graph).size_of(ball.root_edge) * kelly_count_from_deck(ball.graph, d, Mode.SUBGRAPH)


def _left_hand_sides(candidates: Sequence[RootedGraph], d: Deck, lhs: Callable, jobs: int) -> list[int]:
    if jobs > 1 and len(candidates) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lhs, candidates, [d] * len(candidates)))
    return [lhs(ball, d) for ball in candidates]


def _solve(
    d: Deck,
    k: int,
    kind: DeckKind,
    profile_of: Callable,
    lhs: Callable,
    coefficient: Callable,
    expected: int,
    jobs: int,
    min_order: int = 1,
) -> tuple[BallProfile, SolveTrace]:
    candidates = _candidates(d, k, profile_of, min_order)
    sides = _left_hand_sides(candidates, d, lhs, jobs)
    trace = SolveTrace(kind, k)
    for i, (ball, side) in enumerate(zip(candidates, sides)):
        terms = []
        for j, earlier in enumerate(trace.steps):
            if earlier.multiplicity == 0:
                continue
            c = coefficient(ball, earlier.ball)
            if c:
                terms.append(Term(j, c, earlier.multiplicity))
        multiplicity = side - sum(t.coefficient * t.multiplicity for t in terms)
        step = TraceStep(
            canon_key(ball), ball, ball.graph.m, side, tuple(terms), coefficient(ball, ball), multiplicity
        )
        trace.steps.append(step)
        logger.debug("candidate %d (%d edges): lhs=%d multiplicity=%d", i + 1, ball.graph.m, side, multiplicity)
        if multiplicity < 0:
            raise DeckInconsistencyError(
                f"candidate {i + 1} ({write_graph6(ball.graph)}) gets multiplicity {multiplicity}",
                candidate=step,
                trace=trace,
            )
    if trace.mass != expected:
        raise DeckInconsistencyError(
            f"multiplicities sum to {trace.mass}, expected {expected}", candidate=None, trace=trace
        )
    profile = BallProfile.from_counts(kind, k, ((s.ball, s.multiplicity) for s in trace.steps))
    return profile, trace


def _vertex_coefficient(a, b) -> int:
    return count_root_coincident(a, b, Mode.SUBGRAPH)


def reconstruct_s_profile(d: Deck, k: int, jobs: int = 1) -> tuple[BallProfile, SolveTrace]:
    """S_k(G) from D(G), for connected G with radius greater than k (caller-asserted)."""
    if d.kind is not DeckKind.VERTEX:
        raise PreconditionError("S_k reconstruction needs a vertex deck")
    if k < 0:
        raise PreconditionError(f"k must be non-negative, got {k}")
    n, _ = deck_basics(d)
    logger.debug("reconstructing S_%d from a deck of %d cards", k, n)
    # a connected graph of radius above k has a k-path from every vertex, so its k-balls have k + 1 vertices or more
    return _solve(d, k, DeckKind.VERTEX, s_profile, vertex_lhs, _vertex_coefficient, n, jobs, min_order=k + 1)


def reconstruct_t_profile(d: Deck, k: int, jobs: int = 1) -> tuple[BallProfile, SolveTrace]:
    """T_k(G) from ED(G), for connected G with radius greater than k > 1 (caller-asserted)."""
    if d.kind is not DeckKind.EDGE:
        raise PreconditionError("T_k reconstruction needs an edge deck")
    if k < 2:
        raise PreconditionError(f"T_k reconstruction needs k > 1, got {k}")
    _, m = deck_basics(d)
    logger.debug("reconstructing T_%d from an edge deck of %d cards", k, m)
    return _solve(d, k, DeckKind.EDGE, t_profile, edge_lhs, count_edge_root_coincident, m, jobs)
