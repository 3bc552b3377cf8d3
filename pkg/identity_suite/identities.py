"""Identities between rooted subgraph counts and induced counts at a vertex.

Every identity is a chain of expressions that must evaluate to the same
integer on every (G, v). Counts are root-coincident at v.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from counting.counts import Mode, count_root_coincident
from graph_core.graph import Graph, VertexRootedGraph, _check_vertex

from .catalog import rooted


def s(name: str, graph: Graph, v: int) -> int:
    return count_root_coincident(rooted(name), VertexRootedGraph(graph, v), Mode.SUBGRAPH)


def i(name: str, graph: Graph, v: int) -> int:
    return count_root_coincident(rooted(name), VertexRootedGraph(graph, v), Mode.INDUCED)


def _induced_sum(*terms: tuple[int, str]) -> Callable[[Graph, int], int]:
    return lambda g, v: sum(c * i(name, g, v) for c, name in terms)


@dataclass(frozen=True)
class Expression:
    text: str
    evaluate: Callable[[Graph, int], int]


@dataclass(frozen=True)
class IdentityDefinition:
    id: str
    expressions: tuple[Expression, ...]


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    vertex: int
    formulas: tuple[str, ...]
    values: tuple[int, ...]

    @property
    def lhs(self) -> int:
        return self.values[0]

    @property
    def rhs(self) -> int:
        return self.values[-1]

    @property
    def holds(self) -> bool:
        return len(set(self.values)) == 1

    def to_dict(self) -> dict:
        return {"id": self.id, "vertex": self.vertex, "lhs": self.lhs, "rhs": self.rhs,
                "values": list(self.values), "holds": self.holds}


def _degree(g: Graph, v: int) -> int:
    return g.degree(v)


IDENTITIES: tuple[IdentityDefinition, ...] = (
    IdentityDefinition("I1", (
        Expression("i(E1)", lambda g, v: i("E1", g, v)),
        Expression("s(E1)", lambda g, v: s("E1", g, v)),
        Expression("d_v", _degree),
    )),
    IdentityDefinition("I2", (
        Expression("s(P3c)", lambda g, v: s("P3c", g, v)),
        Expression("C(d_v,2)", lambda g, v: comb(_degree(g, v), 2)),
        Expression("i(P3c) + i(K3r)", _induced_sum((1, "P3c"), (1, "K3r"))),
    )),
    IdentityDefinition("I3", (
        Expression("s(K13c)", lambda g, v: s("K13c", g, v)),
        Expression("C(d_v,3)", lambda g, v: comb(_degree(g, v), 3)),
        Expression("i(K13c) + i(paw3) + i(dia3) + i(K4r)",
                   _induced_sum((1, "K13c"), (1, "paw3"), (1, "dia3"), (1, "K4r"))),
    )),
    IdentityDefinition("I4", (
        Expression("s(paw3)", lambda g, v: s("paw3", g, v)),
        Expression("i(K3r)(d_v-2)", lambda g, v: i("K3r", g, v) * (_degree(g, v) - 2)),
        Expression("i(paw3) + 2i(dia3) + 3i(K4r)", _induced_sum((1, "paw3"), (2, "dia3"), (3, "K4r"))),
    )),
    IdentityDefinition("I5", (
        Expression("s(K13l)", lambda g, v: s("K13l", g, v)),
        Expression("i(K13l) + i(paw2) + i(paw1) + i(dia3) + 2i(dia2) + 3i(K4r)",
                   _induced_sum((1, "K13l"), (1, "paw2"), (1, "paw1"), (1, "dia3"), (2, "dia2"), (3, "K4r"))),
    )),
    IdentityDefinition("I6", (
        Expression("s(P4i)", lambda g, v: s("P4i", g, v)),
        Expression("s(P3e)(d_v-1) - 2i(K3r)",
                   lambda g, v: s("P3e", g, v) * (_degree(g, v) - 1) - 2 * i("K3r", g, v)),
        Expression("i(P4i) + 2i(C4r) + i(paw2) + 2i(dia2) + 4i(dia3) + 6i(K4r) + 2i(paw3)",
                   _induced_sum((1, "P4i"), (2, "C4r"), (1, "paw2"), (2, "dia2"), (4, "dia3"), (6, "K4r"),
                                (2, "paw3"))),
    )),
    IdentityDefinition("I7", (
        Expression("s(P4e)", lambda g, v: s("P4e", g, v)),
        Expression("i(P4e) + 2i(C4r) + 2i(paw1) + i(paw2) + 2i(dia3) + 4i(dia2) + 6i(K4r)",
                   _induced_sum((1, "P4e"), (2, "C4r"), (2, "paw1"), (1, "paw2"), (2, "dia3"), (4, "dia2"),
                                (6, "K4r"))),
    )),
)


def identity(identity_id: str) -> IdentityDefinition:
    for definition in IDENTITIES:
        if definition.id == identity_id:
            return definition
    raise KeyError(f"unknown identity {identity_id!r}")


def eval_identity(identity_id: str, graph: Graph, v: int) -> IdentityRecord:
    _check_vertex(graph, v)
    definition = identity(identity_id)
    return IdentityRecord(
        definition.id,
        v,
        tuple(e.text for e in definition.expressions),
        tuple(e.evaluate(graph, v) for e in definition.expressions),
    )


def eval_all(graph: Graph) -> list[IdentityRecord]:
    return [eval_identity(d.id, graph, v) for v in range(graph.n) for d in IDENTITIES]
