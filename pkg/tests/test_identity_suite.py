from collections import Counter
from itertools import combinations

import pytest

from catalog_search.enumerate import enumerate_graphs
from deck_kit.deck import deck
from deck_kit.pseudo import pseudo_similar_vertices
from graph_core.canon import canon_key
from graph_core.errors import DeckInconsistencyError, GraphError, PreconditionError
from graph_core.graph import delete_vertex
from graph_core.named import complete_graph, cycle_graph, path_graph
from graph_core.orbits import vertex_orbits
from identity_suite.catalog import catalog, entry
from identity_suite.deductions import (
    PAW_PAIR,
    derive_rooted_counts_from_deck,
    direct_rooted_counts,
    nonreconstructibility_report,
)
from identity_suite.identities import IDENTITIES, eval_all, eval_identity


def test_catalog_entries_are_distinct_rooted_graphs():
    items = catalog()
    assert len(items) == 16
    assert len({canon_key(item.graph) for item in items}) == 16


def test_catalog_roots_lie_in_distinct_orbits():
    by_graph = {}
    for item in catalog():
        by_graph.setdefault(canon_key(item.graph.graph), []).append(item.graph)
    for rooted_versions in by_graph.values():
        graph = rooted_versions[0].graph
        orbits = vertex_orbits(graph)
        blocks = [orbits.block_of(x.root) for x in rooted_versions if x.graph == graph]
        assert len(blocks) == len(set(blocks))


@pytest.mark.parametrize(
    "name, root_degree, edges",
    [("E1", 1, 1), ("P3c", 2, 2), ("K13l", 1, 3), ("paw1", 1, 4), ("paw2", 2, 4), ("paw3", 3, 4),
     ("dia2", 2, 5), ("dia3", 3, 5), ("K4r", 3, 6)],
)
def test_catalog_root_degrees(name, root_degree, edges):
    x = entry(name).graph
    assert x.graph.degree(x.root) == root_degree
    assert x.graph.m == edges


def test_worked_identity_values():
    assert eval_identity("I4", complete_graph(4), 0).values == (3, 3, 3)
    assert eval_identity("I2", complete_graph(3), 1).values == (1, 1, 1)
    assert eval_identity("I7", cycle_graph(4), 2).values == (2, 2)
    record = eval_identity("I6", path_graph(4), 1)
    assert record.holds
    assert record.to_dict()["lhs"] == record.lhs == 1


def test_eval_identity_errors():
    with pytest.raises(GraphError):
        eval_identity("I1", path_graph(3), 3)
    with pytest.raises(KeyError):
        eval_identity("I8", path_graph(3), 0)


def _check_identities(graphs):
    for g in graphs:
        for record in eval_all(g):
            assert record.holds, (g, record)


def test_identities_up_to_five_vertices(all_graphs):
    _check_identities(g for n in range(1, 6) for g in all_graphs[n])


@pytest.mark.slow
def test_identities_on_six_and_seven_vertices(all_graphs):
    _check_identities(all_graphs[6])
    _check_identities(enumerate_graphs(7))


def test_every_identity_is_evaluated():
    assert [d.id for d in IDENTITIES] == [f"I{i}" for i in range(1, 8)]
    assert len(eval_all(cycle_graph(5))) == 5 * 7


def test_deductions_on_c5_and_k5():
    values = derive_rooted_counts_from_deck(deck(cycle_graph(5)), 0)
    assert values["d_v"] == 2
    assert values["s(P3c)"] == 1
    assert values["i(K3r)"] == 0
    assert values["s(P3e)"] == 2
    assert values["s(P4i)"] == 2
    assert derive_rooted_counts_from_deck(deck(complete_graph(5)), 3)["s(paw3)"] == 12


def test_small_decks_give_partial_deductions():
    values = derive_rooted_counts_from_deck(deck(cycle_graph(4)), 0)
    assert "s(P3e)" in values
    assert "s(paw3)" not in values
    assert set(derive_rooted_counts_from_deck(deck(path_graph(3)), 1)) == {"d_v", "s(E1)", "i(E1)"}
    with pytest.raises(DeckInconsistencyError):
        derive_rooted_counts_from_deck(deck(path_graph(2)), 0)


def _as_row(values: dict) -> tuple:
    return tuple(sorted(values.items()))


def test_deductions_match_direct_counts(all_graphs):
    for n in (4, 5, 6):
        for g in all_graphs[n]:
            d = deck(g)
            derived = Counter(_as_row(derive_rooted_counts_from_deck(d, i)) for i in range(len(d)))
            direct = Counter(_as_row(direct_rooted_counts(g, v)) for v in range(g.n))
            assert derived == direct, g


def test_paw_pair_sum_depends_only_on_the_card(all_graphs):
    for n in (5, 6):
        for g in all_graphs[n]:
            cards = [canon_key(delete_vertex(g, v)) for v in range(n)]
            for u, v in combinations(range(n), 2):
                if cards[u] == cards[v]:
                    assert direct_rooted_counts(g, u)[PAW_PAIR] == direct_rooted_counts(g, v)[PAW_PAIR]


def test_report_requires_pseudo_similar_pair():
    with pytest.raises(PreconditionError):
        nonreconstructibility_report(cycle_graph(4), 0, 1)
    with pytest.raises(PreconditionError):
        nonreconstructibility_report(path_graph(4), 0, 1)


@pytest.mark.slow
def test_reports_on_seven_vertex_witnesses():
    for g in enumerate_graphs(7, connected_only=True):
        for u, v in pseudo_similar_vertices(g).pseudo_similar:
            report = nonreconstructibility_report(g, u, v)
            rows = {row.label: row for row in report.rows}
            assert not rows["s(paw3)"].differs
            assert not rows["s(P4e)"].differs
            assert rows["s(paw1)"].at_u + rows["s(paw2)"].at_u == rows["s(paw1)"].at_v + rows["s(paw2)"].at_v
