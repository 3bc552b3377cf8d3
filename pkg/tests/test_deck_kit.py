from collections import Counter

import pytest

from counting.counts import Mode, count, count_at_vertex
from deck_kit.deck import Deck, DeckKind, deck, deck_basics, edge_deck
from deck_kit.kelly import (
    count_at_vertex_from_deck,
    degree_sequence_from_deck,
    kelly_count_from_deck,
    neighbourhood_degrees_from_deck,
)
from deck_kit.pseudo import is_pseudo_similar_pair, pseudo_similar_edges, pseudo_similar_vertices
from deck_kit.serialize import deck_from_json, deck_from_text, deck_to_json, deck_to_text, read_deck, write_deck
from graph_core.canon import is_isomorphic
from graph_core.errors import DeckInconsistencyError, Graph6Error, PreconditionError
from graph_core.named import complete_graph, cycle_graph, path_graph, paw, star_graph
from identity_suite.catalog import catalog

PATTERNS = sorted({entry.graph.graph for entry in catalog()}, key=lambda g: (g.n, g.m, g.sorted_edges()))


def test_deck_of_c4():
    d = deck(cycle_graph(4))
    assert len(d.entries) == 1
    assert d.entries[0].multiplicity == 4
    assert is_isomorphic(d.card(0), path_graph(3))
    assert deck_basics(d) == (4, 4)


def test_edge_deck_of_c4():
    d = edge_deck(cycle_graph(4))
    assert d.kind is DeckKind.EDGE
    assert [e.multiplicity for e in d.entries] == [4]
    assert is_isomorphic(d.card(3), path_graph(4))
    assert deck_basics(d) == (4, 4)


def test_deck_basics_rejects_bad_decks():
    with pytest.raises(DeckInconsistencyError, match="different orders"):
        deck_basics(Deck.from_cards(DeckKind.VERTEX, [path_graph(3), path_graph(2)]))
    with pytest.raises(DeckInconsistencyError):
        deck_basics(deck(complete_graph(2)))
    with pytest.raises(DeckInconsistencyError):
        deck_basics(Deck(DeckKind.VERTEX, ()))
    with pytest.raises(PreconditionError):
        deck(path_graph(4)).card(4)


def test_kelly_counts_match_direct_counts(connected_graphs):
    for n in range(3, 7):
        for g in connected_graphs[n]:
            d = deck(g)
            for pattern in PATTERNS:
                if pattern.n >= n:
                    continue
                for mode in Mode:
                    assert kelly_count_from_deck(pattern, d, mode) == count(pattern, g, mode)


def _check_edge_kelly_counts(graphs):
    for g in graphs:
        d = edge_deck(g)
        for pattern in PATTERNS:
            if pattern.m < g.m:
                assert kelly_count_from_deck(pattern, d) == count(pattern, g)


def test_edge_kelly_counts_match_direct_counts(connected_graphs):
    _check_edge_kelly_counts(g for n in range(3, 6) for g in connected_graphs[n])


@pytest.mark.slow
def test_edge_kelly_counts_on_six_vertices(connected_graphs):
    _check_edge_kelly_counts(connected_graphs[6])


def test_kelly_preconditions():
    with pytest.raises(PreconditionError):
        kelly_count_from_deck(path_graph(4), deck(cycle_graph(4)))
    with pytest.raises(PreconditionError):
        kelly_count_from_deck(path_graph(2), edge_deck(cycle_graph(4)), Mode.INDUCED)
    with pytest.raises(PreconditionError):
        kelly_count_from_deck(path_graph(5), edge_deck(cycle_graph(4)))


def test_counts_at_deleted_vertices(connected_graphs):
    for g in connected_graphs[5]:
        d = deck(g)
        for pattern in (path_graph(3), complete_graph(3), paw()):
            from_deck = Counter(count_at_vertex_from_deck(pattern, d, i) for i in range(len(d)))
            direct = Counter(count_at_vertex(pattern, g, v) for v in range(g.n))
            assert from_deck == direct


def test_degree_consequences(connected_graphs):
    for n in range(3, 7):
        for g in connected_graphs[n]:
            d = deck(g)
            assert degree_sequence_from_deck(d) == sorted(g.degrees(), reverse=True)
            from_deck = Counter(tuple(neighbourhood_degrees_from_deck(d, i)) for i in range(len(d)))
            direct = Counter(
                tuple(sorted((g.degree(u) for u in g.neighbors[v]), reverse=True)) for v in range(g.n)
            )
            assert from_deck == direct


def test_deck_text_format():
    d = deck(cycle_graph(4))
    text = deck_to_text(d)
    assert text.splitlines()[0] == "# vertex deck"
    assert text.splitlines()[1].endswith("×4")
    assert deck_from_text(text) == d
    assert deck_from_text(text.replace("×", "x")) == d
    bare = "\n".join(["# vertex deck"] + [text.splitlines()[1].split()[0]] * 4)
    assert deck_from_text(bare) == d


def test_deck_text_errors():
    with pytest.raises(Graph6Error, match="kind"):
        deck_from_text("Bg ×3\n")
    with pytest.raises(Graph6Error, match="line 2"):
        deck_from_text("# vertex deck\nB! ×3\n")


def test_deck_files(tmp_path):
    d = edge_deck(star_graph(3))
    write_deck(tmp_path / "star.txt", d)
    write_deck(tmp_path / "star.json", d, fmt="json")
    assert read_deck(tmp_path / "star.txt") == d
    assert read_deck(tmp_path / "star.json") == d
    assert deck_from_json(deck_to_json(d)) == d


def test_requested_kind_must_match_the_file(tmp_path):
    d = deck(cycle_graph(6))
    write_deck(tmp_path / "c6.txt", d)
    write_deck(tmp_path / "c6.json", d, fmt="json")
    assert read_deck(tmp_path / "c6.txt", DeckKind.VERTEX) == d
    for name in ("c6.txt", "c6.json"):
        with pytest.raises(PreconditionError, match="holds a vertex deck"):
            read_deck(tmp_path / name, DeckKind.EDGE)
    headerless = "\n".join(deck_to_text(d).splitlines()[1:])
    assert deck_from_text(headerless, DeckKind.VERTEX) == d


def test_similar_pairs_are_not_pseudo_similar():
    report = pseudo_similar_vertices(path_graph(4))
    assert report.similar == [(0, 3), (1, 2)]
    assert report.pseudo_similar == []
    assert pseudo_similar_edges(cycle_graph(4)).pseudo_similar == []
    assert not is_pseudo_similar_pair(cycle_graph(4), DeckKind.VERTEX, 0, 1)
    assert not is_pseudo_similar_pair(path_graph(4), DeckKind.VERTEX, 0, 1)
