import json

import pytest

from catalog_search.graph6 import write_graph6_file
from cli import get_command
from deck_kit.deck import deck, edge_deck
from deck_kit.serialize import deck_from_text, read_deck
from graph_core.named import cycle_graph, path_graph
from main import main


@pytest.fixture
def graph_file(tmp_path):
    def write(name, graph):
        path = tmp_path / f"{name}.g6"
        write_graph6_file(path, [graph])
        return str(path)

    return write


def test_deck_to_file(graph_file, tmp_path):
    out = tmp_path / "c4.deck"
    assert main(["deck", graph_file("c4", cycle_graph(4)), "-o", str(out)]) == 0
    assert read_deck(out) == deck(cycle_graph(4))


def test_deck_to_stdout(graph_file, capsys):
    assert main(["deck", graph_file("c4", cycle_graph(4)), "--kind", "edge"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# edge deck"
    assert lines[1].endswith("×4")
    assert lines[-1] == "# automorphism group order 8"
    assert deck_from_text("\n".join(lines)) == edge_deck(cycle_graph(4))


def test_deck_report_as_json(graph_file, capsys):
    assert main(["deck", graph_file("p4", path_graph(4)), "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "vertex"
    assert report["automorphism_order"] == 2


def test_count_at_vertex_and_rooted(graph_file, capsys):
    pattern, host = graph_file("p3", path_graph(3)), graph_file("c4", cycle_graph(4))
    assert main(["count", pattern, host, "--vertex", "0"]) == 0
    assert capsys.readouterr().out.strip().endswith("= 3")
    assert main(["count", pattern, host, "--vertex", "0", "--root", "1", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["value"] == 1
    assert report["rooted"] == "root-coincident"


def test_count_pattern_larger_than_host(graph_file, capsys):
    assert main(["count", graph_file("p5", path_graph(5)), graph_file("c4", cycle_graph(4))]) == 0
    assert capsys.readouterr().out.strip().endswith("= 0")


def test_reconstruct_vertex_deck_with_verify(graph_file, tmp_path):
    truth = graph_file("p5", path_graph(5))
    deck_file = tmp_path / "p5.deck"
    assert main(["deck", truth, "-o", str(deck_file)]) == 0
    prefix = tmp_path / "p5"
    assert main(["reconstruct", str(deck_file), "--k", "1", "--verify", "--graph", truth, "-o", str(prefix)]) == 0
    assert (tmp_path / "p5.verdict").read_text().strip() == "verdict: equal"
    assert (tmp_path / "p5.trace.txt").exists()


def test_reconstruct_edge_deck_as_json(graph_file, tmp_path):
    truth = graph_file("c6", cycle_graph(6))
    deck_file = tmp_path / "c6.deck"
    assert main(["deck", truth, "--kind", "edge", "-o", str(deck_file)]) == 0
    assert read_deck(deck_file) == edge_deck(cycle_graph(6))
    prefix = str(tmp_path / "c6")
    args = ["reconstruct", str(deck_file), "--k", "2", "--verify", "--graph", truth, "--format", "json", "-o", prefix]
    assert main(args) == 0
    profile = json.loads((tmp_path / "c6.profile.json").read_text())
    assert profile["total"] == 6
    assert json.loads((tmp_path / "c6.verdict").read_text())["verdict"] == "equal"


def test_reconstruct_refuses_when_radius_is_too_small(graph_file, tmp_path):
    truth = graph_file("p5", path_graph(5))
    deck_file = tmp_path / "p5.deck"
    main(["deck", truth, "-o", str(deck_file)])
    prefix = str(tmp_path / "p5k3")
    assert main(["reconstruct", str(deck_file), "--k", "3", "--verify", "--graph", truth, "-o", prefix]) == 2
    assert "precondition-failed" in (tmp_path / "p5k3.verdict").read_text()


def test_usage_and_parse_errors(graph_file):
    assert main(["count"]) == 1
    assert main(["count", "Bg"]) == 1
    assert main(["count", "B!", "C~"]) == 1
    assert main(["reconstruct", "missing.deck", "--kind", "edge", "--k", "1"]) == 1


def test_kind_that_contradicts_the_deck_file(graph_file, tmp_path, capsys):
    deck_file = tmp_path / "c6.deck"
    assert main(["deck", graph_file("c6", cycle_graph(6)), "-o", str(deck_file)]) == 0
    assert main(["reconstruct", str(deck_file), "--kind", "edge", "--k", "2"]) == 1
    assert "holds a vertex deck" in capsys.readouterr().err


@pytest.mark.parametrize(
    "args",
    [
        ["sweep", "identities", "--max-n", "4"],
        ["sweep", "roundtrip", "--min-n", "4", "--max-n", "5"],
        ["sweep", "radius", "--max-n", "5"],
    ],
)
def test_sweeps_report_no_failures(args, capsys):
    assert main(args) == 0
    assert "0 failures" in capsys.readouterr().out


def test_search_sweep_as_json_lines(capsys):
    assert main(["sweep", "search", "--max-n", "5", "--kind", "edge", "--format", "json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    summary = json.loads(lines[-1])
    assert summary["suite"] == "search"
    assert summary["witnesses"] == len(lines) - 1


def test_unknown_command():
    with pytest.raises(ValueError):
        get_command("plot")
