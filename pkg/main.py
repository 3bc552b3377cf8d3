import argparse
import logging
import sys

from config import load_config
from cli import get_command
from cli.run_config import RunConfig
from cli.sweeps import SUITES
from graph_core.errors import CountingError, DeckInconsistencyError

config = load_config()

EXIT_USAGE = 1
EXIT_INCONSISTENT = 2


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=1, help="ball radius")
    common.add_argument("--kind", choices=["vertex", "edge"], default=None)
    common.add_argument("--mode", choices=["subgraph", "induced"], default="subgraph")
    common.add_argument("--format", choices=["text", "json"], default=None)
    common.add_argument("--verify", action="store_true", help="cross-check against ground truth")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (sweeps and left-hand sides)")
    common.add_argument("--catalog", default=None, help="graph6 catalog file")
    common.add_argument("--output", "-o", default=None, help="output file or prefix")

    parser = argparse.ArgumentParser(description="Graph reconstruction workbench")
    commands = parser.add_subparsers(dest="command", required=True)

    deck = commands.add_parser("deck", parents=[common], help="write the deck or edge deck of a graph")
    deck.add_argument("inputs", nargs=1, metavar="GRAPH")

    count = commands.add_parser("count", parents=[common], help="count copies of a pattern in a host")
    count.add_argument("pattern", metavar="PATTERN", help="pattern graph, graph6 or file")
    count.add_argument("host", metavar="HOST", help="host graph, graph6 or file")
    count.add_argument("--root", type=int, default=None, help="root vertex of the pattern")
    count.add_argument("--vertex", type=int, default=None, help="host vertex")

    reconstruct = commands.add_parser("reconstruct", parents=[common], help="recover the ball profile from a deck")
    reconstruct.add_argument("inputs", nargs=1, metavar="DECK")
    reconstruct.add_argument("--graph", default=None, help="ground-truth graph for --verify")

    sweep = commands.add_parser("sweep", parents=[common], help="run a check over a catalog")
    sweep.add_argument("suite", choices=SUITES)
    sweep.add_argument("--min-n", type=int, default=1)
    sweep.add_argument("--max-n", type=int, default=6)
    sweep.add_argument("--connected", action="store_true", help="identities over connected graphs only")
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage; 2 is reserved for inconsistent input
        return EXIT_USAGE if exc.code else 0
    logging.basicConfig(
        level=config["log_level"],
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        run = RunConfig.from_args(args, config)
        return get_command(run.command)(run)
    except (DeckInconsistencyError, CountingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
