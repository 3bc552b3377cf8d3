from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from counting.counts import Mode
from deck_kit.deck import DeckKind
from graph_core.errors import PreconditionError

FORMATS = ("text", "json")


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation: the parsed flags merged over load_config()."""

    command: str
    inputs: tuple[str, ...] = ()
    k: int = 1
    kind: Optional[DeckKind] = None
    mode: Mode = Mode.SUBGRAPH
    output_format: str = "text"
    verify: bool = False
    jobs: int = 1
    catalog: Optional[str] = None
    output: Optional[str] = None
    options: dict = field(default_factory=dict)
    settings: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 0:
            raise PreconditionError(f"--k must be non-negative, got {self.k}")
        if self.command == "reconstruct" and self.kind is DeckKind.EDGE and self.k < 2:
            raise PreconditionError(f"edge-ball reconstruction needs --k 2 or more, got {self.k}")
        if self.output_format not in FORMATS:
            raise PreconditionError(f"--format must be one of {', '.join(FORMATS)}, got {self.output_format!r}")
        if self.jobs < 1:
            raise PreconditionError(f"--jobs must be at least 1, got {self.jobs}")

    @classmethod
    def from_args(cls, args, config: dict) -> "RunConfig":
        known = {
            "command", "inputs", "pattern", "host", "k", "kind", "mode", "format", "verify", "jobs", "catalog", "output"
        }
        if hasattr(args, "pattern"):
            inputs = (args.pattern, args.host)
        else:
            inputs = tuple(getattr(args, "inputs", ()) or ())
        return cls(
            command=args.command,
            inputs=inputs,
            k=args.k,
            kind=DeckKind(args.kind) if args.kind else None,
            mode=Mode(args.mode),
            output_format=args.format or config["output_format"],
            verify=args.verify,
            jobs=args.jobs or config["jobs"],
            catalog=args.catalog,
            output=args.output,
            options={key: value for key, value in vars(args).items() if key not in known},
            settings=config,
        )
