from .commands import cmd_count, cmd_deck, cmd_reconstruct, cmd_sweep

COMMANDS = {
    "deck": cmd_deck,
    "count": cmd_count,
    "reconstruct": cmd_reconstruct,
    "sweep": cmd_sweep,
}


def get_command(name):
    if name in COMMANDS:
        return COMMANDS[name]
    else:
        raise ValueError(f"Unsupported command: {name}")
