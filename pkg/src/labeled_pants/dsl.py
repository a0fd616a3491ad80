"""Move-script language shared by every model.

One move per line, ``#`` starts a comment::

    twist <label> <+|->
    flip <label> [A|B | <+|-> <+|->]
    s_move <label>
    switch <k>
    rotate
    reflect
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

OPCODES = ("twist", "flip", "s_move", "switch", "rotate", "reflect")


class ScriptError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class IllegalMove(ValueError):
    def __init__(self, index: int, move: "Move", message: str):
        super().__init__(f"move {index} ({move.text()}): {message}")
        self.index = index
        self.move = move


def _sign(tok: str) -> int:
    if tok not in ("+", "-"):
        raise ValueError(f"expected + or -, got {tok!r}")
    return 1 if tok == "+" else -1


@dataclass(frozen=True)
class Move:
    op: str
    args: tuple[str, ...] = ()
    lineno: int = 0

    @property
    def label(self) -> int:
        return int(self.args[0])

    @property
    def direction(self) -> int:
        return _sign(self.args[1])

    @property
    def choice(self) -> Optional[str]:
        return self.args[1] if len(self.args) == 2 else None

    @property
    def signs(self) -> tuple[int, int]:
        if len(self.args) != 3:
            raise ValueError("homology flips need two signs")
        return _sign(self.args[1]), _sign(self.args[2])

    def text(self) -> str:
        return " ".join((self.op,) + self.args)


def parse_script(text: str) -> list[Move]:
    moves = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        op, *args = line.split()
        if op not in OPCODES:
            raise ScriptError(lineno, f"unknown opcode {op!r}")
        try:
            _check_args(op, args)
        except ValueError as exc:
            raise ScriptError(lineno, str(exc)) from None
        moves.append(Move(op, tuple(args), lineno))
    return moves


def _check_args(op: str, args: list[str]) -> None:
    if op in ("rotate", "reflect"):
        if args:
            raise ValueError(f"{op} takes no arguments")
        return
    if not args:
        raise ValueError(f"{op} needs an argument")
    if int(args[0]) < 1:
        raise ValueError(f"labels start at 1, got {args[0]}")
    if op == "twist":
        if len(args) != 2:
            raise ValueError("usage: twist <label> <+|->")
        _sign(args[1])
    elif op == "flip":
        if len(args) == 2 and args[1] not in ("A", "B"):
            raise ValueError(f"flip choice must be A or B, got {args[1]!r}")
        if len(args) == 3:
            _sign(args[1]), _sign(args[2])
        if len(args) > 3:
            raise ValueError("usage: flip <label> [A|B | <+|-> <+|->]")
    elif op == "switch":
        if len(args) != 1 or args[0] not in ("1", "2", "3"):
            raise ValueError("usage: switch <1|2|3>")
    elif op == "s_move" and len(args) != 1:
        raise ValueError("usage: s_move <label>")


def format_script(moves: list[Move], header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    return "\n".join(lines + [m.text() for m in moves]) + "\n"
