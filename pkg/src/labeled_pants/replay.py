"""Replay move scripts on each model and read/write the model state files.

State file formats:

- ``graph``: the vertex/pairing/leg text format of ``LabeledPantsGraph``.
- ``homology``: JSON with integer class vectors keyed by label.
- ``hexagon``: ``1,4,2,5,3,6`` optionally followed by ``strict``/``labeled``.
- ``torus``: JSON mapping labels to ``p/q`` slopes.
"""

from __future__ import annotations

import json

from . import hexagon_orbits as hx
from . import homology as hm
from . import pants_graph as pg
from . import torus_handle as th
from .dsl import IllegalMove, Move

MODELS = ("graph", "homology", "hexagon", "torus")


def load_state(model: str, text: str):
    if model == "graph":
        return pg.LabeledPantsGraph.from_text(text)
    if model == "homology":
        return hm.HomologicalDoublePants.from_json(text)
    if model == "hexagon":
        return hx.HexLabeling.parse(text.split("#", 1)[0].strip())
    if model == "torus":
        return {int(k): th.Slope.parse(v) for k, v in json.loads(text).items()}
    raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")


def dump_state(model: str, state) -> str:
    if model == "graph":
        return state.to_text()
    if model == "homology":
        return state.to_json() + "\n"
    if model == "hexagon":
        return f"{state} {state.mode}\n"
    if model == "torus":
        return json.dumps({str(k): str(v) for k, v in sorted(state.items())}) + "\n"
    raise ValueError(f"unknown model {model!r}")


def replay(model: str, state, moves: list[Move]):
    step = {"graph": _graph_step, "homology": _homology_step,
            "torus": _torus_step}.get(model)
    if model == "hexagon":
        return _replay_hexagon(state, moves)
    if step is None:
        raise ValueError(f"unknown model {model!r}")
    for i, move in enumerate(moves, start=1):
        try:
            state = step(state, move)
        except (ValueError, KeyError) as exc:
            raise IllegalMove(i, move, _reason(exc)) from None
    return state


def _reason(exc: Exception) -> str:
    return exc.args[0] if exc.args else type(exc).__name__


def _graph_step(g: pg.LabeledPantsGraph, move: Move) -> pg.LabeledPantsGraph:
    if move.op == "flip":
        if len(move.args) > 2:
            raise ValueError("graph flips take a choice A or B")
        return pg.flip(g, move.label, move.choice)
    if move.op == "s_move":
        return pg.s_move(g, move.label)
    raise ValueError(f"{move.op} is not a graph move")


def _homology_step(s: hm.HomologicalDoublePants, move: Move) -> hm.HomologicalDoublePants:
    if move.op == "twist":
        return hm.apply_twist(s, move.label, move.direction)
    if move.op == "flip":
        return hm.apply_flip(s, move.label, move.signs)
    raise ValueError(f"{move.op} is not a homology move")


def _torus_step(state: dict, move: Move) -> dict:
    if move.op != "twist":
        raise ValueError(f"{move.op} is not a handle move")
    along = state[move.label]
    return {k: th.twist_slope(along, move.direction, v) for k, v in state.items()}


def _replay_hexagon(h: hx.HexLabeling, moves: list[Move]) -> hx.HexLabeling:
    """Combinatorial moves act on positions; twists and flips are tracked in
    homology and decoded back to positions once the curves return to the
    hexagon."""
    classes = None
    for i, move in enumerate(moves, start=1):
        try:
            if move.op in ("twist", "flip"):
                if classes is None:
                    classes = hm.hexagon_classes(h.positions)
                classes = _homology_step(classes, move)
                continue
            if classes is not None:
                h = decode_hexagon(classes, h.mode)
                classes = None
            if move.op == "rotate":
                h = hx.rotate(h)
            elif move.op == "reflect":
                h = hx.reflect(h)
            elif move.op == "switch":
                h = hx.switch(h, int(move.args[0]))
            else:
                raise ValueError(f"{move.op} is not a hexagon move")
        except (ValueError, KeyError) as exc:
            raise IllegalMove(i, move, _reason(exc)) from None
    if classes is not None:
        try:
            h = decode_hexagon(classes, h.mode)
        except ValueError as exc:
            raise IllegalMove(len(moves), moves[-1], _reason(exc)) from None
    return h


def decode_hexagon(state: hm.HomologicalDoublePants, mode: str) -> hx.HexLabeling:
    """Read back which label sits at each hexagon position, up to sign."""
    reference = [hm.CurveClass(hm.HEXAGON_TABLE[nm]) for nm in hm.HEXAGON_NAMES]
    positions = [None] * 6
    for k, c in state.classes.items():
        if c not in reference:
            raise ValueError(f"curve {k} ({c.symbolic()}) is not a hexagon curve")
        positions[reference.index(c)] = k
    if None in positions:
        raise ValueError("curves did not return to the hexagon")
    return hx.HexLabeling(tuple(positions), mode)
