import json

import pytest

from labeled_pants import homology as hm
from labeled_pants import pants_graph as pg
from labeled_pants import scripts
from labeled_pants.dsl import IllegalMove, Move, ScriptError, format_script, parse_script
from labeled_pants.hexagon_orbits import HexLabeling, reflect, rotate, switch
from labeled_pants.replay import MODELS, dump_state, load_state, replay
from labeled_pants.torus_handle import Slope


def test_parse_basic():
    moves = parse_script("# header\n\ntwist 2 +  # trailing\nflip 1 A\nflip 3 + -\n"
                         "s_move 1\nswitch 2\nrotate\nreflect\n")
    assert [m.op for m in moves] == ["twist", "flip", "flip", "s_move", "switch",
                                     "rotate", "reflect"]
    assert moves[0].label == 2 and moves[0].direction == 1 and moves[0].lineno == 3
    assert moves[1].choice == "A"
    assert moves[2].signs == (1, -1)


@pytest.mark.parametrize("text,lineno", [
    ("twist 1 +\nwiggle 2", 2),
    ("twist 1", 1),
    ("twist 1 *", 1),
    ("\n\nflip 1 C", 3),
    ("flip 1 + + +", 1),
    ("switch 4", 1),
    ("rotate 1", 1),
    ("twist 0 +", 1),
    ("twist x +", 1),
    ("s_move", 1),
])
def test_parse_errors_report_line(text, lineno):
    with pytest.raises(ScriptError) as exc:
        parse_script(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_format_round_trip():
    moves = parse_script(scripts.read("fig12"))
    again = parse_script(format_script(moves, header="reflection"))
    assert [m.text() for m in again] == [m.text() for m in moves]


def test_shipped_files_present():
    names = scripts.available()
    for f in scripts.SCRIPTS.values():
        assert f in names
    for name in scripts.SCRIPTS:
        assert parse_script(scripts.read(name))


def test_shipped_scripts_do_not_cite_sources():
    for name in scripts.available():
        text = scripts.read(name).lower()
        assert "fig." not in text and "lemma" not in text


# -- each model -------------------------------------------------------------------


def test_graph_pentagon_replay():
    g = load_state("graph", scripts.read("path05.graph"))
    out = replay("graph", g, parse_script(scripts.read("fig7")))
    assert pg.canonical_certificate(out) == pg.canonical_certificate(g.relabel({1: 2, 2: 1}))


def test_graph_s12_replay():
    g = load_state("graph", scripts.read("s12.graph"))
    assert g == pg.standard_graph(pg.SurfaceSig(1, 2))
    out = replay("graph", g, parse_script(scripts.read("fig10")))
    assert pg.canonical_certificate(out) == pg.canonical_certificate(g.relabel({1: 2, 2: 1}))


def test_torus_replay():
    s = load_state("torus", scripts.read("handle.torus"))
    out = replay("torus", s, parse_script(scripts.read("fig9")))
    assert out == {1: Slope(0, 1), 2: Slope(1, 0)}


def test_hexagon_rotation_replay():
    h = load_state("hexagon", scripts.read("hexagon.state"))
    out = replay("hexagon", h, parse_script(scripts.read("fig11")))
    assert out.positions == (6, 1, 4, 2, 5, 3)


def test_hexagon_reflection_replay():
    h = load_state("hexagon", scripts.read("hexagon.state"))
    out = replay("hexagon", h, parse_script(scripts.read("fig12")))
    assert out.positions == (6, 3, 5, 2, 4, 1)


def test_homology_reflection_replay():
    s = load_state("homology", scripts.read("hexagon.json"))
    out = replay("homology", s, parse_script(scripts.read("fig12")))
    order = [s.label_of(nm) for nm in hm.HEXAGON_NAMES]
    assert hm.matches_up_to_sign(out, hm.permuted_target(s, order, order[::-1]))


def test_hexagon_combinatorial_moves_mix_with_twists():
    h = HexLabeling((1, 4, 2, 5, 3, 6))
    moves = parse_script(scripts.read("fig11") + "reflect\nswitch 1\n")
    out = replay("hexagon", h, moves)
    assert out == switch(reflect(rotate(h)), 1)


@pytest.mark.parametrize("model,state", [
    ("graph", "path05.graph"), ("homology", "hexagon.json"),
    ("hexagon", "hexagon.state"), ("torus", "handle.torus"),
])
def test_empty_script_echoes(model, state):
    s = load_state(model, scripts.read(state))
    assert replay(model, s, []) == s
    assert dump_state(model, replay(model, s, [])) == dump_state(model, s)


@pytest.mark.parametrize("model,state", [
    ("graph", "path05.graph"), ("graph", "s12.graph"), ("homology", "hexagon.json"),
    ("hexagon", "hexagon.state"), ("hexagon", "hexagon-strict.state"),
    ("torus", "handle.torus"),
])
def test_state_round_trip(model, state):
    s = load_state(model, scripts.read(state))
    back = load_state(model, dump_state(model, s))
    if model == "homology":
        assert back.classes == s.classes and back.relations == s.relations
    else:
        assert back == s


# -- illegal moves ---------------------------------------------------------------------


@pytest.mark.parametrize("model,state,script,index", [
    ("hexagon", "hexagon-strict.state", "switch 1", 1),
    ("hexagon", "hexagon.state", "rotate\ns_move 1", 2),
    ("graph", "path05.graph", "flip 1 A\ntwist 1 +", 2),
    ("graph", "path05.graph", "flip 9 A", 1),
    ("graph", "path05.graph", "flip 1 + +", 1),
    ("torus", "handle.torus", "flip 1 A", 1),
    ("torus", "handle.torus", "twist 3 +", 1),
    ("homology", "hexagon.json", "twist 1 +\nflip 2 A", 2),
    ("homology", "hexagon.json", "rotate", 1),
])
def test_illegal_move_index(model, state, script, index):
    s = load_state(model, scripts.read(state))
    with pytest.raises(IllegalMove) as exc:
        replay(model, s, parse_script(script))
    assert exc.value.index == index
    assert f"move {index}" in str(exc.value)


def test_hexagon_twist_leaving_hexagon_is_illegal():
    h = load_state("hexagon", scripts.read("hexagon.state"))
    with pytest.raises(IllegalMove):
        replay("hexagon", h, parse_script("twist 1 +"))


def test_unknown_model():
    with pytest.raises(ValueError):
        load_state("sphere", "")
    assert MODELS == ("graph", "homology", "hexagon", "torus")


def test_move_text():
    assert Move("flip", ("3", "+", "-")).text() == "flip 3 + -"
    assert json.loads(scripts.read("handle.torus")) == {"1": "1/0", "2": "0/1"}
